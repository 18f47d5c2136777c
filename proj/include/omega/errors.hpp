#pragma once
#include <stdexcept>
#include <string>

namespace omega {

//! construction impossibility that indicates a bug or violated precondition
struct GeomError : std::runtime_error {
    explicit GeomError(const std::string& what) : std::runtime_error(what) {}
};

//! an exact claim the construction is supposed to guarantee did not hold;
//! either an implementation bug or a genuine counterexample, never a
//! degenerate draw — fuzzing reports these instead of redrawing
struct ClaimError : GeomError {
    explicit ClaimError(const std::string& what) : GeomError(what) {}
};

//! bad or degenerate user data (maps to exit code 65 in the CLI)
struct DataError : std::runtime_error {
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

//! bad command usage (maps to exit code 64 in the CLI)
struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace omega
