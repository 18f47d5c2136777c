#pragma once
#include "omega/approx.hpp"
#include "omega/circle.hpp"

#include <string>

namespace omega {

enum class CenterId { Omega, OmegaPrime, Centroid, Orthocenter, Circumcenter, Symmedian, AH, BH, CH };

//! CLI/JSON tag ("omega", "omega_prime", "centroid", ..., "aH", "bH", "cH")
std::string center_name(CenterId id);
CenterId center_from_name(const std::string& name);

//! exact areal coordinates of a named center
PtR center(CenterId id, const Metric& M);

enum class NamedCircleKind { Circumcircle, SevenPoint, Orthocentroidal };

std::string named_circle_name(NamedCircleKind kind);
NamedCircleKind named_circle_from_name(const std::string& name);

//! circumcircle, seven-point circle (diameter O..symmedian), orthocentroidal (diameter G..H)
Circle named_circle(NamedCircleKind kind, const Metric& M);

//! Brocard angle: cot(w) = (a2 + b2 + c2) / (4 area)
Approx brocard_angle(const Metric& M);

} // namespace omega
