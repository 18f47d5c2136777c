#pragma once
#include "omega/figure.hpp"
#include "omega/similarity.hpp"

namespace omega {

// J, K are the intersections of the working circle (enlarged about its own
// center by the smallest power of 2 that makes them real) with the
// circumcircle; projecting the cevian hits through J back onto the
// circumcircle yields a triangle congruent to the reference one.
struct WoodResult {
    bool ok = false;     // intersections found within the enlargement bound
    int k = 0;           // enlargement exponent: sigma scaled by 2^k (0 = untouched)
    Circle sigma;        // the (possibly enlarged) circle actually intersected
    PtR Xe, Ye, Ze;      // cevian hits enlarged with it (still exactly on sigma)
    Rat disc;            // discriminant of the chord; J, K live in Q(sqrt(disc))
    bool tangent = false;
    PtQ J, K;
    PtQ A1, B1, C1;      // projections of Xe, Ye, Ze through J onto the circumcircle
};

//! requires a median-pivot figure (aH / bH / cH)
WoodResult jk_and_wood(const Figure& fig);

//! congruence check: |O A1| = |O A| exactly, and the three directed rotation
//! angles at O agree within tolerance; returns the common angle
struct RotationCheck {
    bool radii_exact = false;
    bool angles_agree = false;
    double angle = 0.0;   // radians, sign per the embedding's orientation
    double max_dev = 0.0; // largest pairwise angle deviation
};
RotationCheck rotation_about_O_check(const Figure& fig, const WoodResult& wood);

} // namespace omega
