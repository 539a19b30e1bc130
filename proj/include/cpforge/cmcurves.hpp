#pragma once

#include <cstdint>

#include "cpforge/cockspinch.hpp"

namespace cpforge::cmcurves {

// A short Weierstrass curve y^2 = x^3 + a4 x + a6 over F_q realizing a
// constructed triple. Restricted to class-number-one discriminants and
// q < 2^63.
struct CurveParams {
    u64 q = 0;
    u64 a4 = 0;
    u64 a6 = 0;
    u64 order = 0;  // q + 1 - t
    u64 r = 0;
    i64 D = 0;
    u64 j = 0;  // j-invariant as a field element
};

// The CM j-invariant for discriminant -D (or -4D) as a rational integer.
// Defined for the nine square-free D with class number one; throws
// std::domain_error otherwise.
i64 j_invariant(i64 D);

// Builds the curve with |E(F_q)| = q + 1 - t by twist selection: generic j
// uses c = j/(1728-j), a4 = 3c, a6 = 2c and its quadratic twists; j = 0
// walks sextic twists y^2 = x^3 + d; j = 1728 walks quartic twists
// y^2 = x^3 + d x. Throws std::runtime_error when no twist passes the
// order check.
CurveParams build_curve(const cockspinch::Triple& tr);

// True iff n*P is the identity for `samples` pseudo-randomly drawn points
// P, with an added r-torsion witness when the curve's r is set: some
// sample must have (n/r)*P != identity (when r^2 does not divide n).
bool check_order(const CurveParams& c, u64 n, int samples);

// Multiplicative order of q mod r; throws std::domain_error when r | q.
u64 embedding_degree(u64 q, u64 r);

// Exhaustive |E(F_q)| by direct point counting; intended for small q in
// tests.
u64 count_points(u64 q, u64 a4, u64 a6);

}  // namespace cpforge::cmcurves
