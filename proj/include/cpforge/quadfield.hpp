#pragma once

#include <cstdint>

#include "cpforge/arith.hpp"

namespace cpforge::quadfield {

// Invariants of the imaginary quadratic field Q(sqrt(-D)) for square-free
// positive D: fundamental discriminant D_star, unit count w, class number h,
// and the Dirichlet L-value L = 2*pi*h / (w*sqrt(|D_star|)).
struct FieldInvariants {
    i64 D;
    i64 D_star;
    int w;
    i64 h;
    double L;
};

// -D if D == 3 mod 4, else -4D. Throws std::domain_error if D is not
// square-free positive.
i64 fundamental_discriminant(i64 D);

// 4 for D=1, 6 for D=3, 2 otherwise.
int roots_of_unity(i64 D);

// Class number by counting reduced primitive binary quadratic forms
// (A,B,C) with B^2 - 4AC = D_star, |B| <= A <= C, gcd(A,B,C) = 1, and
// B >= 0 when |B| = A or A = C. Supported for D <= 10^6.
i64 class_number(i64 D);

// L-value from the class number formula.
double l_value(i64 D);

// Direct series sum_{n>=1} kronecker(D_star, n)/n, with the tail tamed by
// averaging the final |D_star| partial sums. Cross-check only; needs
// n_terms >= 1000.
double l_value_series(i64 D, u64 n_terms);

// 2 when |D_star| divides k (Q(sqrt(-D)) sits inside the k-th cyclotomic
// field), else 1.
int e_factor(u64 k, i64 D);

// Memoized per D; safe for concurrent lookup.
const FieldInvariants& field_invariants(i64 D);

}  // namespace cpforge::quadfield
