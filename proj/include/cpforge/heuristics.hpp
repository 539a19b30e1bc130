#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cpforge/arith.hpp"

namespace cpforge::heuristics {

// Heuristic prediction for one census cell: I is the e-adjusted expected
// N1, I1 = I / e(k,D), and I2/I3 apply the congruence-filter ratios.
struct Prediction {
    u64 k;
    i64 D;
    double rho;
    double a;
    double b;
    double I;
    double I1;
    double I2;
    double I3;
    double ratio2;
    double ratio3;
};

struct BhConstants {
    i64 D;
    double c_f1;
    double c_g;
    double product_check;
};

// I(k,D,rho,a,b) = e * w / (2 rho h) * integral_a^b z^(rho-2) / (ln z)^2 dz
// by adaptive quadrature with relative error < 1e-6. Needs rho > 1 and
// 5 <= a < b.
Prediction predicted_count(u64 k, i64 D, double rho, double a, double b);

// Closed form e * w / (2 rho (rho-1) h) * x^(rho-1) / (ln x)^2.
double asymptotic_count(u64 k, i64 D, double rho, double x);

// Ratio of integral_a^x z^(-s) (ln z)^(-m) dz to its first-order closed
// form x^(1-s) / ((1-s) (ln x)^m); tends to 1 as x grows.
double integral_asymptotic_ratio(double a, double m, double s, double x);

// (ratio2, ratio3): expected fractions N2/N1 and N3/N1 by D mod 4 and
// divisibility by 3.
std::pair<double, double> pf_field_ratios(i64 D);

// Truncated Euler product c_f1 over odd primes up to prime_limit, the
// empirical mean c_g of the multiplicative weight g over u <= x_limit, and
// their product against the L-value. The product of the full limits is
// L_D^-1 times the 2-adic Euler factor 1/(1 - kronecker(D_star,2)/2), so the
// check folds that factor in and tends to 1 for every D.
BhConstants bh_constants(i64 D, u64 prime_limit, u64 x_limit);

// C / (prod of degrees) * X / (ln X)^m for a system of m polynomials given
// as (degree, constant) pairs with the constants multiplied together.
double bateman_horn_density(const std::vector<std::pair<int, double>>& polys,
                            double X);

// Adaptive Simpson quadrature of a smooth integrand, exposed for tests.
double integrate(double (*f)(double, const void*), const void* ctx, double a,
                 double b, double rel_tol);

}  // namespace cpforge::heuristics
