#include "cpforge/heuristics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cpforge/quadfield.hpp"

namespace cpforge::heuristics {

namespace {

double simpson(double a, double b, double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive(double (*f)(double, const void*), const void* ctx, double a,
                double b, double fa, double fm, double fb, double whole,
                double tol, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm, ctx), frm = f(rm, ctx);
    double left = simpson(a, m, fa, flm, fm);
    double right = simpson(m, b, fm, frm, fb);
    double delta = left + right - whole;
    if (depth <= 0 || std::fabs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return adaptive(f, ctx, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive(f, ctx, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

struct PowLogCtx {
    double exp_coeff;  // coefficient of y in e^(c y)
    double log_pow;    // power of y dividing
};

// Integrands are evaluated after the substitution z = e^y, which turns
// z^c / (ln z)^m dz into e^((c+1) y) / y^m dy and keeps the adaptive
// subdivision well conditioned over ranges as wide as [5, 1e10].
double powlog_integrand(double y, const void* ctx) {
    const auto* c = static_cast<const PowLogCtx*>(ctx);
    return std::exp(c->exp_coeff * y) / std::pow(y, c->log_pow);
}

}  // namespace

double integrate(double (*f)(double, const void*), const void* ctx, double a,
                 double b, double rel_tol) {
    double fa = f(a, ctx), fb = f(b, ctx), fm = f(0.5 * (a + b), ctx);
    double whole = simpson(a, b, fa, fm, fb);
    double tol = std::max(std::fabs(whole), 1e-300) * rel_tol;
    return adaptive(f, ctx, a, b, fa, fm, fb, whole, tol, 60);
}

namespace {

// integral_a^b z^(rho-2) / (ln z)^2 dz
double census_integral(double rho, double a, double b, double rel_tol) {
    PowLogCtx ctx{rho - 1.0, 2.0};
    return integrate(powlog_integrand, &ctx, std::log(a), std::log(b), rel_tol);
}

}  // namespace

std::pair<double, double> pf_field_ratios(i64 D) {
    quadfield::fundamental_discriminant(D);  // validates square-free positive
    double ratio2 = (D % 4 == 1) ? 1.0 : 0.5;
    double ratio3 = (D % 3 == 0) ? ratio2 : 0.5 * ratio2;
    return {ratio2, ratio3};
}

Prediction predicted_count(u64 k, i64 D, double rho, double a, double b) {
    if (rho <= 1.0)
        throw std::domain_error("predicted_count: rho must exceed 1");
    if (!(a >= 5.0 && a < b))
        throw std::invalid_argument("predicted_count: need 5 <= a < b");
    const auto& inv = quadfield::field_invariants(D);
    int e = quadfield::e_factor(k, D);
    double J = census_integral(rho, a, b, 1e-7);
    double I1 = (double)inv.w / (2.0 * rho * (double)inv.h) * J;
    auto [r2, r3] = pf_field_ratios(D);
    Prediction p;
    p.k = k;
    p.D = D;
    p.rho = rho;
    p.a = a;
    p.b = b;
    p.I1 = I1;
    p.I = (double)e * I1;
    p.ratio2 = r2;
    p.ratio3 = r3;
    p.I2 = r2 * p.I;
    p.I3 = r3 * p.I;
    return p;
}

double asymptotic_count(u64 k, i64 D, double rho, double x) {
    if (rho <= 1.0)
        throw std::domain_error("asymptotic_count: rho must exceed 1");
    const auto& inv = quadfield::field_invariants(D);
    int e = quadfield::e_factor(k, D);
    double lx = std::log(x);
    return (double)e * (double)inv.w /
           (2.0 * rho * (rho - 1.0) * (double)inv.h) *
           std::pow(x, rho - 1.0) / (lx * lx);
}

double integral_asymptotic_ratio(double a, double m, double s, double x) {
    if (!(a > 1.0) || !(s < 1.0) || !(x > a))
        throw std::invalid_argument(
            "integral_asymptotic_ratio: need a > 1, s < 1, x > a");
    PowLogCtx ctx{1.0 - s, m};
    double numer =
        integrate(powlog_integrand, &ctx, std::log(a), std::log(x), 1e-9);
    double denom = std::pow(x, 1.0 - s) / ((1.0 - s) * std::pow(std::log(x), m));
    return numer / denom;
}

BhConstants bh_constants(i64 D, u64 prime_limit, u64 x_limit) {
    if (prime_limit < 1000 || x_limit < 1000)
        throw std::invalid_argument("bh_constants: limits must be >= 1000");
    i64 d_star = quadfield::fundamental_discriminant(D);

    arith::SegmentedSieve sieve;
    std::vector<u64> primes;
    sieve.primes(3, prime_limit, primes);
    double c_f1 = 1.0;
    for (u64 p : primes)
        c_f1 *= ((double)p - 1.0 - (double)arith::kronecker(-D, (i64)p)) /
                ((double)p - 1.0);

    // Multiplicative weight g: g(2^n) = 1, g(p) = (p-1)/(p-1-chi(p)) for odd
    // p, computed from the smallest-prime-factor table.
    std::vector<std::uint32_t> spf(x_limit + 1, 0);
    for (u64 i = 2; i <= x_limit; ++i) {
        if (spf[i] == 0)
            for (u64 j = i; j <= x_limit; j += i)
                if (spf[j] == 0) spf[j] = (std::uint32_t)i;
    }
    std::vector<double> g(x_limit + 1, 1.0);
    double S = 1.0;  // g(1)
    for (u64 u = 2; u <= x_limit; ++u) {
        u64 p = spf[u];
        u64 v = u;
        while (v % p == 0) v /= p;
        double gp = 1.0;
        if (p != 2)
            gp = ((double)p - 1.0) /
                 ((double)p - 1.0 - (double)arith::kronecker(-D, (i64)p));
        g[u] = g[v] * gp;
        S += g[u];
    }
    double c_g = S / (double)x_limit;

    // The full products satisfy C(f1) * C_g = L^-1 only up to the Euler
    // factor at 2, which both truncations omit; folding it in makes the
    // check tend to 1 for every residue class of D.
    double two_factor = 1.0 - (double)arith::kronecker(d_star, 2) / 2.0;
    BhConstants out;
    out.D = D;
    out.c_f1 = c_f1;
    out.c_g = c_g;
    out.product_check = c_f1 * c_g * quadfield::l_value(D) * two_factor;
    return out;
}

double bateman_horn_density(const std::vector<std::pair<int, double>>& polys,
                            double X) {
    if (polys.empty())
        throw std::invalid_argument("bateman_horn_density: empty system");
    double c = 1.0;
    double deg_prod = 1.0;
    for (auto [deg, constant] : polys) {
        if (deg < 1 || constant <= 0.0)
            throw std::invalid_argument(
                "bateman_horn_density: need degree >= 1 and C > 0");
        c *= constant;
        deg_prod *= (double)deg;
    }
    double m = (double)polys.size();
    return c / deg_prod * X / std::pow(std::log(X), m);
}

}  // namespace cpforge::heuristics
