#include "cpforge/quadfield.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace cpforge::quadfield {

namespace {

void require_squarefree_positive(i64 D) {
    if (D < 1) throw std::domain_error("D must be positive");
    for (auto [p, e] : arith::factorize((u64)D))
        if (e > 1) throw std::domain_error("D must be square-free");
}

}  // namespace

i64 fundamental_discriminant(i64 D) {
    require_squarefree_positive(D);
    return (D % 4 == 3) ? -D : -4 * D;
}

int roots_of_unity(i64 D) {
    if (D == 1) return 4;
    if (D == 3) return 6;
    return 2;
}

i64 class_number(i64 D) {
    if (D > 1000000) throw std::out_of_range("class_number: D > 10^6 unsupported");
    i64 d = fundamental_discriminant(D);
    i64 ad = -d;
    i64 h = 0;
    for (i64 b = (ad % 2 == 0) ? 0 : 1; 3 * b * b <= ad; b += 2) {
        i64 n = (b * b + ad) / 4;
        for (i64 a = std::max<i64>(b, 1); a * a <= n; ++a) {
            if (n % a != 0) continue;
            i64 c = n / a;
            if (std::gcd(std::gcd(a, b), c) != 1) continue;
            h += (b == 0 || a == b || a == c) ? 1 : 2;
        }
    }
    return h;
}

double l_value(i64 D) {
    i64 d = fundamental_discriminant(D);
    i64 h = class_number(D);
    int w = roots_of_unity(D);
    return 2.0 * std::numbers::pi * (double)h / ((double)w * std::sqrt((double)-d));
}

double l_value_series(i64 D, u64 n_terms) {
    if (n_terms < 1000) throw std::invalid_argument("l_value_series: n_terms < 1000");
    i64 d = fundamental_discriminant(D);
    u64 period = (u64)(-d);
    u64 tail = std::min(period, n_terms);
    double sum = 0.0;
    double tail_sum = 0.0;
    for (u64 n = 1; n <= n_terms; ++n) {
        sum += (double)arith::kronecker(d, (i64)n) / (double)n;
        if (n > n_terms - tail) tail_sum += sum;
    }
    return tail_sum / (double)tail;
}

int e_factor(u64 k, i64 D) {
    i64 d = fundamental_discriminant(D);
    u64 ad = (u64)(-d);
    return (k % ad == 0) ? 2 : 1;
}

const FieldInvariants& field_invariants(i64 D) {
    static std::map<i64, FieldInvariants> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(D);
    if (it == cache.end()) {
        FieldInvariants inv;
        inv.D = D;
        inv.D_star = fundamental_discriminant(D);
        inv.w = roots_of_unity(D);
        inv.h = class_number(D);
        inv.L = 2.0 * std::numbers::pi * (double)inv.h /
                ((double)inv.w * std::sqrt((double)-inv.D_star));
        it = cache.emplace(D, inv).first;
    }
    return it->second;
}

}  // namespace cpforge::quadfield
