#include "cpforge/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace cpforge::arith {

u64 mul_mod(u64 a, u64 b, u64 m) {
    if (m == 0) throw std::domain_error("mul_mod: modulus is zero");
    return static_cast<u64>((u128)a * b % m);
}

u64 pow_mod(u64 a, u64 e, u64 m) {
    if (m == 0) throw std::domain_error("pow_mod: modulus is zero");
    if (m == 1) return 0;
    u64 r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mul_mod(r, a, m);
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    return r;
}

std::optional<u64> mod_inverse(u64 a, u64 m) {
    if (m == 0) throw std::domain_error("mod_inverse: modulus is zero");
    i64 old_r = (i64)(a % m), r = (i64)m;
    i64 old_s = 1, s = 0;
    while (r != 0) {
        i64 q = old_r / r;
        old_r -= q * r;
        std::swap(old_r, r);
        old_s -= q * s;
        std::swap(old_s, s);
    }
    if (old_r != 1) return std::nullopt;
    i64 x = old_s % (i64)m;
    if (x < 0) x += (i64)m;
    return (u64)x;
}

namespace {

// Montgomery arithmetic mod an odd n, used only inside is_prime.
struct Montgomery {
    u64 n, neg_inv, one, r2;

    explicit Montgomery(u64 n_) : n(n_) {
        u64 inv = n;
        for (int i = 0; i < 5; ++i) inv *= 2 - n * inv;
        neg_inv = ~inv + 1;
        one = (~n + 1) % n;
        r2 = (u64)((u128)one * one % n);
    }

    u64 redc(u128 t) const {
        u64 m = (u64)t * neg_inv;
        u64 hi = (u64)((t + (u128)m * n) >> 64);
        return hi >= n ? hi - n : hi;
    }

    u64 mul(u64 a, u64 b) const { return redc((u128)a * b); }
    u64 to_mont(u64 a) const { return mul(a, r2); }

    u64 pow(u64 a_mont, u64 e) const {
        u64 r = one, b = a_mont;
        while (e) {
            if (e & 1) r = mul(r, b);
            b = mul(b, b);
            e >>= 1;
        }
        return r;
    }
};

bool strong_probable_prime(const Montgomery& mg, u64 base, u64 d, int s) {
    u64 a = base % mg.n;
    if (a == 0) return true;
    u64 x = mg.pow(mg.to_mont(a), d);
    u64 neg_one = mg.n - mg.one;
    if (x == mg.one || x == neg_one) return true;
    for (int i = 1; i < s; ++i) {
        x = mg.mul(x, x);
        if (x == neg_one) return true;
    }
    return false;
}

}  // namespace

bool is_prime(u64 n) {
    if (n >= (u64{1} << 63)) throw std::out_of_range("is_prime: input >= 2^63");
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                  29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    if (n < 41 * 41) return true;
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    Montgomery mg(n);
    // Witness set covering all n < 2^64 (Sinclair).
    for (u64 base : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull,
                     1795265022ull}) {
        if (!strong_probable_prime(mg, base, d, s)) return false;
    }
    return true;
}

void SegmentedSieve::ensure_base(u64 limit) {
    if (limit <= base_limit_) return;
    u64 lim = std::max<u64>(limit, 1u << 10);
    std::vector<std::uint8_t> comp(lim + 1, 0);
    base_.clear();
    for (u64 p = 2; p <= lim; ++p) {
        if (comp[p]) continue;
        base_.push_back(p);
        for (u64 q = p * p; q <= lim; q += p) comp[q] = 1;
    }
    base_limit_ = lim;
}

void SegmentedSieve::primes(u64 lo, u64 hi, std::vector<u64>& out) {
    out.clear();
    if (hi < 2 || hi < lo) return;
    lo = std::max<u64>(lo, 2);
    u64 root = (u64)std::sqrt((double)hi);
    while (root > 0 && root * root > hi) --root;
    while ((root + 1) * (root + 1) <= hi) ++root;
    ensure_base(root);
    constexpr u64 kSegment = 1u << 20;
    for (u64 seg_lo = lo; seg_lo <= hi; seg_lo += kSegment) {
        u64 seg_hi = std::min(hi, seg_lo + kSegment - 1);
        u64 len = seg_hi - seg_lo + 1;
        mark_.assign(len, 1);
        for (u64 p : base_) {
            if (p * p > seg_hi) break;
            u64 start = std::max(p * p, ((seg_lo + p - 1) / p) * p);
            for (u64 q = start; q <= seg_hi; q += p) mark_[q - seg_lo] = 0;
        }
        for (u64 i = 0; i < len; ++i) {
            u64 v = seg_lo + i;
            if (mark_[i] && v >= 2) out.push_back(v);
        }
    }
}

std::vector<u64> primes_in_range(const PrimeStream& spec) {
    std::vector<u64> out;
    for_each_prime(spec, [&](u64 p) { out.push_back(p); });
    return out;
}

void for_each_prime(const PrimeStream& spec, const std::function<void(u64)>& fn) {
    if (spec.modulus < 1) throw std::invalid_argument("for_each_prime: modulus < 1");
    if (spec.residue >= spec.modulus)
        throw std::invalid_argument("for_each_prime: residue >= modulus");
    if (spec.lo > spec.hi) return;
    SegmentedSieve sieve;
    std::vector<u64> buf;
    constexpr u64 kChunk = u64{1} << 22;
    for (u64 lo = spec.lo; lo <= spec.hi;) {
        u64 hi = std::min(spec.hi, lo + kChunk - 1);
        sieve.primes(lo, hi, buf);
        for (u64 p : buf)
            if (p % spec.modulus == spec.residue) fn(p);
        if (hi == spec.hi) break;
        lo = hi + 1;
    }
}

namespace {

// (a/2)^e component of the Kronecker symbol: 0 for even a, else depends
// on a mod 8.
int kron_two(i64 a) {
    if ((a & 1) == 0) return 0;
    i64 m = a % 8;
    if (m < 0) m += 8;
    return (m == 1 || m == 7) ? 1 : -1;
}

}  // namespace

int kronecker(i64 a, i64 n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    int sign = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) sign = -sign;
    }
    int twos = 0;
    while ((n & 1) == 0) {
        n >>= 1;
        ++twos;
    }
    if (twos) {
        int k2 = kron_two(a);
        if (k2 == 0) return 0;
        if ((twos & 1) && k2 == -1) sign = -sign;
    }
    // Jacobi symbol (a/n) for odd n >= 1 by binary reciprocity; the symbol
    // is periodic in a with period n, so reduction needs no sign fix.
    a %= n;
    if (a < 0) a += n;
    u64 x = (u64)a, y = (u64)n;
    while (x != 0) {
        int z = 0;
        while ((x & 1) == 0) {
            x >>= 1;
            ++z;
        }
        if (z & 1) {
            u64 m = y % 8;
            if (m == 3 || m == 5) sign = -sign;
        }
        if ((x % 4 == 3) && (y % 4 == 3)) sign = -sign;
        std::swap(x, y);
        x %= y;
    }
    return y == 1 ? sign : 0;
}

std::optional<u64> sqrt_mod(i64 a, u64 p) {
    if (p < 2) throw std::domain_error("sqrt_mod: p must be an odd prime");
    i64 red = a % (i64)p;
    if (red < 0) red += (i64)p;
    u64 v = (u64)red;
    if (v == 0) return 0;
    if (p == 2) return v;
    if (pow_mod(v, (p - 1) / 2, p) != 1) return std::nullopt;
    u64 root;
    if (p % 4 == 3) {
        root = pow_mod(v, (p + 1) / 4, p);
    } else {
        // Tonelli-Shanks.
        u64 q = p - 1;
        int s = 0;
        while ((q & 1) == 0) {
            q >>= 1;
            ++s;
        }
        u64 z = 2;
        while (pow_mod(z, (p - 1) / 2, p) != p - 1) ++z;
        u64 c = pow_mod(z, q, p);
        u64 x = pow_mod(v, (q + 1) / 2, p);
        u64 t = pow_mod(v, q, p);
        int m = s;
        while (t != 1) {
            u64 tt = t;
            int i = 0;
            while (tt != 1) {
                tt = mul_mod(tt, tt, p);
                ++i;
            }
            u64 b = c;
            for (int j = 0; j < m - i - 1; ++j) b = mul_mod(b, b, p);
            x = mul_mod(x, b, p);
            c = mul_mod(b, b, p);
            t = mul_mod(t, c, p);
            m = i;
        }
        root = x;
    }
    return std::min(root, p - root);
}

u64 euler_phi(u64 k) {
    if (k == 0) throw std::domain_error("euler_phi: k must be positive");
    u64 result = k;
    for (auto [p, e] : factorize(k)) result -= result / p;
    return result;
}

namespace {

u64 pollard_rho(u64 n) {
    // Brent's cycle variant; n must be odd, composite, not a prime power
    // handled elsewhere. Returns a nontrivial factor.
    for (u64 c = 1;; ++c) {
        u64 x = 2, y = 2, d = 1;
        u64 saved_y = y;
        u64 lim = 1;
        auto step = [&](u64 v) { return (u64)(((u128)v * v + c) % n); };
        while (d == 1) {
            x = y;
            for (u64 i = 0; i < lim; ++i) y = step(y);
            u64 prod = 1;
            u64 count = 0;
            while (count < lim && d == 1) {
                saved_y = y;
                u64 batch = std::min<u64>(128, lim - count);
                for (u64 i = 0; i < batch; ++i) {
                    y = step(y);
                    u64 diff = x > y ? x - y : y - x;
                    prod = (u64)((u128)prod * (diff ? diff : 1) % n);
                }
                count += batch;
                d = std::gcd(prod, n);
            }
            lim *= 2;
        }
        if (d == n) {
            // Backtrack one by one.
            d = 1;
            u64 y2 = saved_y;
            while (d == 1) {
                y2 = step(y2);
                u64 diff = x > y2 ? x - y2 : y2 - x;
                d = std::gcd(diff ? diff : n, n);
            }
        }
        if (d != n) return d;
    }
}

void factor_rec(u64 n, std::vector<u64>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    u64 d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace

std::vector<std::pair<u64, int>> factorize(u64 n) {
    if (n == 0) throw std::domain_error("factorize: n must be positive");
    std::vector<u64> primes;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
        while (n % p == 0) {
            primes.push_back(p);
            n /= p;
        }
    }
    if (n > 1) {
        static const std::vector<u64> small = [] {
            SegmentedSieve s;
            std::vector<u64> v;
            s.primes(2, 10000, v);
            return v;
        }();
        for (u64 p : small) {
            if (p * p > n) break;
            while (n % p == 0) {
                primes.push_back(p);
                n /= p;
            }
        }
        if (n > 1) factor_rec(n, primes);
    }
    std::sort(primes.begin(), primes.end());
    std::vector<std::pair<u64, int>> out;
    for (u64 p : primes) {
        if (!out.empty() && out.back().first == p)
            ++out.back().second;
        else
            out.push_back({p, 1});
    }
    return out;
}

u64 multiplicative_order(u64 a, u64 r) {
    a %= r;
    if (a == 0) throw std::domain_error("multiplicative_order: r divides a");
    u64 d = r - 1;
    for (auto [p, e] : factorize(r - 1)) {
        for (int i = 0; i < e; ++i) {
            if (pow_mod(a, d / p, r) == 1)
                d /= p;
            else
                break;
        }
    }
    return d;
}

std::vector<u64> primitive_kth_roots(u64 k, u64 r) {
    if (k < 3) throw std::invalid_argument("primitive_kth_roots: k < 3");
    if ((r - 1) % k != 0)
        throw std::invalid_argument("primitive_kth_roots: k does not divide r-1");
    auto fac = factorize(r - 1);
    u64 h = 2;
    for (;; ++h) {
        bool ok = true;
        for (auto [p, e] : fac) {
            if (pow_mod(h, (r - 1) / p, r) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) break;
    }
    u64 z = pow_mod(h, (r - 1) / k, r);
    std::vector<u64> roots;
    u64 zj = 1;
    for (u64 j = 1; j <= k; ++j) {
        zj = mul_mod(zj, z, r);
        if (std::gcd(j, k) == 1) roots.push_back(zj);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace cpforge::arith
