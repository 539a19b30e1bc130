#include "cpforge/cockspinch.hpp"

#include <gmp.h>

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cpforge/quadfield.hpp"

namespace cpforge::cockspinch {

namespace {

struct Scratch {
    std::vector<i64> t_lifts;
    std::vector<i64> u_lifts;
};

int resolve_threads(int threads) {
    if (threads > 0) return threads;
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? (int)hw : 1;
#endif
}

u64 isqrt_u64(u64 n) {
    u64 r = (u64)std::sqrt((double)n);
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

// Residue-level eligibility and candidate pairs, assuming r is prime.
// Returns false when r yields nothing for (k, D).
bool residues_core(u64 r, u64 k, i64 D, std::vector<ResiduePair>& out) {
    out.clear();
    if (r < 5) return false;
    if ((r - 1) % k != 0) return false;
    if (k % r == 0) return false;
    u64 d_mod = (u64)(((D % (i64)r) + (i64)r) % (i64)r);
    if (d_mod == 0) return false;
    if (arith::kronecker(-D, (i64)r) != 1) return false;
    auto root = arith::sqrt_mod(-D, r);
    if (!root) return false;
    u64 s = *root;
    u64 s_inv = *arith::mod_inverse(s, r);
    for (u64 g : arith::primitive_kth_roots(k, r)) {
        u64 t_res = (g + 1) % r;
        u64 u_res = arith::mul_mod((t_res + r - 2) % r, s_inv, r);
        out.push_back({t_res, u_res});
    }
    return true;
}

void collect_lifts(u64 res, u64 r, u64 max_abs, bool skip_zero,
                   std::vector<i64>& out) {
    out.clear();
    i64 m = (i64)max_abs;
    for (i64 v = (i64)res; v <= m; v += (i64)r)
        if (v != 0 || !skip_zero) out.push_back(v);
    for (i64 v = (i64)res - (i64)r; v >= -m; v -= (i64)r)
        if (v != 0 || !skip_zero) out.push_back(v);
}

// Enumerate every triple for one prime r; emit(t, u_abs, q). Returns the
// number of triples emitted.
template <class Emit>
u64 enumerate_for_r(u64 r, u64 k, i64 D, i64 rho_num, i64 rho_den,
                    Scratch& sc, std::vector<ResiduePair>& residues,
                    Emit&& emit) {
    if (!residues_core(r, k, D, residues)) return 0;
    u64 q_max = rho_power_floor(r, rho_num, rho_den);
    if (q_max < 3) return 0;
    u64 M = 4 * q_max;
    u64 t_max = isqrt_u64(M);
    u64 u_max = isqrt_u64(M / (u64)D);
    u64 emitted = 0;
    for (const auto& [t_res, u_res] : residues) {
        collect_lifts(t_res, r, t_max, false, sc.t_lifts);
        collect_lifts(u_res, r, u_max, true, sc.u_lifts);
        for (i64 t : sc.t_lifts) {
            u64 t2 = (u64)(t * t);
            for (i64 u : sc.u_lifts) {
                u64 S = t2 + (u64)D * (u64)(u * u);
                if (S > M) continue;
                if ((S & 7) != 4) continue;
                u64 q = S >> 2;
                if (q > q_max || q < 3) continue;
                u64 ta = (u64)(t < 0 ? -t : t);
                if (ta % q == 0) continue;
                if (!arith::is_prime(q)) continue;
                emit(t, (u64)(u < 0 ? -u : u), q);
                ++emitted;
            }
        }
    }
    return emitted;
}

u64 segment_size(u64 span, int threads) {
    u64 target = span / ((u64)threads * 8) + 1;
    return std::clamp<u64>(target, u64{1} << 14, u64{1} << 21);
}

void mpz_set_u128(mpz_t z, u128 v) {
    mpz_set_ui(z, (unsigned long)(v >> 64));
    mpz_mul_2exp(z, z, 64);
    mpz_add_ui(z, z, (unsigned long)(v & ~u64{0}));
}

bool is_prime_u128(u128 q) {
    if (q < ((u128)1 << 63)) return arith::is_prime((u64)q);
    mpz_t z;
    mpz_init(z);
    mpz_set_u128(z, q);
    int verdict = mpz_probab_prime_p(z, 40);
    mpz_clear(z);
    return verdict > 0;
}

u64 bounded_draw(std::mt19937_64& rng, u64 n) {
    u64 lim = ~u64{0} - ~u64{0} % n;
    u64 v;
    do {
        v = rng();
    } while (v >= lim);
    return v % n;
}

}  // namespace

std::string u128_to_string(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.push_back((char)('0' + (int)(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

namespace {

// Range searches require rho > 1; single-r enumeration only needs a
// positive rational (a bound at or below 1 just yields an empty result).
void validate_core(const SearchParams& p, bool require_rho_above_one) {
    if (p.k < 3) throw std::invalid_argument("k must be at least 3");
    if (p.D < 1) throw std::invalid_argument("D must be positive");
    for (auto [pp, e] : arith::factorize((u64)p.D))
        if (e > 1) throw std::invalid_argument("D must be square-free");
    if (p.rho_num < 1 || p.rho_den < 1)
        throw std::invalid_argument("rho must be a positive rational");
    if (std::gcd(p.rho_num, p.rho_den) != 1)
        throw std::invalid_argument("rho_num/rho_den must be in lowest terms");
    if (require_rho_above_one && p.rho_num <= p.rho_den)
        throw std::invalid_argument("rho must exceed 1");
    if (p.r_min < 5) throw std::invalid_argument("r_min must be at least 5");
    if (p.r_max < p.r_min) throw std::invalid_argument("r_max below r_min");
}

}  // namespace

void validate_params(const SearchParams& p) { validate_core(p, true); }

std::vector<ResiduePair> candidate_residues(u64 r, u64 k, i64 D) {
    if (r < 5 || !arith::is_prime(r))
        throw std::invalid_argument("candidate_residues: r must be a prime >= 5");
    if (k < 3) throw std::invalid_argument("candidate_residues: k must be >= 3");
    std::vector<ResiduePair> out;
    residues_core(r, k, D, out);
    return out;
}

u64 rho_power_floor(u64 r, i64 num, i64 den) {
    static thread_local mpz_t z;
    static thread_local bool ready = false;
    if (!ready) {
        mpz_init(z);
        ready = true;
    }
    mpz_ui_pow_ui(z, (unsigned long)r, (unsigned long)num);
    mpz_root(z, z, (unsigned long)den);
    if (mpz_sizeinbase(z, 2) > 61)
        throw std::out_of_range("rho bound exceeds the supported census range");
    return (u64)mpz_get_ui(z);
}

bool rho_bound_holds(u128 q, u64 r, i64 num, i64 den) {
    mpz_t qq, rr;
    mpz_init(qq);
    mpz_init(rr);
    mpz_set_u128(qq, q);
    mpz_pow_ui(qq, qq, (unsigned long)den);
    mpz_ui_pow_ui(rr, (unsigned long)r, (unsigned long)num);
    bool ok = mpz_cmp(qq, rr) <= 0;
    mpz_clear(qq);
    mpz_clear(rr);
    return ok;
}

std::vector<Triple> triples_for_r(u64 r, const SearchParams& p) {
    validate_core(p, false);
    if (!arith::is_prime(r))
        throw std::invalid_argument("triples_for_r: r must be prime");
    Scratch sc;
    std::vector<ResiduePair> residues;
    std::vector<Triple> out;
    enumerate_for_r(r, p.k, p.D, p.rho_num, p.rho_den, sc, residues,
                    [&](i64 t, u64 u_abs, u64 q) {
                        out.push_back({r, t, u_abs, (u128)q, p.k, p.D});
                    });
    std::sort(out.begin(), out.end(), [](const Triple& a, const Triple& b) {
        return a.t != b.t ? a.t < b.t : a.q < b.q;
    });
    // Distinct g give distinct t mod r and (t, q) determines |u|, so the
    // enumeration can never repeat a (t, q) pair.
    assert(std::adjacent_find(out.begin(), out.end(),
                              [](const Triple& a, const Triple& b) {
                                  return a.t == b.t && a.q == b.q;
                              }) == out.end());
    return out;
}

bool verify_triple(const Triple& tr) {
    if (tr.k < 3 || tr.D < 1 || tr.r < 5 || tr.q < 3) return false;
    if ((tr.r - 1) % tr.k != 0) return false;
    if (tr.u_abs == 0) return false;
    if (tr.r >= (u64{1} << 63) || !arith::is_prime(tr.r)) return false;
    if ((tr.q & 1) == 0) return false;
    if (tr.q == (u128)tr.r) return false;
    if (!is_prime_u128(tr.q)) return false;

    mpz_t q, lhs, rhs, tmp;
    mpz_init(q);
    mpz_init(lhs);
    mpz_init(rhs);
    mpz_init(tmp);
    mpz_set_u128(q, tr.q);

    bool ok = true;
    // 4q = t^2 + D u^2
    mpz_mul_ui(lhs, q, 4);
    mpz_set_si(rhs, tr.t);
    mpz_mul(rhs, rhs, rhs);
    mpz_set_ui(tmp, tr.u_abs);
    mpz_mul(tmp, tmp, tmp);
    mpz_mul_ui(tmp, tmp, (unsigned long)tr.D);
    mpz_add(rhs, rhs, tmp);
    if (mpz_cmp(lhs, rhs) != 0) ok = false;

    // |t| <= 2 sqrt(q), i.e. t^2 <= 4q
    if (ok) {
        mpz_set_si(tmp, tr.t);
        mpz_mul(tmp, tmp, tmp);
        if (mpz_cmp(tmp, lhs) > 0) ok = false;
    }

    // gcd(q, t) = 1
    if (ok) {
        mpz_set_si(tmp, tr.t);
        mpz_gcd(tmp, tmp, q);
        if (mpz_cmp_ui(tmp, 1) != 0) ok = false;
    }

    // r | q + 1 - t
    if (ok) {
        mpz_add_ui(tmp, q, 1);
        mpz_set_si(rhs, tr.t);
        mpz_sub(tmp, tmp, rhs);
        if (mpz_fdiv_ui(tmp, (unsigned long)tr.r) != 0) ok = false;
    }

    // multiplicative order of q mod r equals k
    if (ok) {
        u64 q_mod_r = mpz_fdiv_ui(q, (unsigned long)tr.r);
        if (q_mod_r == 0 ||
            arith::multiplicative_order(q_mod_r, tr.r) != tr.k)
            ok = false;
    }

    mpz_clear(q);
    mpz_clear(lhs);
    mpz_clear(rhs);
    mpz_clear(tmp);
    return ok;
}

CountResult count_triples(const SearchParams& p, int threads) {
    validate_params(p);
    rho_power_floor(p.r_max, p.rho_num, p.rho_den);
    int T = resolve_threads(threads);
    u64 span = p.r_max - p.r_min + 1;
    u64 seg = segment_size(span, T);
    i64 nseg = (i64)((span + seg - 1) / seg);
    u64 n1 = 0, n2 = 0, n3 = 0;
#ifdef _OPENMP
#pragma omp parallel num_threads(T) reduction(+ : n1, n2, n3)
#endif
    {
        arith::SegmentedSieve sieve;
        std::vector<u64> primes;
        std::vector<ResiduePair> residues;
        Scratch sc;
#ifdef _OPENMP
#pragma omp for schedule(dynamic)
#endif
        for (i64 s = 0; s < nseg; ++s) {
            u64 lo = p.r_min + (u64)s * seg;
            u64 hi = std::min(p.r_max, lo + seg - 1);
            sieve.primes(lo, hi, primes);
            for (u64 r : primes) {
                if ((r - 1) % p.k != 0) continue;
                enumerate_for_r(r, p.k, p.D, p.rho_num, p.rho_den, sc,
                                residues, [&](i64, u64, u64 q) {
                                    ++n1;
                                    if (q % 4 == 1) ++n2;
                                    if (q % 12 == 1) ++n3;
                                });
            }
        }
    }
    return {n1, n2, n3};
}

CountResult count_triples_serial(const SearchParams& p) {
    validate_params(p);
    rho_power_floor(p.r_max, p.rho_num, p.rho_den);
    CountResult res;
    arith::SegmentedSieve sieve;
    std::vector<u64> primes;
    std::vector<ResiduePair> residues;
    Scratch sc;
    constexpr u64 kChunk = u64{1} << 22;
    for (u64 lo = p.r_min; lo <= p.r_max;) {
        u64 hi = std::min(p.r_max, lo + kChunk - 1);
        sieve.primes(lo, hi, primes);
        for (u64 r : primes) {
            if ((r - 1) % p.k != 0) continue;
            enumerate_for_r(r, p.k, p.D, p.rho_num, p.rho_den, sc, residues,
                            [&](i64, u64, u64 q) {
                                ++res.n1;
                                if (q % 4 == 1) ++res.n2;
                                if (q % 12 == 1) ++res.n3;
                            });
        }
        if (hi == p.r_max) break;
        lo = hi + 1;
    }
    return res;
}

std::vector<Triple> stream_triples(const SearchParams& p, int threads) {
    validate_params(p);
    rho_power_floor(p.r_max, p.rho_num, p.rho_den);
    int T = resolve_threads(threads);
    u64 span = p.r_max - p.r_min + 1;
    u64 seg = segment_size(span, T);
    i64 nseg = (i64)((span + seg - 1) / seg);
    std::vector<std::vector<Triple>> per_segment((size_t)nseg);
#ifdef _OPENMP
#pragma omp parallel num_threads(T)
#endif
    {
        arith::SegmentedSieve sieve;
        std::vector<u64> primes;
        std::vector<ResiduePair> residues;
        Scratch sc;
#ifdef _OPENMP
#pragma omp for schedule(dynamic)
#endif
        for (i64 s = 0; s < nseg; ++s) {
            u64 lo = p.r_min + (u64)s * seg;
            u64 hi = std::min(p.r_max, lo + seg - 1);
            sieve.primes(lo, hi, primes);
            auto& bucket = per_segment[(size_t)s];
            for (u64 r : primes) {
                if ((r - 1) % p.k != 0) continue;
                size_t start = bucket.size();
                enumerate_for_r(r, p.k, p.D, p.rho_num, p.rho_den, sc,
                                residues, [&](i64 t, u64 u_abs, u64 q) {
                                    bucket.push_back(
                                        {r, t, u_abs, (u128)q, p.k, p.D});
                                });
                std::sort(bucket.begin() + (std::ptrdiff_t)start, bucket.end(),
                          [](const Triple& a, const Triple& b) {
                              return a.t != b.t ? a.t < b.t : a.q < b.q;
                          });
            }
        }
    }
    std::vector<Triple> out;
    for (auto& bucket : per_segment)
        out.insert(out.end(), bucket.begin(), bucket.end());
    return out;
}

std::optional<Triple> generate_one(u64 k, i64 D, int r_bits, i64 rho_max_num,
                                   i64 rho_max_den, u64 seed,
                                   int attempt_budget) {
    if (k < 3) throw std::invalid_argument("generate_one: k must be >= 3");
    if (r_bits < 16 || r_bits > 62)
        throw std::invalid_argument("generate_one: r_bits must lie in [16, 62]");
    if (rho_max_num <= rho_max_den || rho_max_den < 1)
        throw std::invalid_argument("generate_one: rho_max must exceed 1");
    if (D < 1) throw std::invalid_argument("generate_one: D must be positive");
    for (auto [p, e] : arith::factorize((u64)D))
        if (e > 1) throw std::invalid_argument("generate_one: D must be square-free");

    std::mt19937_64 rng(seed);
    u64 lo_r = u64{1} << (r_bits - 1);
    u64 hi_r = (u64{1} << r_bits) - 1;
    u64 m_lo = (lo_r - 1 + k - 1) / k;
    u64 m_hi = (hi_r - 1) / k;
    if (m_lo > m_hi) return std::nullopt;

    mpz_t S, q, tz, uz, lim;
    mpz_init(S);
    mpz_init(q);
    mpz_init(tz);
    mpz_init(uz);
    mpz_init(lim);

    std::optional<Triple> result;
    // The budget covers eligible primes; draws that miss a prime with
    // k | r - 1 and -D square mod r are capped separately.
    u64 draw_cap = (u64)attempt_budget * 256;
    int attempts_used = 0;
    for (u64 draw = 0;
         draw < draw_cap && attempts_used < attempt_budget && !result; ++draw) {
        u64 m = m_lo + bounded_draw(rng, m_hi - m_lo + 1);
        u64 r = k * m + 1;
        if (!arith::is_prime(r)) continue;
        if (D % (i64)r == 0) continue;
        if (arith::kronecker(-D, (i64)r) != 1) continue;
        ++attempts_used;
        auto roots = arith::primitive_kth_roots(k, r);
        u64 g = roots[bounded_draw(rng, roots.size())];
        u64 t_res = (g + 1) % r;
        u64 s = *arith::sqrt_mod(-D, r);
        u64 s_inv = *arith::mod_inverse(s, r);
        u64 u_res = arith::mul_mod((t_res + r - 2) % r, s_inv, r);
        i64 t0 = t_res > r / 2 ? (i64)t_res - (i64)r : (i64)t_res;
        i64 u0 = u_res > r / 2 ? (i64)u_res - (i64)r : (i64)u_res;

        struct Candidate {
            u128 q;
            i64 t;
            u64 u_abs;
        };
        std::vector<Candidate> cands;
        mpz_ui_pow_ui(lim, (unsigned long)r, (unsigned long)rho_max_num);
        for (int i = -3; i <= 3; ++i) {
            for (int j = -3; j <= 3; ++j) {
                i64 t = t0 + (i64)i * (i64)r;
                i64 u = u0 + (i64)j * (i64)r;
                if (u == 0) continue;
                mpz_set_si(tz, t);
                mpz_mul(tz, tz, tz);
                mpz_set_si(uz, u);
                mpz_mul(uz, uz, uz);
                mpz_mul_ui(uz, uz, (unsigned long)D);
                mpz_add(S, tz, uz);
                if (mpz_fdiv_ui(S, 8) != 4) continue;
                mpz_fdiv_q_2exp(q, S, 2);
                // q^den <= r^num, exactly
                mpz_pow_ui(tz, q, (unsigned long)rho_max_den);
                if (mpz_cmp(tz, lim) > 0) continue;
                if (mpz_sizeinbase(q, 2) > 126) continue;
                mpz_fdiv_q_2exp(tz, q, 64);
                mpz_fdiv_r_2exp(uz, q, 64);
                u128 qv = (((u128)mpz_get_ui(tz)) << 64) | (u128)mpz_get_ui(uz);
                if (qv < 3) continue;
                cands.push_back({qv, t, (u64)(u < 0 ? -u : u)});
            }
        }
        std::sort(cands.begin(), cands.end(),
                  [](const Candidate& a, const Candidate& b) { return a.q < b.q; });
        for (const auto& c : cands) {
            i64 ta = c.t < 0 ? -c.t : c.t;
            if (c.q <= (u128)ta && ta % (i64)c.q == 0) continue;
            if (!is_prime_u128(c.q)) continue;
            Triple tr{r, c.t, c.u_abs, c.q, k, D};
            if (verify_triple(tr)) {
                result = tr;
                break;
            }
        }
    }
    mpz_clear(S);
    mpz_clear(q);
    mpz_clear(tz);
    mpz_clear(uz);
    mpz_clear(lim);
    return result;
}

}  // namespace cpforge::cockspinch
