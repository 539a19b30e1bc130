#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace cpforge {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

namespace arith {

// Primes p in [lo, hi] with p % modulus == residue, ascending.
struct PrimeStream {
    u64 lo = 2;
    u64 hi = 0;
    u64 residue = 0;
    u64 modulus = 1;
};

// Deterministic for all n < 2^63; throws std::out_of_range above that.
bool is_prime(u64 n);

std::vector<u64> primes_in_range(const PrimeStream& spec);
void for_each_prime(const PrimeStream& spec, const std::function<void(u64)>& fn);

// Reusable segment-sieving state. One instance per thread; not shared.
class SegmentedSieve {
  public:
    // Appends every prime in [lo, hi] to out (out is cleared first).
    void primes(u64 lo, u64 hi, std::vector<u64>& out);

  private:
    void ensure_base(u64 limit);
    std::vector<u64> base_;
    u64 base_limit_ = 0;
    std::vector<std::uint8_t> mark_;
};

u64 mul_mod(u64 a, u64 b, u64 m);
u64 pow_mod(u64 a, u64 e, u64 m);
std::optional<u64> mod_inverse(u64 a, u64 m);

int kronecker(i64 a, i64 n);

// Smaller of the two square roots of a mod p (p an odd prime), or nullopt
// for a non-residue. a may be any integer; it is reduced mod p first.
std::optional<u64> sqrt_mod(i64 a, u64 p);

u64 euler_phi(u64 k);

// Prime factorization as (prime, exponent) pairs, primes ascending.
std::vector<std::pair<u64, int>> factorize(u64 n);

// Least d >= 1 with a^d == 1 mod r, for prime r and r not dividing a.
u64 multiplicative_order(u64 a, u64 r);

// The phi(k) elements of exact order k in (Z/rZ)*, ascending. Needs k >= 3
// and k | r-1.
std::vector<u64> primitive_kth_roots(u64 k, u64 r);

}  // namespace arith
}  // namespace cpforge
