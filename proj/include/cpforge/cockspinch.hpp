#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cpforge/arith.hpp"

namespace cpforge::cockspinch {

// One census specification: embedding degree k, CM discriminant D, the
// rho bound as an exact rational, and the prime range for r.
struct SearchParams {
    u64 k = 3;
    i64 D = 1;
    i64 rho_num = 2;
    i64 rho_den = 1;
    u64 r_min = 5;
    u64 r_max = 5;
};

// One constructed parameter set. q can exceed 64 bits for generated
// parameters (r up to 62 bits), so it is stored in 128 bits; census
// runs keep q far below 2^63.
struct Triple {
    u64 r = 0;
    i64 t = 0;
    u64 u_abs = 0;
    u128 q = 0;
    u64 k = 0;
    i64 D = 0;
};

struct CountResult {
    u64 n1 = 0;  // all valid triples
    u64 n2 = 0;  // subset with q == 1 mod 4
    u64 n3 = 0;  // subset with q == 1 mod 12
};

struct ResiduePair {
    u64 t_res;
    u64 u_res;
};

// Steps 1-3 of the construction at residue level: for each primitive k-th
// root of unity g mod r, the pair (t_res, u_res) with t_res = g+1 and
// u_res = (t_res-2)/sqrt(-D) mod r. Empty when k does not divide r-1, -D
// is a non-residue, or r divides D or k. Exactly one of the two square
// roots is used; signed integer lifts of one class cover both.
std::vector<ResiduePair> candidate_residues(u64 r, u64 k, i64 D);

// floor(r^(num/den)) in exact integer arithmetic. Throws std::out_of_range
// when the result reaches 2^61 (census q values must stay below it).
u64 rho_power_floor(u64 r, i64 num, i64 den);

// Exact check q^den <= r^num in big-integer arithmetic (no floor).
bool rho_bound_holds(u128 q, u64 r, i64 num, i64 den);

// All distinct triples for one prime r, sorted by (t, q): integer lifts of
// every candidate residue pair with t^2 <= 4 q_max and D u^2 <= 4 q_max,
// kept when 4 | t^2 + D u^2, q = (t^2 + D u^2)/4 is an odd prime coprime
// to t, and q <= r^rho exactly.
std::vector<Triple> triples_for_r(u64 r, const SearchParams& p);

// Re-derives every Triple invariant from scratch.
bool verify_triple(const Triple& tr);

// Exhaustive census over primes r in [r_min, r_max]. Parallel over
// r-segments; identical counts for any worker count or partition.
// threads <= 0 picks the hardware default.
CountResult count_triples(const SearchParams& p, int threads = 0);

// Single-threaded reference implementation of the same census.
CountResult count_triples_serial(const SearchParams& p);

// Every triple of the census, ordered by (r, t, q).
std::vector<Triple> stream_triples(const SearchParams& p, int threads = 0);

// Randomized single-parameter generation: samples r of r_bits bits with
// k | r-1 and -D square mod r, picks a random primitive root, lifts to the
// minimal representatives and scans nearby lifts for the smallest prime q
// with q <= r^rho_max. Returns nullopt once the attempt budget runs out.
std::optional<Triple> generate_one(u64 k, i64 D, int r_bits, i64 rho_max_num,
                                   i64 rho_max_den, u64 seed,
                                   int attempt_budget = 256);

// Shared by the CLI and tests.
void validate_params(const SearchParams& p);

std::string u128_to_string(u128 v);

}  // namespace cpforge::cockspinch
