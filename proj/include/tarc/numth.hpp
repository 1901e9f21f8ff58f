#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tarc/bigint.hpp"

namespace tarc::numth {

using u64 = std::uint64_t;

/// Deterministic primality for the full 64-bit range (Miller-Rabin with a
/// fixed witness set).
bool is_prime(u64 n);

/// Prime factorization by trial division, ascending primes with exponents.
std::vector<std::pair<u64, unsigned>> factorize(u64 n);

std::vector<u64> prime_divisors(u64 n);

/// If n = p^k with p prime and k >= 1, returns (p, k).
std::optional<std::pair<u64, unsigned>> prime_power(u64 n);

/// Exact p^k; throws std::overflow_error if it does not fit in 64 bits.
u64 checked_pow(u64 p, unsigned k);

u64 gcd(u64 a, u64 b);
u64 lcm(u64 a, u64 b);

u64 mul_mod(u64 a, u64 b, u64 m);
u64 pow_mod(u64 a, u64 e, u64 m);

/// Multiplicative order of a modulo m (gcd(a, m) = 1 required).
u64 multiplicative_order(u64 a, u64 m);

bool is_mersenne_prime(u64 p);

/// Primes r dividing p^k - 1 and no p^i - 1 with 0 < i < k.
/// Rejects p not prime, k < 2, or p^k >= 2^64.
std::vector<u64> primitive_prime_divisors(u64 p, unsigned k);

/// Factored form of n = q + 1 together with the admissibility of q:
/// n = 2^s r^t > 3 with r an odd prime, and either s >= 2 or q even.
struct ParameterSet {
  u64 q = 0;
  u64 p = 0;
  unsigned f = 0;
  u64 n = 0;
  unsigned s = 0;
  std::optional<u64> r;
  unsigned t = 0;
  bool valid = false;
  /// Empty when valid; otherwise names the first violated clause.
  std::string violated_clause;
};

/// Throws std::invalid_argument when q is not a prime power.
ParameterSet validate_c1(u64 q);

enum class CaseLabel { i, ii, iii, none };

std::string to_string(CaseLabel label);

struct Theorem1Case {
  CaseLabel label = CaseLabel::none;
  /// Only (p, k) = (2, 6) can witness case (ii); whether M is regular on
  /// edges or arcs is a group-action fact checked by the certificate.
  bool case_ii_possible = false;
  /// The prime witnessing case (i), if any.
  std::optional<u64> witness_prime;
};

/// Which arithmetic case of the non-diagonal classification a valency p^k with
/// n simple factors falls into. k = 1 has no primitive prime divisors and
/// always yields none.
Theorem1Case classify_theorem1_case(u64 p, unsigned k, u64 n);

} // namespace tarc::numth
