#include "tarc/numth.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace tarc::numth {

u64 mul_mod(u64 a, u64 b, u64 m)
{
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

u64 pow_mod(u64 a, u64 e, u64 m)
{
  u64 result = 1 % m;
  a %= m;
  while (e) {
    if (e & 1)
      result = mul_mod(result, a, m);
    a = mul_mod(a, a, m);
    e >>= 1;
  }
  return result;
}

bool is_prime(u64 n)
{
  if (n < 2)
    return false;
  for (u64 small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0)
      return n == small;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set is exact for n < 3.3 * 10^24.
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1)
      continue;
    bool composite = true;
    for (unsigned i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite)
      return false;
  }
  return true;
}

std::vector<std::pair<u64, unsigned>> factorize(u64 n)
{
  if (n == 0)
    throw std::invalid_argument("factorize: zero has no factorization");

  std::vector<std::pair<u64, unsigned>> factors;
  auto take = [&](u64 d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e)
      factors.emplace_back(d, e);
    return e > 0;
  };

  take(2);
  take(3);
  bool cofactor_prime = n > 1 && is_prime(n);
  for (u64 d = 5; !cofactor_prime && d <= n / d; d += 6) {
    bool divided = take(d);
    divided |= take(d + 2);
    if (divided)
      cofactor_prime = n > 1 && is_prime(n);
  }
  if (n > 1)
    factors.emplace_back(n, 1);
  return factors;
}

std::vector<u64> prime_divisors(u64 n)
{
  std::vector<u64> primes;
  for (auto [p, e] : factorize(n))
    primes.push_back(p);
  return primes;
}

std::optional<std::pair<u64, unsigned>> prime_power(u64 n)
{
  if (n < 2)
    return std::nullopt;
  auto factors = factorize(n);
  if (factors.size() != 1)
    return std::nullopt;
  return factors.front();
}

u64 checked_pow(u64 p, unsigned k)
{
  u64 result = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (p != 0 && result > std::numeric_limits<u64>::max() / p)
      throw std::overflow_error("checked_pow: result exceeds 64 bits");
    result *= p;
  }
  return result;
}

u64 gcd(u64 a, u64 b)
{
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

u64 lcm(u64 a, u64 b)
{
  if (a == 0 || b == 0)
    return 0;
  return a / gcd(a, b) * b;
}

u64 multiplicative_order(u64 a, u64 m)
{
  if (m == 0 || gcd(a % m, m) != 1)
    throw std::invalid_argument("multiplicative_order: a is not a unit mod m");
  if (m == 1)
    return 1;

  // Carmichael-free approach: the order divides phi(m).
  u64 phi = m;
  for (u64 p : prime_divisors(m))
    phi = phi / p * (p - 1);

  u64 order = phi;
  for (u64 r : prime_divisors(phi)) {
    while (order % r == 0 && pow_mod(a, order / r, m) == 1)
      order /= r;
  }
  return order;
}

bool is_mersenne_prime(u64 p)
{
  if (!is_prime(p))
    return false;
  u64 m = p + 1;
  return (m & (m - 1)) == 0;
}

std::vector<u64> primitive_prime_divisors(u64 p, unsigned k)
{
  if (!is_prime(p))
    throw std::invalid_argument("primitive_prime_divisors: p must be prime");
  if (k < 2)
    throw std::invalid_argument("primitive_prime_divisors: k must be at least 2");

  const u64 n = checked_pow(p, k) - 1;
  std::vector<u64> result;
  for (u64 r : prime_divisors(n)) {
    // r is primitive iff p has multiplicative order exactly k modulo r.
    if (p % r != 0 && multiplicative_order(p % r, r) == k)
      result.push_back(r);
  }
  return result;
}

ParameterSet validate_c1(u64 q)
{
  auto pp = prime_power(q);
  if (!pp)
    throw std::invalid_argument("validate_c1: q = " + std::to_string(q) + " is not a prime power");

  ParameterSet ps;
  ps.q = q;
  ps.p = pp->first;
  ps.f = pp->second;
  ps.n = q + 1;

  u64 odd = ps.n;
  while ((odd & 1) == 0) {
    odd >>= 1;
    ++ps.s;
  }
  if (odd > 1) {
    auto odd_pp = prime_power(odd);
    if (!odd_pp) {
      ps.violated_clause = "q+1 has more than one odd prime divisor";
      return ps;
    }
    ps.r = odd_pp->first;
    ps.t = odd_pp->second;
  }

  if (ps.n <= 3) {
    ps.violated_clause = "n = q+1 must exceed 3";
    return ps;
  }
  if (ps.s < 2 && q % 2 == 1) {
    ps.violated_clause = "q odd and s=1";
    return ps;
  }
  ps.valid = true;
  return ps;
}

std::string to_string(CaseLabel label)
{
  switch (label) {
    case CaseLabel::i: return "i";
    case CaseLabel::ii: return "ii";
    case CaseLabel::iii: return "iii";
    case CaseLabel::none: return "none";
  }
  return "none";
}

Theorem1Case classify_theorem1_case(u64 p, unsigned k, u64 n)
{
  if (!is_prime(p))
    throw std::invalid_argument("classify_theorem1_case: p must be prime");
  if (k < 1 || n < 1)
    throw std::invalid_argument("classify_theorem1_case: k and n must be positive");

  Theorem1Case result;
  if (k == 1)
    return result;

  const bool exceptional = (p == 2 && k == 6);
  result.case_ii_possible = exceptional;

  std::vector<u64> candidates = primitive_prime_divisors(p, k);
  if (exceptional)
    candidates = {3, 7};
  for (u64 r : candidates) {
    if (n % r == 0) {
      result.label = CaseLabel::i;
      result.witness_prime = r;
      return result;
    }
  }

  if (k == 2 && is_mersenne_prime(p))
    result.label = CaseLabel::iii;
  return result;
}

} // namespace tarc::numth
