#include "doctest.h"

#include <stdexcept>

#include "tarc/numth.hpp"

using namespace tarc::numth;

namespace {

// Naive oracle: order of p modulo r by repeated multiplication.
u64 naive_order(u64 p, u64 r)
{
  u64 x = p % r, k = 1;
  while (x != 1) {
    x = x * p % r;
    ++k;
  }
  return k;
}

std::vector<u64> naive_ppd(u64 p, unsigned k)
{
  u64 n = 1;
  for (unsigned i = 0; i < k; ++i)
    n *= p;
  n -= 1;
  std::vector<u64> out;
  for (u64 r = 2; r <= n; ++r) {
    bool prime = true;
    for (u64 d = 2; d * d <= r; ++d)
      if (r % d == 0) {
        prime = false;
        break;
      }
    if (prime && n % r == 0 && naive_order(p, r) == k)
      out.push_back(r);
  }
  return out;
}

} // namespace

TEST_CASE("primality and factoring")
{
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(561));
  CHECK(is_prime(18446744073709551557ull));
  auto f = factorize(360);
  REQUIRE(f.size() == 3);
  CHECK(f[0] == std::pair<u64, unsigned>{2, 3});
  CHECK(f[2] == std::pair<u64, unsigned>{5, 1});
  CHECK(prime_power(64) == std::pair<u64, unsigned>{2, 6});
  CHECK_FALSE(prime_power(12).has_value());
  CHECK_THROWS_AS(checked_pow(2, 64), std::overflow_error);
}

TEST_CASE("primitive prime divisors")
{
  CHECK(primitive_prime_divisors(2, 4) == std::vector<u64>{5});
  CHECK(primitive_prime_divisors(2, 6).empty());
  CHECK(primitive_prime_divisors(7, 2).empty());
  CHECK(primitive_prime_divisors(3, 2).empty());
  CHECK(primitive_prime_divisors(2, 3) == std::vector<u64>{7});
  CHECK_THROWS_AS(primitive_prime_divisors(4, 2), std::invalid_argument);
  CHECK_THROWS_AS(primitive_prime_divisors(3, 1), std::invalid_argument);

  for (u64 p : {2, 3, 5, 7, 11})
    for (unsigned k = 2; k <= 6; ++k) {
      u64 n = 1;
      for (unsigned i = 0; i < k; ++i)
        n *= p;
      if (n > 200000)
        continue;
      CAPTURE(p);
      CAPTURE(k);
      CHECK(primitive_prime_divisors(p, k) == naive_ppd(p, k));
    }
}

TEST_CASE("zsigmondy exceptions are the only empty sets")
{
  for (u64 p : {2, 3, 5, 7, 11, 13, 31})
    for (unsigned k = 2; k <= 12; ++k) {
      if (checked_pow(p, k) > (1ull << 40))
        continue;
      bool empty = primitive_prime_divisors(p, k).empty();
      // k = 2 is exceptional exactly when p + 1 is a power of 2.
      bool exception = (p == 2 && k == 6) || (k == 2 && ((p + 1) & p) == 0);
      CAPTURE(p);
      CAPTURE(k);
      CHECK(empty == exception);
    }
}

TEST_CASE("k divides r - 1 for every primitive prime divisor")
{
  for (u64 p = 2; p < 64; ++p) {
    if (!is_prime(p))
      continue;
    for (unsigned k = 2; checked_pow(p, k) < (1u << 20); ++k)
      for (u64 r : primitive_prime_divisors(p, k))
        CHECK((r - 1) % k == 0);
  }
}

TEST_CASE("parameter validation")
{
  auto seven = validate_c1(7);
  CHECK(seven.valid);
  CHECK(seven.n == 8);
  CHECK(seven.s == 3);
  CHECK_FALSE(seven.r.has_value());

  auto five = validate_c1(5);
  CHECK_FALSE(five.valid);
  CHECK(five.s == 1);
  CHECK(five.r == 3u);
  CHECK(five.t == 1);
  CHECK(five.violated_clause == "q odd and s=1");

  auto four = validate_c1(4);
  CHECK(four.valid);
  CHECK(four.n == 5);
  CHECK(four.s == 0);
  CHECK(four.r == 5u);

  CHECK_FALSE(validate_c1(2).valid);
  CHECK_FALSE(validate_c1(13).valid); // 14 = 2 * 7, s = 1
  CHECK_FALSE(validate_c1(29).valid); // 30 has two odd primes
  CHECK_THROWS_AS(validate_c1(6), std::invalid_argument);

  for (u64 q = 2; q < 600; ++q) {
    if (!prime_power(q))
      continue;
    auto ps = validate_c1(q);
    CHECK(ps.n == q + 1);
    u64 rebuilt = checked_pow(2, ps.s) * (ps.r ? checked_pow(*ps.r, ps.t) : 1);
    if (ps.valid || ps.violated_clause != "q+1 has more than one odd prime divisor")
      CHECK(rebuilt == ps.n);
  }
}

TEST_CASE("mersenne")
{
  CHECK(is_mersenne_prime(3));
  CHECK(is_mersenne_prime(7));
  CHECK(is_mersenne_prime(31));
  CHECK_FALSE(is_mersenne_prime(15));
  CHECK_FALSE(is_mersenne_prime(5));
}

TEST_CASE("case classification")
{
  CHECK(classify_theorem1_case(2, 1, 5).label == CaseLabel::none);
  auto c = classify_theorem1_case(2, 4, 5);
  CHECK(c.label == CaseLabel::i);
  CHECK(c.witness_prime == 5u);
  CHECK(classify_theorem1_case(2, 2, 5).label == CaseLabel::none);
  CHECK(classify_theorem1_case(7, 2, 8).label == CaseLabel::iii);
  auto e = classify_theorem1_case(2, 6, 21);
  CHECK(e.label == CaseLabel::i);
  CHECK(e.case_ii_possible);
  CHECK(classify_theorem1_case(2, 6, 5).label == CaseLabel::none);
}
