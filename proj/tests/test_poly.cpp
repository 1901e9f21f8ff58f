#include "doctest.h"

#include <algorithm>
#include <set>

#include "tarc/poly.hpp"

using namespace tarc::gf;

namespace {

// Irreducible iff no monic divisor of degree 1..deg/2 (brute force).
bool brute_irreducible(const Poly& f)
{
  const auto& F = f.field();
  const int n = f.degree();
  if (n <= 0)
    return false;
  for (int d = 1; 2 * d <= n; ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i)
      count *= F->q();
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly g = Poly::from_code(F, code) + Poly::monomial(F, d);
      if ((f % g).is_zero())
        return false;
    }
  }
  return true;
}

} // namespace

TEST_CASE("arithmetic")
{
  auto F = make_field(3, 1);
  Poly a(F, {1, 2, 1}); // (x+1)^2
  Poly b(F, {1, 1});
  auto [qt, r] = a.divmod(b);
  CHECK(qt == b);
  CHECK(r.is_zero());
  CHECK(gcd(a, b) == b);
  CHECK(a.derivative() == Poly(F, {2, 2}));
  CHECK(a.eval(2) == 0);
  CHECK(Poly::from_code(F, 5) == Poly(F, {2, 1}));
}

TEST_CASE("irreducibility agrees with brute force")
{
  for (auto [p, f] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
    auto F = make_field(p, f);
    for (std::uint64_t code = 0; code < 2000; ++code) {
      Poly g = Poly::from_code(F, code);
      if (g.degree() < 1 || g.lead() != 1)
        continue;
      CAPTURE(g.to_string());
      CHECK(is_irreducible(g) == brute_irreducible(g));
    }
  }
}

TEST_CASE("factoring x^n - 1")
{
  auto F = make_field(2, 1);
  Poly f = Poly::monomial(F, 63) - Poly::constant(F, 1);
  auto factors = factor_squarefree(f);
  CHECK(factors.size() == 13);
  std::multiset<int> degrees;
  int primitive = 0;
  Poly prod = Poly::constant(F, 1);
  for (const auto& g : factors) {
    degrees.insert(g.degree());
    CHECK(is_irreducible(g));
    if (order_of_x(g) == 63)
      ++primitive;
    prod = prod * g;
  }
  CHECK(prod == f);
  CHECK(degrees.count(6) == 9);
  CHECK(degrees.count(3) == 2);
  CHECK(primitive == 6);
  CHECK(std::is_sorted(factors.begin(), factors.end()));

  for (auto [p, fd, n] : std::vector<std::tuple<int, int, int>>{{3, 1, 40}, {7, 1, 48}, {2, 2, 45}, {5, 1, 24}, {2, 3, 63}}) {
    auto K = make_field(p, fd);
    Poly h = Poly::monomial(K, n) - Poly::constant(K, 1);
    Poly acc = Poly::constant(K, 1);
    for (const auto& g : factor_squarefree(h)) {
      CHECK(is_irreducible(g));
      CHECK(n % order_of_x(g) == 0);
      acc = acc * g;
    }
    CHECK(acc == h);
  }
  CHECK_THROWS(factor_squarefree(Poly(F, {1, 0, 1})));
}
