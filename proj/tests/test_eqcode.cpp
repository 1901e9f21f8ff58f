#include "doctest.h"

#include <random>
#include <set>

#include "tarc/eqcode.hpp"
#include "tarc/numth.hpp"

using namespace tarc;
using namespace tarc::eqcode;

namespace {

Vec all_ones(std::size_t n) { return Vec(n, 1); }

// Order of m restricted to an invariant code, by brute force on the basis.
std::uint64_t restricted_order(const Code& c, const Matrix& m)
{
  std::uint64_t k = 0;
  std::vector<Vec> cur = c.basis();
  do {
    for (auto& v : cur)
      v = m.apply(v);
    ++k;
  } while (cur != c.basis());
  return k;
}

} // namespace

TEST_CASE("shift matrix")
{
  auto s7 = build_shift_matrix(gf::make_field(7, 1));
  CHECK(s7.n == 8);
  CHECK(s7.order == 48);

  auto F4 = gf::make_field(2, 2);
  auto s4 = build_shift_matrix(F4);
  CHECK(s4.n == 5);
  CHECK(s4.order == 15);
  CHECK(s4.eta == 1);
  CHECK(s4.A.pow(5) == Matrix::identity(F4, 5).scaled(F4->mul(s4.lambda, s4.lambda)));

  auto s2 = build_shift_matrix(gf::make_field(2, 1));
  CHECK(s2.D.is_identity());
  CHECK(s2.A == s2.P);
  CHECK(s2.order == 3);
}

TEST_CASE("decomposition of A")
{
  auto s7 = build_shift_matrix(gf::make_field(7, 1));
  auto d7 = decompose_invariant(s7.A);
  REQUIRE(d7.components.size() == 4);
  for (const auto& c : d7.components) {
    CHECK(c.code.dimension() == 2);
    CHECK(c.faithful);
    CHECK(c.code.is_invariant(s7.A));
  }

  auto F4 = gf::make_field(2, 2);
  auto s4 = build_shift_matrix(F4);
  auto d4 = decompose_invariant(s4.A);
  int one_dim = 0;
  for (const auto& c : d4.components)
    if (c.code.dimension() == 1) {
      ++one_dim;
      CHECK(c.code == Code(F4, 5, {all_ones(5)}));
    }
  CHECK(one_dim == 1);
}

TEST_CASE("identity is degenerate")
{
  auto F3 = gf::make_field(3, 1);
  auto d = decompose_invariant(Matrix::identity(F3, 2));
  CHECK(d.degenerate);
  CHECK(d.order == 1);
  REQUIRE(d.components.size() == 2);
  for (const auto& c : d.components) {
    CHECK(c.code.dimension() == 1);
    CHECK(c.kernel_order == 1);
  }
}

TEST_CASE("non-semisimple input rejected")
{
  auto F2 = gf::make_field(2, 1);
  CHECK_THROWS_AS(decompose_invariant(Matrix(F2, {{1, 1}, {0, 1}})), std::domain_error);
  CHECK_THROWS_AS(decompose_invariant(Matrix(F2, {{1, 1}, {1, 1}})), std::domain_error);
}

TEST_CASE("faithful codes are equidistant of weight q")
{
  for (std::uint64_t q = 3; q <= 64; ++q) {
    auto pp = numth::prime_power(q);
    if (!pp || !numth::validate_c1(q).valid)
      continue;
    CAPTURE(q);
    auto field = gf::make_field(pp->first, pp->second);
    auto shift = build_shift_matrix(field);
    auto code = find_faithful_irreducible_code(q);
    CHECK(code.dimension() == 2);
    auto profile = weight_profile(code);
    REQUIRE(profile.size() == 1);
    CHECK(profile.begin()->first == q);
    CHECK(profile.begin()->second == q * q - 1);
    CHECK(is_regular_on_nonzero(code, shift.A));
    auto kernels = coordinate_kernels(code);
    std::set<std::vector<Vec>> distinct;
    for (const auto& k : kernels) {
      CHECK(k.dimension() == 1);
      distinct.insert(k.basis());
    }
    CHECK(distinct.size() == q + 1);
  }
  CHECK_THROWS_AS(find_faithful_irreducible_code(5), std::invalid_argument);
  CHECK(find_faithful_irreducible_code(7).length() == 8);
  CHECK(find_faithful_irreducible_code(8).length() == 9);
}

TEST_CASE("decomposition reconstructs the space")
{
  for (std::uint64_t q : {4, 7, 8, 9, 16, 23, 27, 31, 32}) {
    auto pp = numth::prime_power(q);
    auto shift = build_shift_matrix(gf::make_field(pp->first, pp->second));
    auto dec = decompose_invariant(shift.A);
    std::size_t dim = 0;
    for (const auto& c : dec.components) {
      dim += c.code.dimension();
      CHECK(c.code.is_invariant(shift.A));
      CHECK(restricted_order(c.code, shift.A) * c.kernel_order == dec.order);
    }
    CHECK(dim == shift.n);
    CHECK(dec.change_of_basis.rank() == shift.n);
    CHECK(dec.order == shift.order);
  }
}

TEST_CASE("weight profiles")
{
  auto F3 = gf::make_field(3, 1);
  CHECK(weight_profile(Code(F3, 4)).empty());
  auto p = weight_profile(Code(F3, 4, {{1, 0, 0, 0}}));
  CHECK(p == std::map<std::size_t, std::uint64_t>{{1, 2}});

  auto F4 = gf::make_field(2, 2);
  auto s4 = build_shift_matrix(F4);
  CHECK_FALSE(is_regular_on_nonzero(Code(F4, 5, {all_ones(5)}), s4.A));
  CHECK_FALSE(is_regular_on_nonzero(Code(F4, 5), s4.A));
  CHECK_THROWS(is_regular_on_nonzero(Code(F4, 5, {{1, 0, 0, 0, 0}}), s4.A));
}

TEST_CASE("singleton bound on random 2-dim codes")
{
  std::mt19937_64 rng(3);
  for (std::uint64_t q : {3, 4, 5, 7}) {
    auto pp = numth::prime_power(q);
    auto F = gf::make_field(pp->first, pp->second);
    std::uniform_int_distribution<gf::Elem> dist(0, F->q() - 1);
    for (int t = 0; t < 40; ++t) {
      const std::size_t n = 2 + t % 6;
      Vec a(n), b(n);
      for (auto& x : a)
        x = dist(rng);
      for (auto& x : b)
        x = dist(rng);
      Code c(F, n, {a, b});
      if (c.dimension() != 2)
        continue;
      CHECK(weight_profile(c).begin()->first <= n - 1);
    }
  }
}

TEST_CASE("brute-force invariant planes for q = 4")
{
  auto F4 = gf::make_field(2, 2);
  auto s4 = build_shift_matrix(F4);
  std::set<std::vector<Vec>> brute;
  Code whole(F4, 5, linalg::Matrix::identity(F4, 5).row_vectors());
  for (const auto& v : whole.codewords()) {
    if (weight(v) == 0)
      continue;
    std::vector<Vec> orbit{v};
    for (Vec w = s4.A.apply(v); w != v; w = s4.A.apply(w))
      orbit.push_back(w);
    Code span(F4, 5, orbit);
    if (span.dimension() == 2 && restricted_order(span, s4.A) == s4.order)
      brute.insert(span.basis());
  }
  std::set<std::vector<Vec>> reported;
  for (const auto& c : decompose_invariant(s4.A).components)
    if (c.faithful && c.code.dimension() == 2)
      reported.insert(c.code.basis());
  CHECK(brute == reported);
  CHECK(!brute.empty());
}

TEST_CASE("random semisimple matrices")
{
  std::mt19937_64 rng(5);
  for (unsigned p : {2u, 3u, 7u}) {
    auto F = gf::make_field(p, 1);
    int tested = 0;
    for (int attempt = 0; attempt < 400 && tested < 12; ++attempt) {
      const std::size_t n = 2 + attempt % 19;
      // Conjugate a block-diagonal matrix of companion blocks of random
      // irreducibles so the factor degrees stay small.
      Matrix block(F, n, n);
      std::size_t pos = 0;
      std::set<std::string> used;
      bool ok = true;
      while (pos < n) {
        std::size_t d = std::min<std::size_t>(1 + rng() % 4, n - pos);
        gf::Poly g(F);
        for (int tries = 0; tries < 50; ++tries) {
          Vec c(d + 1);
          for (auto& x : c)
            x = static_cast<gf::Elem>(rng() % p);
          c[d] = 1;
          g = gf::Poly(F, c);
          if (g.coeff(0) != 0 && gf::is_irreducible(g))
            break;
        }
        if (g.degree() != static_cast<int>(d) || g.coeff(0) == 0 || !gf::is_irreducible(g)) {
          ok = false;
          break;
        }
        used.insert(g.to_string());
        for (std::size_t i = 0; i + 1 < d; ++i)
          block.set(pos + i, pos + i + 1, 1);
        for (std::size_t j = 0; j < d; ++j)
          block.set(pos + d - 1, pos + j, F->neg(g.coeff(j)));
        pos += d;
      }
      if (!ok)
        continue;
      Matrix change(F, n, n);
      do {
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j)
            change.set(i, j, static_cast<gf::Elem>(rng() % p));
      } while (change.rank() != n);
      (void)used;
      Matrix m = change.inverse() * block * change;
      auto dec = decompose_invariant(m);
      ++tested;
      std::size_t dim = 0;
      for (const auto& c : dec.components) {
        dim += c.code.dimension();
        CHECK(c.code.is_invariant(m));
        CHECK(c.code.dimension() == static_cast<std::size_t>(c.factor.degree()));
      }
      CHECK(dim == n);
      CHECK(dec.change_of_basis.rank() == n);
      CHECK(m.pow(dec.order).is_identity());
    }
    CHECK(tested >= 10);
  }
}
