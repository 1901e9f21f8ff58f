#include "doctest.h"

#include <numeric>
#include <set>

#include "tarc/construct.hpp"

using namespace tarc;
using namespace tarc::construct;
using boost::multiprecision::pow;

namespace {

// Brute-force element set of a small group.
std::set<Perm> element_set(const PermGroup& g)
{
  auto v = g.elements();
  return {v.begin(), v.end()};
}

// Componentwise membership by looking each component up in an explicit set.
bool in_power_oracle(const Perm& x, const std::set<Perm>& T, std::size_t n, std::size_t deg)
{
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<perm::Point> comp(deg);
    for (std::size_t w = 0; w < deg; ++w) {
      auto img = x[static_cast<perm::Point>(i * deg + w)];
      if (img / deg != i) return false;
      comp[w] = static_cast<perm::Point>(img % deg);
    }
    if (!T.count(Perm(comp))) return false;
  }
  return true;
}

} // namespace

TEST_CASE("elementary abelian coordinates")
{
  auto seed = atlas::seed_pgl2(8);
  ElementaryAbelian F(seed.F, 2);
  CHECK(F.rank() == 3);
  for (gf::Elem a = 0; a < 2; ++a)
    for (gf::Elem b = 0; b < 2; ++b)
      for (gf::Elem c = 0; c < 2; ++c) {
        linalg::Vec v{a, b, c};
        CHECK(F.coordinates(F.element(v)) == v);
      }
  CHECK_THROWS_AS(F.coordinates(seed.b), std::out_of_range);
  CHECK_THROWS_AS(ElementaryAbelian({seed.F[0], seed.F[0]}, 2), std::invalid_argument);
}

TEST_CASE("conjugation by tau is a block permutation")
{
  auto seed = atlas::seed_pgl2(4);
  ElementaryAbelian F(seed.F, 2);
  const std::size_t n = 5;
  auto m = conjugation_matrix(WreathElement::tau(n, seed.degree), F);
  REQUIRE(m.rows() == 10);
  // tau^-1 x tau moves coordinate i to i+1.
  for (std::size_t r = 0; r < 10; ++r)
    for (std::size_t c = 0; c < 10; ++c) CHECK(m.at(r, c) == ((r + 2) % 10 == c ? 1u : 0u));
}

TEST_CASE("theta")
{
  auto s7 = atlas::seed_pgl2(7);
  auto t7 = build_theta(s7);
  CHECK(t7.flatten().order() == 48);
  CHECK(t7.n() == 8);
  CHECK(t7.pow(8) == WreathElement::constant(s7.b * s7.b * s7.c, 8));
  CHECK(t7[0] == s7.b * s7.c);
  {
    // <theta^n> = <b^2> x <c> with bold letters constant across coordinates.
    const std::size_t N = 8 * s7.degree;
    PermGroup cyc(N, {t7.pow(8).flatten()});
    PermGroup prod(N, {WreathElement::constant(s7.b * s7.b, 8).flatten(), WreathElement::constant(s7.c, 8).flatten()});
    CHECK(cyc.order() == 6);
    CHECK(cyc.order() == prod.order());
    CHECK(cyc.is_subgroup_of(prod));
  }
  CHECK(t7[1] == s7.b);

  auto s4 = atlas::seed_pgl2(4);
  auto t4 = build_theta(s4);
  CHECK(t4.flatten().order() == 15);
  for (std::size_t i = 0; i < 5; ++i) CHECK(t4[i] == s4.b);

  ElementaryAbelian F(s4.F, 2);
  auto m = conjugation_matrix(t4, F);
  CHECK(m.rows() == 10);
  CHECK(eqcode::matrix_order(m, 15) == 15);

  auto g = atlas::seed_psl28_gamma();
  auto t = build_theta_pattern(g.b, 21, ThetaReading::last_b);
  CHECK(t.flatten().order() == 63);
  CHECK(t[1].is_identity());
  CHECK(t[20] == g.b);
  CHECK(build_theta_pattern(g.b, 21, ThetaReading::last_b_squared).flatten().order() == 21);
  ElementaryAbelian F8(g.F, 2);
  CHECK(eqcode::matrix_order(conjugation_matrix(t, F8), 63) == 63);
}

TEST_CASE("q = 4 construction")
{
  auto seed = atlas::seed_pgl2(4);
  auto pa = nondiagonal_construction(seed);
  CHECK(pa.order_E == 16);
  CHECK(pa.order_H == 16 * 15);
  CHECK(pa.order_G == pow(BigInt(60), 5) * 5);
  CHECK(pa.order_G == BigInt(3888000000ULL));
  CHECK(pa.order_G / pa.order_H == 16200000);
  CHECK(pa.H_two_transitive);
  REQUIRE(pa.similar_to_shift.has_value());
  CHECK(*pa.similar_to_shift);

  // T^5 cap H counted against an explicit element set of T.
  auto T = element_set(seed.T);
  std::size_t count = 0;
  for (const auto& h : pa.H.elements())
    if (in_power_oracle(h, T, 5, seed.degree)) ++count;
  CHECK(count == 16 * 3);
  CHECK(pa.order_M_cap_H == count);
}

TEST_CASE("q = 7 construction")
{
  auto seed = atlas::seed_pgl2(7);
  auto pa = nondiagonal_construction(seed);
  CHECK(pa.order_E == 49);
  CHECK(pa.order_H == 2352);
  CHECK(pa.order_G == pow(BigInt(168), 8) * 16);
  CHECK(pa.candidates.size() == 4);
  CHECK(pa.projection_orders.size() == 8);
  for (const auto& o : pa.projection_orders) CHECK(o == 21);
  CHECK(pa.order_M_cap_H > 21);
  CHECK(pa.non_diagonal);
  CHECK(pa.subdirect);
  CHECK(pa.socle_transitive);
  CHECK(*pa.similar_to_shift);

  // theta^m in T^8 exactly when 16 divides m.
  auto T = element_set(seed.T);
  const Perm th = pa.theta.flatten();
  for (long long m = 1; m <= 48; ++m) CHECK(in_power_oracle(th.pow(m), T, 8, seed.degree) == (m % 16 == 0));

  // Every qualifying component gives a valid construction.
  for (std::size_t c = 1; c < pa.candidates.size(); ++c) CHECK(build_E_and_H(seed, pa.theta, c).order_H == 2352);
  CHECK_THROWS_AS(build_E_and_H(seed, pa.theta, 4), std::out_of_range);
}

TEST_CASE("symmetric seed construction")
{
  auto pa = nondiagonal_construction(atlas::seed_symmetric(7));
  CHECK(pa.order_H == 2352);
  CHECK(pa.order_G == pow(BigInt(2520), 8) * 16);
  CHECK(*pa.similar_to_shift);
  for (const auto& o : pa.projection_orders) CHECK(o == 21);
}

TEST_CASE("bipartite construction")
{
  for (auto fam : {atlas::Family::symmetric, atlas::Family::pgl2}) {
    auto bc = bipartite_construction(5, fam);
    CHECK(bc.relations);
    CHECK(bc.order_H == 80);
    CHECK(bc.order_K == 16);
    CHECK(bc.order_Gstar == pow(BigInt(60), 4) * 8);
    CHECK(bc.order_G == pow(BigInt(60), 4) * 16);
    CHECK(bc.o_outside_Gstar);
    CHECK(bc.order_M_cap_H == 10);
    CHECK(bc.diagonal);

    // Relations recomputed from the definitions.
    const Perm o = bc.o.flatten(), b = bc.b.flatten(), t = bc.tau.flatten();
    CHECK(o.conjugate_by(t) == b.inverse() * o);
    CHECK(b.conjugate_by(o) == b.inverse());
    CHECK(t.conjugate_by(o) == b.inverse() * t);
  }
  auto b7 = bipartite_construction(7, atlas::Family::pgl2);
  CHECK(b7.order_H == 7 * 36);
  CHECK_THROWS_AS(bipartite_construction(6, atlas::Family::pgl2), std::invalid_argument);
}

TEST_CASE("twisted centralizer")
{
  // theta = tau: the centralizer is the diagonal copy of T.
  auto T = PermGroup::alternating(4);
  auto tn = twisted_centralizer(T, WreathElement::tau(3, 4));
  CHECK(tn.centralizer.size() == 12);
  for (const auto& m : tn.centralizer) {
    auto w = WreathElement::unflatten(m, 3, 4);
    CHECK(w[0] == w[1]);
    CHECK(w[1] == w[2]);
  }

  // Brute force over T^3 for a twisted element of S_3 wr C_3.
  auto S3 = PermGroup::symmetric(3);
  auto X = S3.elements();
  auto theta = WreathElement({Perm::from_cycles("(0 1)", 3), Perm(3), Perm::from_cycles("(0 1 2)", 3)}, 0) *
               WreathElement::tau(3, 3);
  const Perm th = theta.flatten();
  const auto ord = static_cast<long long>(th.order());
  std::set<Perm> cent, norm;
  for (const auto& x : X)
    for (const auto& y : X)
      for (const auto& z : X) {
        Perm m = WreathElement({x, y, z}, 0).flatten();
        for (long long j = 1; j < ord; ++j) {
          if (std::gcd(j, ord) != 1) continue;
          if (th.conjugate_by(m) == th.pow(j)) {
            norm.insert(m);
            if (j == 1) cent.insert(m);
          }
        }
      }
  auto got = twisted_centralizer(S3, theta);
  CHECK(std::set<Perm>(got.centralizer.begin(), got.centralizer.end()) == cent);
  CHECK(std::set<Perm>(got.normalizer.begin(), got.normalizer.end()) == norm);

  CHECK_THROWS_AS(twisted_centralizer(S3, WreathElement::identity(3, 3)), std::invalid_argument);
}

TEST_CASE("valency 64 example")
{
  auto ex = example_2_6();
  CHECK(ex.counts_match);
  CHECK(ex.theta_order == 63);
  CHECK(ex.component_count == 13);
  CHECK(ex.dimensions == std::vector<std::size_t>{1, 2, 3, 3, 6, 6, 6, 6, 6, 6, 6, 6, 6});
  CHECK(ex.regular_six == 6);
  CHECK(ex.pa.order_E == 64);
  CHECK(ex.pa.order_H == 4032);
  CHECK(ex.order_G == pow(BigInt(504), 21) * 63);
  CHECK(ex.pa.order_M_cap_H == 64);
  CHECK(ex.normalizer_order == 6);
  CHECK(ex.normalizer_nonabelian);
  CHECK(ex.normalizer_involutions == 3);
  CHECK(ex.index_identity);
  CHECK(ex.arc_regular_identity);
  CHECK(ex.index * 64 == pow(BigInt(504), 21));
  REQUIRE(ex.g.has_value());
  CHECK(ex.generating_classes_up_to_normalizer == 1);
  CHECK(ex.generating_involutions.size() == 2);

  // Double cosets: g and an element of HgH agree, g and a non-member do not.
  const auto& H = ex.pa.H;
  const Perm h0 = H.generators().front(), h1 = H.generators().back();
  CHECK(same_double_coset(H, *ex.g, h0 * *ex.g * h1));
  CHECK(!same_double_coset(H, *ex.g, h0));
}
