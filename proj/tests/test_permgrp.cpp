#include "doctest.h"

#include <random>
#include <set>
#include <unordered_set>

#include "tarc/perm_group.hpp"

using namespace tarc;
using namespace tarc::perm;

namespace {

// Oracle: closure of the generators by breadth-first multiplication.
std::uint64_t brute_order(std::size_t n, const std::vector<Perm>& gens)
{
  std::unordered_set<Perm, PermHash> seen{Perm::identity(n)};
  std::vector<Perm> queue{Perm::identity(n)};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const auto& g : gens) {
      Perm y = queue[i] * g;
      if (seen.insert(y).second)
        queue.push_back(y);
    }
  return queue.size();
}

Perm random_perm(std::size_t n, std::mt19937_64& rng)
{
  std::vector<Point> img(n);
  for (std::size_t i = 0; i < n; ++i)
    img[i] = static_cast<Point>(i);
  std::shuffle(img.begin(), img.end(), rng);
  return Perm(img);
}

// PSL(2,7) on the projective line {0..6, inf=7}.
PermGroup psl27()
{
  auto mobius = [](auto f) {
    std::vector<Point> img(8);
    for (Point x = 0; x < 8; ++x)
      img[x] = f(x);
    return Perm(img);
  };
  auto inv7 = [](Point x) -> Point {
    for (Point y = 1; y < 7; ++y)
      if (x * y % 7 == 1)
        return y;
    return 0;
  };
  Perm t = mobius([](Point x) -> Point { return x == 7 ? 7 : (x + 1) % 7; });
  Perm m = mobius([](Point x) -> Point { return x == 7 ? 7 : x * 2 % 7; });
  Perm s = mobius([&](Point x) -> Point {
    if (x == 7)
      return 0;
    if (x == 0)
      return 7;
    return (7 - inv7(x)) % 7;
  });
  return PermGroup(8, {t, m, s});
}

} // namespace

TEST_CASE("perm basics")
{
  Perm a = Perm::from_cycles("(0 1 2)", 4);
  Perm b = Perm::from_cycles("(1 3)", 4);
  CHECK((a * b)[0] == b[a[0]]);
  CHECK((a * a.inverse()).is_identity());
  CHECK(a.order() == 3);
  CHECK(a.pow(-1) == a.inverse());
  CHECK(a.pow(4) == a);
  CHECK(a.to_cycles() == "(0 1 2)");
  CHECK(Perm::from_cycles("()", 3).is_identity());
  CHECK(Perm::from_cycles(a.to_cycles(), 4) == a);
  CHECK(a.conjugate_by(b) == b.inverse() * a * b);
  CHECK_FALSE(b.is_even());
  CHECK_THROWS(Perm(std::vector<Point>{0, 0, 1}));
  CHECK_THROWS(Perm::from_cycles("(0 5)", 4));
  CHECK_THROWS(Perm::from_cycles("(0 1)(1 2)", 4));
  CHECK(Perm::from_json(a.to_json()) == a);
}

TEST_CASE("orders")
{
  PermGroup s5(5, {Perm::from_cycles("(0 1 2 3 4)", 5), Perm::from_cycles("(0 1)", 5)});
  CHECK(s5.order() == 120);
  CHECK(psl27().order() == 168);
  CHECK(PermGroup::alternating(7).order() == 2520);
  CHECK(PermGroup::symmetric(10).order() == 3628800);
  PermGroup m11(11, {Perm::from_cycles("(0 1 2 3 4 5 6 7 8 9 10)", 11),
                     Perm::from_cycles("(2 6 10 7)(3 9 4 5)", 11)});
  CHECK(m11.order() == 7920);

  // A_5^5 on 5 disjoint blocks.
  std::vector<Perm> gens;
  for (std::size_t b = 0; b < 5; ++b) {
    gens.push_back(embed(Perm::from_cycles("(0 1 2)", 5), 5 * b, 25));
    gens.push_back(embed(Perm::from_cycles("(0 1 2 3 4)", 5), 5 * b, 25));
  }
  PermGroup t5(25, gens);
  CHECK(t5.order() == 777600000);
  const auto& c = t5.chain();
  BigInt prod = 1;
  for (std::size_t i = 0; i < c.length(); ++i)
    prod *= c.level(i).orbit.size();
  CHECK(prod == t5.order());
}

TEST_CASE("membership")
{
  auto a5 = PermGroup::alternating(5);
  CHECK(a5.contains(Perm::identity(5)));
  CHECK_FALSE(a5.contains(Perm::from_cycles("(0 1)", 5)));
  CHECK(a5.contains(Perm::from_cycles("(0 1)(2 3)", 5)));
  CHECK_THROWS_AS(a5.contains(Perm::identity(6)), std::invalid_argument);
  for (const auto& g : a5.generators())
    CHECK(a5.chain().sift(g).residue.is_identity());
}

TEST_CASE("random groups: chain order matches closure and is base independent")
{
  std::mt19937_64 rng(2024);
  int checked = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 3 + trial % 6;
    std::vector<Perm> gens;
    const int k = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < k; ++i) {
      Perm p = random_perm(n, rng);
      // Thin out to get a mix of small and large groups.
      if (trial % 3 == 0)
        p = p.pow(2);
      gens.push_back(p);
    }
    PermGroup g(n, gens);
    CAPTURE(trial);
    CHECK(g.order() == brute_order(n, gens));
    for (const auto& x : gens)
      CHECK(g.contains(x));
    StabChain::Options opts;
    opts.seed = 99;
    opts.base_prefix = {static_cast<Point>(n - 1)};
    StabChain other(n, gens, opts);
    CHECK(other.order() == g.order());
    if (g.order() <= 5040) {
      std::set<Perm> all;
      g.for_each_element([&](const Perm& x) { all.insert(x); });
      CHECK(BigInt(all.size()) == g.order());
    }
    ++checked;
  }
  CHECK(checked == 100);
}

TEST_CASE("action reports")
{
  PermGroup c4(4, {Perm::from_cycles("(0 1 2 3)", 4)});
  auto r = action_report(c4);
  CHECK(r.transitive);
  CHECK(r.regular);
  CHECK_FALSE(r.primitive);
  REQUIRE(r.block.has_value());
  CHECK(*r.block == std::vector<Point>{0, 2});

  auto p = action_report(psl27());
  CHECK(p.two_transitive);
  CHECK(p.primitive);
  CHECK_FALSE(p.semiregular);

  PermGroup two_orbits(4, {Perm::from_cycles("(0 1)", 4), Perm::from_cycles("(2 3)", 4)});
  auto t = action_report(two_orbits);
  CHECK_FALSE(t.transitive);
  CHECK(t.semiregular == false);
  CHECK(t.orbits.size() == 2);
}

TEST_CASE("primitivity of subgroups of AGL(1,16) with an element of order 5")
{
  // GF(16) with modulus x^4 + x + 1; points are field codes.
  auto mul = [](Point a, Point b) {
    Point r = 0;
    for (int i = 0; i < 4; ++i)
      if (b >> i & 1)
        r ^= a << i;
    for (int i = 7; i >= 4; --i)
      if (r >> i & 1)
        r ^= 0b10011u << (i - 4);
    return r;
  };
  std::vector<Perm> translations;
  for (Point v : {1u, 2u, 4u, 8u}) {
    std::vector<Point> img(16);
    for (Point x = 0; x < 16; ++x)
      img[x] = x ^ v;
    translations.emplace_back(img);
  }
  auto scalar = [&](Point s) {
    std::vector<Point> img(16);
    for (Point x = 0; x < 16; ++x)
      img[x] = mul(s, x);
    return Perm(img);
  };
  Perm w = scalar(2);  // x generates GF(16)^*, order 15
  // Subgroups F:<w^k> for k | 15 with 5 | 15/k: k = 1, 3.
  for (long long k : {1, 3}) {
    auto gens = translations;
    gens.push_back(w.pow(k));
    PermGroup h(16, gens);
    CHECK(h.order() % 5 == 0);
    CHECK(action_report(h).primitive);
  }
  // Without an element of order 5 primitivity can fail: F:<w^5> (order 48).
  auto gens = translations;
  gens.push_back(w.pow(5));
  CHECK_FALSE(action_report(PermGroup(16, gens)).primitive);
}

TEST_CASE("coset action")
{
  auto s4 = PermGroup::symmetric(4);
  PermGroup s3(4, {Perm::from_cycles("(0 1)", 4), Perm::from_cycles("(0 1 2)", 4)});
  auto ca = coset_action(s4, s3);
  CHECK(ca.action.degree() == 4);
  CHECK(ca.action.order() == 24);
  CHECK(action_report(ca.action).two_transitive);
  CHECK(ca.reps[0].is_identity());
  CHECK_THROWS_AS(coset_action(s3, s4), std::invalid_argument);
  CHECK_THROWS_AS(coset_action(s4, s3, 3), std::length_error);

  // Core-free: action order equals the group order.
  auto psl = psl27();
  auto stab = psl.stabilizer({0});
  CHECK(stab.order() == 21);
  auto pa = coset_action(psl, stab);
  CHECK(pa.action.degree() == 8);
  CHECK(pa.action.order() == 168);
}

TEST_CASE("filtered intersection")
{
  PermGroup s3(4, {Perm::from_cycles("(0 1)", 4), Perm::from_cycles("(0 1 2)", 4)});
  auto a4 = PermGroup::alternating(4);
  auto c3 = filtered_intersection_with_product(s3, a4);
  CHECK(c3.order() == 3);
}

TEST_CASE("canonical coset images are constant on cosets")
{
  std::mt19937_64 rng(8);
  auto psl = psl27();
  auto stab = psl.stabilizer({3});
  const auto& K = stab.sorted_chain();
  auto base = K.base();
  CHECK(std::is_sorted(base.begin(), base.end()));
  auto ks = stab.elements();
  for (int t = 0; t < 20; ++t) {
    Perm x = random_perm(8, rng);
    auto key = K.canonical_coset_image(x);
    std::vector<Point> least = (ks[0] * x).images();
    for (const auto& k : ks) {
      CHECK(K.canonical_coset_image(k * x) == key);
      least = std::min(least, (k * x).images());
    }
    CHECK(key == least);
  }
}
