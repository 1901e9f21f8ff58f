#include "doctest.h"

#include "tarc/atlas.hpp"

using namespace tarc;
using namespace tarc::atlas;

TEST_CASE("pgl2 seeds")
{
  auto s7 = seed_pgl2(7);
  CHECK(s7.X.order() == 336);
  CHECK(s7.T.order() == 168);
  CHECK(s7.R().order() == 42);
  CHECK(s7.R_cap_T().order() == 21);
  CHECK(s7.index_XT == 2);
  REQUIRE(s7.o.has_value());
  CHECK(*s7.o == mobius(*gf::make_field(7, 1), 0, 3, 1, 0));
  // o a o^-1 = a^-1.
  CHECK(s7.a->conjugate_by(*s7.o) == s7.a->inverse());

  auto s4 = seed_pgl2(4);
  CHECK(s4.index_XT == 1);
  CHECK(s4.c.is_identity());
  CHECK(s4.R().order() == 12);
  CHECK(s4.X.order() == 60);

  auto s8 = seed_pgl2(8);
  CHECK(s8.X.order() == 504);
  CHECK(s8.R().order() == 56);

  CHECK_THROWS_AS(seed_pgl2(5), std::invalid_argument);
  CHECK_THROWS_AS(seed_pgl2(13), std::invalid_argument);
  CHECK_THROWS_AS(seed_pgl2(6), std::invalid_argument);
}

TEST_CASE("symmetric seeds")
{
  auto s7 = seed_symmetric(7);
  REQUIRE(s7.o.has_value());
  CHECK(s7.T.contains(*s7.o));
  CHECK(s7.c.cycles().size() == 3);
  CHECK(perm::PermGroup(7, {s7.F[0], s7.b, *s7.o}).order() == 2520);
  CHECK(s7.a->conjugate_by(*s7.d) == s7.a->inverse());
  perm::PermGroup dihedral(7, {*s7.a, *s7.d});
  CHECK(dihedral.order() == 12);

  auto s11 = seed_symmetric(11);
  CHECK_FALSE(s11.c.is_even());
  CHECK_FALSE(s11.d->is_even());
  CHECK(s11.o->is_even());
}

TEST_CASE("bipartite-role seeds")
{
  for (auto fam : {Family::symmetric, Family::pgl2}) {
    auto s = fam == Family::symmetric ? seed_symmetric(5, Role::bipartite) : seed_pgl2(5, Role::bipartite);
    CHECK(s.a->order() == 5);
    CHECK(s.b.order() == 4);
    CHECK(s.R_cap_T().order() == 10);
    CHECK_FALSE(s.T.contains(s.b));
  }
  auto s7 = seed_pgl2(7, Role::bipartite);
  CHECK(s7.X.order() == 336);
}

TEST_CASE("PGammaL(2,8)")
{
  auto s = seed_psl28_gamma();
  CHECK(s.X.order() == 1512);
  CHECK(s.b.order() == 3);
  CHECK(s.index_XT == 3);
}
