#include "doctest.h"

#include <deque>
#include <map>
#include <set>

#include "tarc/certificate.hpp"
#include "tarc/graph.hpp"

using namespace tarc;
using namespace tarc::graph;
using boost::multiprecision::pow;

namespace {

struct Toy {
  PermGroup G, H;
  Perm g;
};

Toy k4()
{
  return {PermGroup::symmetric(4), PermGroup(4, {Perm::from_cycles("(0 1)", 4), Perm::from_cycles("(0 1 2)", 4)}),
          Perm::from_cycles("(0 3)", 4)};
}

PermGroup s2s3()
{
  return PermGroup(5, {Perm::from_cycles("(0 1)", 5), Perm::from_cycles("(2 3)", 5), Perm::from_cycles("(2 3 4)", 5)});
}

Toy petersen() { return {PermGroup::symmetric(5), s2s3(), Perm::from_cycles("(0 2)(1 3)", 5)}; }
Toy triangular() { return {PermGroup::symmetric(5), s2s3(), Perm::from_cycles("(1 2)", 5)}; }

// Orbits of G on ordered triples of vertices forming 2-arcs, by running every
// group element over every triple.
std::size_t brute_two_arc_orbits(const SmallGraph& gr, const PermGroup& action, std::size_t& arcs)
{
  const auto n = static_cast<Vertex>(gr.vertex_count());
  auto elems = action.elements();
  std::set<std::array<Vertex, 3>> todo;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      for (Vertex w = 0; w < n; ++w)
        if (u != w && gr.adjacent(u, v) && gr.adjacent(v, w)) todo.insert({u, v, w});
  arcs = todo.size();
  std::size_t orbits = 0;
  while (!todo.empty()) {
    auto t = *todo.begin();
    ++orbits;
    for (const auto& x : elems) todo.erase({x[t[0]], x[t[1]], x[t[2]]});
  }
  return orbits;
}

std::size_t components(const SmallGraph& g)
{
  std::vector<bool> seen(g.vertex_count(), false);
  std::size_t count = 0;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (seen[s]) continue;
    ++count;
    std::deque<Vertex> q{s};
    seen[s] = true;
    while (!q.empty()) {
      auto u = q.front();
      q.pop_front();
      for (auto v : g.neighbours(u))
        if (!seen[v]) seen[v] = true, q.push_back(v);
    }
  }
  return count;
}

SmallGraph cycle(std::size_t n)
{
  SmallGraph g(n);
  for (Vertex i = 0; i < n; ++i) g.add_edge(i, static_cast<Vertex>((i + 1) % n));
  return g;
}

} // namespace

TEST_CASE("small graph basics")
{
  auto c4 = cycle(4);
  CHECK(c4.valency() == 2);
  CHECK(c4.edge_count() == 4);
  CHECK(c4.bipartite());
  CHECK(c4.girth() == 4);
  CHECK(cycle(5).girth() == 5);
  CHECK(!cycle(5).bipartite());
  CHECK(c4.edge_list() == "0 1\n0 3\n1 2\n2 3\n");
  SmallGraph path(3);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  CHECK(!path.girth().has_value());
  CHECK(!path.valency().has_value());
  CHECK_THROWS_AS(path.add_edge(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(path.add_edge(1, 3), std::invalid_argument);
}

TEST_CASE("coset graph of S4 on S3 is K4")
{
  auto t = k4();
  auto cg = enumerate_small_graph(t.G, t.H, t.g);
  const auto& gr = cg.graph;
  CHECK(gr.vertex_count() == 4);
  CHECK(gr.valency() == 3);
  CHECK(gr.girth() == 3);
  CHECK(gr.connected());
  // Coset H x corresponds to the point 3^x.
  std::set<perm::Point> pts;
  for (const auto& r : cg.cosets.reps) pts.insert(r[3]);
  CHECK(pts.size() == 4);
  std::size_t arcs = 0;
  CHECK(cg.two_arc_orbits == brute_two_arc_orbits(gr, cg.cosets.action, arcs));
  CHECK(cg.two_arcs == arcs);
  CHECK(arcs == 4 * 3 * 2);
  CHECK(cg.two_arc_orbits == 1);
}

TEST_CASE("coset graph of S5 on S2 x S3 is Petersen")
{
  auto t = petersen();
  auto cg = enumerate_small_graph(t.G, t.H, t.g);
  const auto& gr = cg.graph;
  CHECK(gr.vertex_count() == 10);
  CHECK(gr.valency() == 3);
  CHECK(gr.edge_count() == 15);
  CHECK(gr.girth() == 5);
  // Coset H x is the pair {0^x, 1^x}; the graph is the Kneser graph K(5,2).
  std::vector<std::set<perm::Point>> pair;
  for (const auto& r : cg.cosets.reps) pair.push_back({r[0], r[1]});
  for (Vertex u = 0; u < 10; ++u)
    for (Vertex v = 0; v < 10; ++v) {
      if (u == v) continue;
      bool disjoint = !pair[u].count(*pair[v].begin()) && !pair[u].count(*pair[v].rbegin());
      CHECK(gr.adjacent(u, v) == disjoint);
    }
  std::size_t arcs = 0;
  CHECK(cg.two_arc_orbits == brute_two_arc_orbits(gr, cg.cosets.action, arcs));
  CHECK(cg.two_arc_orbits == 1);
}

TEST_CASE("triangular graph is not 2-arc-transitive")
{
  auto t = triangular();
  auto cg = enumerate_small_graph(t.G, t.H, t.g);
  CHECK(cg.graph.valency() == 6);
  std::size_t arcs = 0;
  auto orbits = brute_two_arc_orbits(cg.graph, cg.cosets.action, arcs);
  CHECK(cg.two_arc_orbits == orbits);
  CHECK(orbits > 1);
  auto c = cert::certify(cert::toy_input(t.G, t.H, t.g));
  CHECK(c.valency == 6);
  CHECK(!c.locally_2transitive);
}

TEST_CASE("toy certificates agree with enumeration")
{
  for (const auto& t : {k4(), petersen(), triangular()}) {
    auto cg = enumerate_small_graph(t.G, t.H, t.g);
    auto c = cert::certify(cert::toy_input(t.G, t.H, t.g));
    CHECK(c.valency == *cg.graph.valency());
    CHECK(c.valency * c.order_H_cap_Hg == c.order_H);
    CHECK(c.locally_2transitive == (cg.two_arc_orbits == 1));
    CHECK(c.connected == cg.graph.connected());
  }
}

TEST_CASE("enumeration preconditions")
{
  auto t = k4();
  CHECK_THROWS_AS(enumerate_small_graph(t.G, t.H, Perm::from_cycles("(0 1)", 4)), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_small_graph(t.H, t.H, t.g), std::invalid_argument);
  auto p = petersen();
  CHECK_THROWS_AS(enumerate_small_graph(p.G, p.H, Perm::from_cycles("(0 2 4)", 5)), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_small_graph(p.G, p.H, p.g, 5), std::length_error);
}

TEST_CASE("standard double covers")
{
  auto t = k4();
  auto cube = standard_double_cover(enumerate_small_graph(t.G, t.H, t.g).graph);
  CHECK(cube.vertex_count() == 8);
  CHECK(cube.valency() == 3);
  CHECK(cube.bipartite());
  CHECK(cube.connected());
  CHECK(cube.girth() == 4);
  REQUIRE(cube.sides().has_value());

  auto c4 = standard_double_cover(cycle(4));
  CHECK(!c4.connected());
  CHECK(components(c4) == 2);
  CHECK(c4.valency() == 2);

  SmallGraph k2(2);
  k2.add_edge(0, 1);
  auto two = standard_double_cover(k2);
  CHECK(two.edge_count() == 2);
  CHECK(components(two) == 2);

  // Connected iff connected and non-bipartite.
  auto pg = enumerate_small_graph(petersen().G, petersen().H, petersen().g).graph;
  CHECK(standard_double_cover(pg).connected());
  auto twice = standard_double_cover(standard_double_cover(pg));
  CHECK(twice.vertex_count() == 40);
  CHECK(twice.valency() == 3);
  CHECK(standard_double_cover(cycle(5)).connected());
}

TEST_CASE("certificate for q = 4")
{
  auto pa = construct::nondiagonal_construction(atlas::seed_pgl2(4));
  auto c = cert::certify(cert::input_from(pa));
  CHECK(c.order_G == BigInt(3888000000ULL));
  CHECK(c.order_H == 240);
  CHECK(c.valency == 16);
  CHECK(c.order_H_cap_Hg == 15);
  CHECK(c.connected);
  CHECK(c.locally_2transitive);
  CHECK(c.theorem1_case == "i");
  CHECK(c.case_witness_prime == 5);
  REQUIRE(c.socle.has_value());
  CHECK(c.socle->socle_transitive);
  CHECK(!c.socle->diagonal_type);
  CHECK(!c.first_failure().has_value());
}

TEST_CASE("certificate for q = 7")
{
  auto pa = construct::nondiagonal_construction(atlas::seed_pgl2(7));
  auto c = cert::certify(cert::input_from(pa));
  CHECK(c.valency == 49);
  CHECK(c.order_H_cap_Hg == 48);
  CHECK(c.connected);
  CHECK(c.locally_2transitive);
  CHECK(c.theorem1_case == "iii");
  for (const auto& o : c.socle->projection_orders) CHECK(o == 21);
}

TEST_CASE("bipartite certificate and double cover test")
{
  for (auto fam : {atlas::Family::symmetric, atlas::Family::pgl2}) {
    auto bc = construct::bipartite_construction(5, fam);
    auto c = cert::certify(cert::input_from(bc));
    CHECK(c.valency == 5);
    CHECK(c.order_H_cap_Hg == 16);
    CHECK(c.connected);
    CHECK(c.locally_2transitive);
    REQUIRE(c.bipartite.has_value());
    CHECK(c.bipartite->index == 2);
    CHECK(c.bipartite->g_outside_Gstar);
    CHECK(c.bipartite->H_in_Gstar);
    CHECK(c.socle->diagonal_type);
    CHECK(c.socle->order_M_cap_H == 10);
    CHECK(c.double_cover_verdict == "is_not");
    CHECK(c.theorem1_case == "diagonal");
    CHECK(!c.socle->socle_transitive);
    CHECK(c.socle->socle_orbits == 2);
    CHECK(!c.first_failure().has_value());
    CHECK(cert::not_double_cover_test(bc) == "is_not");
    auto b2 = bc.b.flatten() * bc.b.flatten();
    CHECK(cert::not_double_cover_test(b2, bc.seed.T, bc.n) == "untested");
  }
  CHECK(cert::not_double_cover_test(construct::bipartite_construction(7, atlas::Family::pgl2)) == "is_not");
}

TEST_CASE("valency 64 certificate")
{
  auto ex = construct::example_2_6();
  auto c = cert::certify(cert::input_from(ex));
  CHECK(c.valency == 64);
  CHECK(c.order_H_cap_Hg == 63);
  CHECK(c.connected);
  CHECK(c.locally_2transitive);
  CHECK(c.socle->arc_regular);
  CHECK(c.case_ii_witnessed);
  CHECK(c.socle->socle_orbits == 1);
  CHECK(!c.first_failure().has_value());
  CHECK(c.socle->order_M == c.order_G / c.order_H * 64);
}

TEST_CASE("verify round trip")
{
  auto t = petersen();
  auto j = cert::certify(cert::toy_input(t.G, t.H, t.g)).to_json();
  auto r = cert::verify(nlohmann::json::parse(j.dump()));
  CHECK(r.identical);

  auto bad = j;
  bad["valency"] = "4";
  auto r2 = cert::verify(bad);
  CHECK(!r2.identical);
  CHECK(r2.first_difference == "/valency");

  auto pa = construct::nondiagonal_construction(atlas::seed_pgl2(4));
  auto jc = cert::certify(cert::input_from(pa)).to_json();
  CHECK(cert::verify(jc).identical);

  nlohmann::json junk = {{"schema", "other"}};
  CHECK_THROWS_AS(cert::verify(junk), std::invalid_argument);
  auto broken = j;
  broken["input"]["g"] = {0, 0, 1};
  CHECK_THROWS_AS(cert::verify(broken), std::invalid_argument);
}
