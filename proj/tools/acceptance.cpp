// Runs the acceptance criteria and prints one PASS/FAIL line for each.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "tarc/certificate.hpp"
#include "tarc/construct.hpp"
#include "tarc/eqcode.hpp"
#include "tarc/graph.hpp"
#include "tarc/numth.hpp"

using namespace tarc;
using boost::multiprecision::pow;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool cond, const std::string& what)
  {
    if (!cond) {
      if (!ok) detail << "; ";
      else detail.str("");
      ok = false;
      detail << "FAILED " << what;
    }
  }
};

using Check = std::function<void(Outcome&)>;

bool run(int number, const std::string& title, double budget_s, const Check& check)
{
  Outcome out;
  auto t0 = std::chrono::steady_clock::now();
  try {
    check(out);
  } catch (const std::exception& e) {
    out.ok = false;
    out.detail.str("");
    out.detail << "exception: " << e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > budget_s) {
    if (out.ok) out.detail.str("");
    out.ok = false;
    out.detail << " over time budget " << budget_s << " s";
  }
  std::cout << (out.ok ? "[PASS] " : "[FAIL] ") << number << ". " << title << " (" << std::fixed << std::setprecision(2)
            << secs << " s)";
  if (!out.detail.str().empty()) std::cout << ": " << out.detail.str();
  std::cout << std::endl;
  return out.ok;
}

void equidistant_codes(Outcome& out)
{
  for (std::uint64_t q : {4, 7, 8}) {
    auto t0 = std::chrono::steady_clock::now();
    auto field = gf::make_field(numth::prime_power(q)->first, numth::prime_power(q)->second);
    auto A = eqcode::build_shift_matrix(field).A;
    auto code = eqcode::find_faithful_irreducible_code(q);
    const std::string tag = "q=" + std::to_string(q) + " ";
    out.expect(code.length() == q + 1 && code.dimension() == 2, tag + "[q+1,2] code");
    auto dec = eqcode::decompose_invariant(A);
    bool faithful_irreducible = false;
    for (const auto& c : dec.components)
      if (c.code == code) faithful_irreducible = c.faithful;
    out.expect(faithful_irreducible, tag + "faithful irreducible component");
    std::size_t nonzero = 0;
    bool weights = true;
    for (const auto& w : code.codewords()) {
      if (eqcode::weight(w) == 0) continue;
      ++nonzero;
      weights = weights && eqcode::weight(w) == q;
    }
    out.expect(nonzero == q * q - 1 && weights, tag + "all nonzero weights equal q");
    std::size_t orbit = 0;
    auto v = code.basis().front(), w = v;
    do {
      w = A.apply(w);
      ++orbit;
    } while (w != v);
    out.expect(orbit == q * q - 1, tag + "orbit size q^2-1");
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.expect(secs < 1.0, tag + "under 1 s");
    if (out.ok) out.detail << "q=" << q << ": " << nonzero << " words of weight " << q << ", orbit " << orbit << "; ";
  }
}

void mersenne_decomposition(Outcome& out)
{
  auto A = eqcode::build_shift_matrix(gf::make_field(7, 1)).A;
  auto dec = eqcode::decompose_invariant(A);
  std::size_t two = 0, faithful = 0;
  for (const auto& c : dec.components) {
    if (c.code.dimension() == 2) ++two;
    if (c.faithful) ++faithful;
  }
  out.expect(dec.components.size() == 4 && two == 4 && faithful == 4, "4 faithful 2-dimensional components");
  out.detail << dec.components.size() << " components, " << two << " of dimension 2, " << faithful << " faithful";
}

void shift_identities(Outcome& out)
{
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 16}) {
    auto [p, f] = *numth::prime_power(q);
    auto field = gf::make_field(p, f);
    auto sm = eqcode::build_shift_matrix(field);
    const std::uint64_t n = q + 1;
    auto scalar = linalg::Matrix::identity(field, n).scaled(field->mul(sm.eta, field->mul(sm.lambda, sm.lambda)));
    out.expect(sm.A.pow(BigInt(n)) == scalar, "A^n = eta lambda^2 I for q=" + std::to_string(q));
    out.expect(eqcode::matrix_order(sm.A, n * (q - 1)) == n * (q - 1), "order n(q-1) for q=" + std::to_string(q));
  }
  if (out.ok) out.detail << "9 fields";
}

void pipeline_q4(Outcome& out)
{
  auto pa = construct::nondiagonal_construction(atlas::seed_pgl2(4));
  auto c = cert::certify(cert::input_from(pa));
  out.expect(c.order_G == BigInt(3888000000ULL), "|G| = 3888000000");
  out.expect(c.order_H == 240, "|H| = 240");
  out.expect(c.valency == 16, "valency 16");
  out.expect(c.order_H_cap_Hg == 15, "|H cap H^o| = 15");
  out.expect(c.locally_2transitive, "locally 2-transitive");
  out.expect(c.order_H_g == c.order_G, "<H,o> = G");
  out.expect(c.theorem1_case == "i", "theorem1_case i");
  if (out.ok)
    out.detail << "|G|=" << c.order_G << " |H|=" << c.order_H << " valency " << c.valency << " |H cap H^o|="
               << c.order_H_cap_Hg << " case " << c.theorem1_case;
}

void pipeline_q7(Outcome& out)
{
  auto pa = construct::nondiagonal_construction(atlas::seed_pgl2(7));
  auto c = cert::certify(cert::input_from(pa));
  out.expect(c.order_G == pow(BigInt(168), 8) * 16, "|G| = 168^8 16");
  out.expect(c.valency == 49, "valency 49");
  bool proj = c.socle && c.socle->projection_orders.size() == 8;
  if (proj)
    for (const auto& o : c.socle->projection_orders) proj = proj && o == 21;
  out.expect(proj, "all 8 projections of order 21");
  out.expect(pa.non_diagonal && c.socle && !c.socle->diagonal_type, "non-diagonal");
  out.expect(c.theorem1_case == "iii", "theorem1_case iii");
  out.expect(c.connected && c.locally_2transitive, "connected and locally 2-transitive");
  if (out.ok) out.detail << "|G|=" << c.order_G << " valency 49, projections 21, case iii";
}

void example_valency_64(Outcome& out)
{
  auto t0 = std::chrono::steady_clock::now();
  auto lin = construct::example_2_6(0, false);
  double lin_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  out.expect(lin.counts_match, "decomposition counts (readings: " + lin.alternatives.dump() + ")");
  out.expect(lin_s < 60, "linear algebra under 1 min");
  if (!lin.counts_match) return;

  auto t1 = std::chrono::steady_clock::now();
  auto ex = construct::example_2_6(0, true);
  auto c = cert::certify(cert::input_from(ex));
  double grp_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t1).count();
  out.expect(ex.normalizer_order == 6 && ex.normalizer_nonabelian && ex.normalizer_involutions == 3,
             "N_M(<theta>) = S_3");
  out.expect(ex.generating_double_cosets == 1,
             "unique generating involution up to HgH (found " + std::to_string(ex.generating_double_cosets) +
                 " double cosets; " + std::to_string(ex.generating_classes_up_to_normalizer) +
                 " class up to conjugation by N_M(<theta>) cap N_G(H))");
  out.expect(ex.index_identity, "|G:H| = 2^57 3^42 7^21");
  out.expect(ex.arc_regular_identity && c.socle && c.socle->arc_regular, "|M| = |V| 2^6 and M arc-regular");
  out.expect(c.connected && c.locally_2transitive && c.valency == 64, "certificate");
  out.expect(grp_s < 900, "group part under 15 min");
  if (out.ok || ex.generating_double_cosets != 1)
    out.detail << " [13 components " << lin.component_count << ", 6-dim regular " << lin.regular_six << ", |N|="
               << ex.normalizer_order << ", index identity " << ex.index_identity << ", valency " << c.valency
               << ", linear " << std::setprecision(2) << lin_s << " s, group " << grp_s << " s]";
}

void bipartite_p5(Outcome& out)
{
  for (auto fam : {atlas::Family::symmetric, atlas::Family::pgl2}) {
    const std::string tag = atlas::to_string(fam) + " ";
    auto bc = construct::bipartite_construction(5, fam);
    auto c = cert::certify(cert::input_from(bc));
    out.expect(c.valency == 5, tag + "valency 5");
    out.expect(bc.order_H == 80 && bc.order_K == 16 && bc.order_H / bc.order_K == 5, tag + "|H|=80 |K|=16");
    out.expect(bc.H_two_transitive_on_K, tag + "H 2-transitive on [H:K]");
    out.expect(bc.o_outside_Gstar && c.bipartite && c.bipartite->g_outside_Gstar, tag + "o outside G*");
    out.expect(c.order_H_g == c.order_G && c.order_G == pow(BigInt(60), 4) * 16, tag + "<H,o> = G of order 60^4 16");
    out.expect(c.double_cover_verdict == "is_not", tag + "not a standard double cover");
    out.expect(c.socle && c.socle->diagonal_type && c.socle->order_M_cap_H == 10, tag + "diagonal, |T^4 cap H| = 10");
  }
  if (out.ok) out.detail << "symmetric and pgl2: valency 5, |H|=80, |K|=16, |G|=60^4*16, verdict is_not";
}

// Orbits on 2-arcs by applying every group element to every ordered triple.
std::size_t brute_two_arc_orbits(const graph::SmallGraph& gr, const perm::PermGroup& action)
{
  const auto n = static_cast<graph::Vertex>(gr.vertex_count());
  auto elems = action.elements();
  std::set<std::array<graph::Vertex, 3>> todo;
  for (graph::Vertex u = 0; u < n; ++u)
    for (graph::Vertex v = 0; v < n; ++v)
      for (graph::Vertex w = 0; w < n; ++w)
        if (u != w && gr.adjacent(u, v) && gr.adjacent(v, w)) todo.insert({u, v, w});
  std::size_t orbits = 0;
  while (!todo.empty()) {
    auto t = *todo.begin();
    ++orbits;
    for (const auto& x : elems) todo.erase({x[t[0]], x[t[1]], x[t[2]]});
  }
  return orbits;
}

void toys(Outcome& out)
{
  struct Toy {
    std::string name;
    std::size_t degree;
    std::vector<std::string> G, H;
    std::string g;
    std::size_t vertices, valency, girth;
  };
  const std::vector<Toy> toys{
      {"K4", 4, {"(0 1)", "(0 1 2 3)"}, {"(0 1)", "(0 1 2)"}, "(0 3)", 4, 3, 3},
      {"Petersen", 5, {"(0 1)", "(0 1 2 3 4)"}, {"(0 1)", "(2 3)", "(2 3 4)"}, "(0 2)(1 3)", 10, 3, 5},
  };
  for (const auto& t : toys) {
    auto gens = [&](const std::vector<std::string>& cs) {
      std::vector<perm::Perm> v;
      for (const auto& c : cs) v.push_back(perm::Perm::from_cycles(c, t.degree));
      return v;
    };
    perm::PermGroup G(t.degree, gens(t.G)), H(t.degree, gens(t.H));
    auto g = perm::Perm::from_cycles(t.g, t.degree);
    auto cg = graph::enumerate_small_graph(G, H, g);
    out.expect(cg.graph.vertex_count() == t.vertices && cg.graph.valency() == t.valency && cg.graph.girth() == t.girth,
               t.name + " vertex count, valency, girth");
    auto c = cert::certify(cert::toy_input(G, H, g));
    auto orbits = brute_two_arc_orbits(cg.graph, cg.cosets.action);
    out.expect(c.valency == *cg.graph.valency(), t.name + " certificate valency");
    out.expect(orbits == cg.two_arc_orbits && c.locally_2transitive == (orbits == 1), t.name + " 2-arc orbits");
    if (out.ok)
      out.detail << t.name << ": " << t.vertices << " vertices, valency " << t.valency << ", girth " << t.girth
                 << ", 2-arc orbits " << orbits << "; ";
  }
}

perm::Perm random_perm(std::size_t n, std::mt19937_64& rng)
{
  std::vector<perm::Point> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::shuffle(img.begin(), img.end(), rng);
  return perm::Perm(img);
}

void property_suites(Outcome& out)
{
  std::mt19937_64 rng(2024);
  // Field axioms.
  std::size_t fields = 0;
  for (std::uint64_t q = 2; q <= 1024; ++q) {
    auto pk = numth::prime_power(q);
    if (!pk) continue;
    ++fields;
    auto F = gf::make_field(pk->first, pk->second);
    bool ok = true;
    for (int i = 0; i < 200 && ok; ++i) {
      gf::Elem a = rng() % q, b = rng() % q, c = rng() % q;
      ok = F->add(F->add(a, b), c) == F->add(a, F->add(b, c)) && F->mul(F->mul(a, b), c) == F->mul(a, F->mul(b, c)) &&
           F->add(a, b) == F->add(b, a) && F->mul(a, b) == F->mul(b, a) &&
           F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)) && F->add(a, F->neg(a)) == 0 &&
           (a == 0 || F->mul(a, F->inv(a)) == 1);
    }
    out.expect(ok, "field axioms for q=" + std::to_string(q));
  }
  // BSGS orders.
  std::size_t groups = 0;
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 3 + i % 10;
    std::vector<perm::Perm> gens;
    for (int k = 0; k < 1 + i % 3; ++k) gens.push_back(random_perm(n, rng));
    perm::StabChain chain(n, gens);
    BigInt product = 1;
    for (std::size_t l = 0; l < chain.length(); ++l) product *= chain.level(l).orbit.size();
    perm::StabChain::Options opts;
    opts.seed = 7 + i;
    for (std::size_t p = n; p-- > 0;) opts.base_prefix.push_back(static_cast<perm::Point>(p));
    perm::StabChain other(n, gens, opts);
    out.expect(product == chain.order() && other.order() == chain.order(), "BSGS group " + std::to_string(i));
    ++groups;
  }
  // Decomposition direct sums.
  std::size_t matrices = 0;
  for (unsigned p : {2u, 3u, 7u}) {
    auto F = gf::make_field(p, 1);
    for (int t = 0; t < 10; ++t) {
      const std::size_t n = 2 + rng() % 19;
      linalg::Matrix block(F, n, n);
      std::size_t pos = 0;
      while (pos < n) {
        std::size_t d = std::min<std::size_t>(1 + rng() % 3, n - pos);
        gf::Poly g(F);
        do {
          linalg::Vec c(d + 1);
          for (auto& x : c) x = static_cast<gf::Elem>(rng() % p);
          c[d] = 1;
          g = gf::Poly(F, c);
        } while (g.coeff(0) == 0 || !gf::is_irreducible(g));
        for (std::size_t i = 0; i + 1 < d; ++i) block.set(pos + i, pos + i + 1, 1);
        for (std::size_t j = 0; j < d; ++j) block.set(pos + d - 1, pos + j, F->neg(g.coeff(j)));
        pos += d;
      }
      linalg::Matrix change(F, n, n);
      do {
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) change.set(i, j, static_cast<gf::Elem>(rng() % p));
      } while (change.rank() != n);
      auto m = change.inverse() * block * change;
      auto dec = eqcode::decompose_invariant(m);
      std::size_t dim = 0;
      bool invariant = true;
      for (const auto& c : dec.components) {
        dim += c.code.dimension();
        invariant = invariant && c.code.is_invariant(m);
      }
      out.expect(dim == n && dec.change_of_basis.rank() == n && invariant,
                 "direct sum over GF(" + std::to_string(p) + ") in dimension " + std::to_string(n));
      ++matrices;
    }
  }
  if (out.ok)
    out.detail << fields << " fields, " << groups << " random groups, " << matrices << " random semisimple matrices";
}

} // namespace

int main()
{
  int passed = 0;
  passed += run(1, "equidistant codes for q = 4, 7, 8", 3.0, equidistant_codes);
  passed += run(2, "Mersenne decomposition for q = 7", 1.0, mersenne_decomposition);
  passed += run(3, "shift matrix identities", 1.0, shift_identities);
  passed += run(4, "product action pipeline q = 4", 30.0, pipeline_q4);
  passed += run(5, "product action pipeline q = 7", 300.0, pipeline_q7);
  passed += run(6, "valency 64 example over PSL(2,8).3", 960.0, example_valency_64);
  passed += run(7, "bipartite pipeline p = 5", 30.0, bipartite_p5);
  passed += run(8, "toy coset graphs against enumeration", 5.0, toys);
  passed += run(9, "property suites", 60.0, property_suites);
  std::cout << passed << "/9 criteria passed" << std::endl;
  return passed == 9 ? 0 : 1;
}
