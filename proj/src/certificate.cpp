#include "tarc/certificate.hpp"

#include <stdexcept>

#include "tarc/numth.hpp"
#include "tarc/wreath.hpp"

namespace tarc::cert {

namespace {

using construct::in_power;

nlohmann::json perms_to_json(const std::vector<Perm>& ps)
{
  auto j = nlohmann::json::array();
  for (const auto& p : ps) j.push_back(p.to_json());
  return j;
}

std::vector<Perm> perms_from_json(const nlohmann::json& j, std::size_t degree)
{
  if (!j.is_array()) throw std::invalid_argument("expected a list of permutations");
  std::vector<Perm> out;
  for (const auto& e : j) {
    auto p = Perm::from_json(e);
    if (p.degree() != degree) throw std::invalid_argument("permutation of the wrong degree");
    out.push_back(std::move(p));
  }
  return out;
}

std::string dec(const BigInt& x) { return x.str(); }

std::vector<Perm> with(std::vector<Perm> gens, const Perm& x)
{
  gens.push_back(x);
  return gens;
}

// First differing JSON pointer between two documents.
std::string first_difference(const nlohmann::json& a, const nlohmann::json& b)
{
  auto patch = nlohmann::json::diff(a, b);
  if (patch.empty()) return {};
  return patch.front().value("path", std::string("/"));
}

} // namespace

nlohmann::json CosetGraphInput::to_json() const
{
  nlohmann::json j;
  j["kind"] = kind;
  j["family"] = family;
  j["param"] = param;
  j["n"] = n;
  j["block_degree"] = block_degree;
  j["degree"] = degree;
  j["G"] = perms_to_json(G);
  j["H"] = perms_to_json(H);
  j["g"] = g.to_json();
  j["T"] = perms_to_json(T);
  if (Gstar) j["Gstar"] = perms_to_json(*Gstar);
  if (bold_b) j["b"] = bold_b->to_json();
  return j;
}

CosetGraphInput CosetGraphInput::from_json(const nlohmann::json& j)
{
  try {
    CosetGraphInput in;
    in.kind = j.at("kind").get<std::string>();
    in.family = j.at("family").get<std::string>();
    in.param = j.at("param").get<std::uint64_t>();
    in.n = j.at("n").get<std::size_t>();
    in.block_degree = j.at("block_degree").get<std::size_t>();
    in.degree = j.at("degree").get<std::size_t>();
    if (in.n * in.block_degree != in.degree && in.n != 0) throw std::invalid_argument("degree is not n * block_degree");
    in.G = perms_from_json(j.at("G"), in.degree);
    in.H = perms_from_json(j.at("H"), in.degree);
    in.g = Perm::from_json(j.at("g"));
    if (in.g.degree() != in.degree) throw std::invalid_argument("g has the wrong degree");
    in.T = perms_from_json(j.at("T"), in.block_degree);
    if (j.contains("Gstar")) in.Gstar = perms_from_json(j["Gstar"], in.degree);
    if (j.contains("b")) {
      in.bold_b = Perm::from_json(j["b"]);
      if (in.bold_b->degree() != in.degree) throw std::invalid_argument("b has the wrong degree");
    }
    return in;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed certificate input: ") + e.what());
  }
}

CosetGraphInput input_from(const construct::PAConstruction& pa)
{
  if (!pa.o) throw std::invalid_argument("construction has no involution o");
  CosetGraphInput in;
  in.kind = "nondiagonal";
  in.family = atlas::to_string(pa.seed.family);
  in.param = pa.seed.q;
  in.n = pa.n;
  in.block_degree = pa.seed.degree;
  in.degree = pa.n * pa.seed.degree;
  in.G = pa.G.generators();
  in.H = pa.H.generators();
  in.g = *pa.o;
  in.T = pa.seed.T.generators();
  return in;
}

CosetGraphInput input_from(const construct::BipartiteConstruction& bc)
{
  CosetGraphInput in;
  in.kind = "bipartite";
  in.family = atlas::to_string(bc.seed.family);
  in.param = bc.p;
  in.n = bc.n;
  in.block_degree = bc.seed.degree;
  in.degree = bc.n * bc.seed.degree;
  in.G = bc.G.generators();
  in.H = bc.H.generators();
  in.g = bc.o.flatten();
  in.T = bc.seed.T.generators();
  in.Gstar = bc.Gstar.generators();
  in.bold_b = bc.b.flatten();
  return in;
}

CosetGraphInput input_from(const construct::Example66& ex)
{
  if (!ex.g) throw std::invalid_argument("example has no generating involution");
  CosetGraphInput in;
  in.kind = "example";
  in.family = atlas::to_string(ex.pa.seed.family);
  in.param = ex.pa.seed.q;
  in.n = ex.pa.n;
  in.block_degree = ex.pa.seed.degree;
  in.degree = ex.pa.n * ex.pa.seed.degree;
  in.G = ex.pa.G.generators();
  in.H = ex.pa.H.generators();
  in.g = *ex.g;
  in.T = ex.pa.seed.T.generators();
  return in;
}

CosetGraphInput toy_input(const PermGroup& G, const PermGroup& H, const Perm& g)
{
  CosetGraphInput in;
  in.kind = "toy";
  in.family = "toy";
  in.degree = G.degree();
  in.G = G.generators();
  in.H = H.generators();
  in.g = g;
  return in;
}

std::string not_double_cover_test(const Perm& bold_b, const PermGroup& T, std::size_t n)
{
  return in_power(bold_b, T, n) ? "untested" : "is_not";
}

std::string not_double_cover_test(const construct::BipartiteConstruction& bc)
{
  return not_double_cover_test(bc.b.flatten(), bc.seed.T, bc.n);
}

CosetGraphCertificate certify(const CosetGraphInput& in)
{
  CosetGraphCertificate c;
  c.input = in;
  PermGroup G(in.degree, in.G), H(in.degree, in.H);
  c.order_G = G.order();
  c.order_H = H.order();
  c.g_in_G = G.contains(in.g);
  c.g_not_in_H = !H.contains(in.g);
  c.g_squared_in_H = H.contains(in.g * in.g);

  // H cap H^g: h in H^g iff g h g^-1 in H.
  const Perm ginv = in.g.inverse();
  std::vector<Perm> inter;
  H.for_each_element([&](const Perm& h) {
    if (H.contains(in.g * h * ginv)) inter.push_back(h);
  });
  c.order_H_cap_Hg = inter.size();
  c.valency = c.order_H / c.order_H_cap_Hg;
  c.valency_arithmetic = c.valency * c.order_H_cap_Hg == c.order_H;
  auto stab = perm::subgroup_from_elements(in.degree, inter);
  c.locally_2transitive = perm::action_report(perm::coset_action(H, stab).action).two_transitive;
  c.order_H_g = PermGroup(in.degree, with(in.H, in.g)).order();
  c.connected = c.g_in_G && c.order_H_g == c.order_G;

  if (in.n > 0) {
    PermGroup T(in.block_degree, in.T);
    SocleData s;
    s.order_M = boost::multiprecision::pow(T.order(), static_cast<unsigned>(in.n));
    std::vector<Perm> mh;
    H.for_each_element([&](const Perm& h) {
      if (in_power(h, T, in.n)) mh.push_back(h);
    });
    s.order_M_cap_H = mh.size();
    const BigInt socle_orbit = s.order_M * c.order_H / s.order_M_cap_H;
    s.socle_orbits = c.order_G / socle_orbit;
    s.socle_transitive = socle_orbit == c.order_G;
    s.diagonal_type = true;
    for (std::size_t i = 0; i < in.n; ++i) {
      std::vector<Perm> comps;
      for (const auto& x : mh) comps.push_back(wreath::WreathElement::unflatten(x, in.n, in.block_degree)[i]);
      auto order = perm::subgroup_from_elements(in.block_degree, comps).order();
      s.projection_orders.push_back(order);
      s.diagonal_type = s.diagonal_type && order == s.order_M_cap_H;
    }
    // M regular on arcs: transitive on vertices with M_alpha regular on the
    // neighbourhood of alpha.
    std::size_t fixed_by_both = 0;
    for (const auto& x : inter)
      if (in_power(x, T, in.n)) ++fixed_by_both;
    s.arc_regular = s.socle_transitive && s.order_M_cap_H == c.valency && fixed_by_both == 1;
    c.socle = s;

    if (s.diagonal_type) {
      c.theorem1_case = "diagonal";
    } else if (auto pk = numth::prime_power(static_cast<std::uint64_t>(c.valency))) {
      auto cls = numth::classify_theorem1_case(pk->first, pk->second, in.n);
      c.theorem1_case = numth::to_string(cls.label);
      c.case_witness_prime = cls.witness_prime;
      c.case_ii_witnessed = cls.case_ii_possible && s.arc_regular;
    } else {
      c.theorem1_case = "none";
    }

    if (in.bold_b) c.double_cover_verdict = not_double_cover_test(*in.bold_b, T, in.n);
  }

  if (in.Gstar) {
    PermGroup Gs(in.degree, *in.Gstar);
    BipartiteData b;
    b.index = c.order_G / Gs.order();
    b.g_outside_Gstar = !Gs.contains(in.g);
    b.H_in_Gstar = H.is_subgroup_of(Gs);
    c.bipartite = b;
  }
  return c;
}

std::optional<std::string> CosetGraphCertificate::first_failure() const
{
  if (!g_in_G) return "g in G";
  if (!g_not_in_H) return "g not in H";
  if (!g_squared_in_H) return "g^2 in H";
  if (!valency_arithmetic) return "valency arithmetic";
  if (!connected) return "connected";
  if (!locally_2transitive) return "locally 2-transitive";
  if (socle && !bipartite && !socle->socle_transitive) return "socle transitive";
  if (bipartite) {
    if (socle && socle->socle_orbits != 2) return "socle transitive on each part";
    if (bipartite->index != 2) return "|G:G*| = 2";
    if (!bipartite->g_outside_Gstar) return "g outside G*";
    if (!bipartite->H_in_Gstar) return "H inside G*";
  }
  return std::nullopt;
}

nlohmann::json CosetGraphCertificate::to_json() const
{
  nlohmann::json j;
  j["schema"] = schema;
  j["input"] = input.to_json();
  j["orders"] = {{"G", dec(order_G)}, {"H", dec(order_H)}, {"H_cap_Hg", dec(order_H_cap_Hg)}, {"H_g", dec(order_H_g)}};
  j["valency"] = dec(valency);
  j["g_conditions"] = {{"g_in_G", g_in_G}, {"g_squared_in_H", g_squared_in_H}, {"g_not_in_H", g_not_in_H}};
  j["valency_arithmetic"] = valency_arithmetic;
  j["connected"] = connected;
  j["locally_2transitive"] = locally_2transitive;
  if (socle) {
    auto po = nlohmann::json::array();
    for (const auto& x : socle->projection_orders) po.push_back(dec(x));
    j["socle"] = {{"order_M", dec(socle->order_M)},
                  {"order_M_cap_H", dec(socle->order_M_cap_H)},
                  {"projection_orders", po},
                  {"socle_transitive", socle->socle_transitive},
                  {"socle_orbits", dec(socle->socle_orbits)},
                  {"diagonal_type", socle->diagonal_type},
                  {"arc_regular", socle->arc_regular}};
  }
  if (bipartite)
    j["bipartite"] = {{"index", dec(bipartite->index)},
                      {"g_outside_Gstar", bipartite->g_outside_Gstar},
                      {"H_in_Gstar", bipartite->H_in_Gstar}};
  j["double_cover_verdict"] = double_cover_verdict;
  j["theorem1_case"] = theorem1_case;
  if (case_witness_prime) j["case_witness_prime"] = *case_witness_prime;
  j["case_ii_witnessed"] = case_ii_witnessed;
  auto failure = first_failure();
  j["all_checks_pass"] = !failure.has_value();
  if (failure) j["first_failure"] = *failure;
  return j;
}

VerifyResult verify(const nlohmann::json& certificate)
{
  if (!certificate.is_object() || certificate.value("schema", "") != std::string(schema))
    throw std::invalid_argument("not a certificate of schema " + std::string(schema));
  VerifyResult r;
  r.recomputed = certify(CosetGraphInput::from_json(certificate.at("input"))).to_json();
  r.first_difference = first_difference(certificate, r.recomputed);
  r.identical = r.recomputed.dump() == certificate.dump();
  if (!r.identical && r.first_difference.empty()) r.first_difference = "/";
  return r;
}

} // namespace tarc::cert
