#include "tarc/construct.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "tarc/numth.hpp"

namespace tarc::construct {

namespace {

void require(bool ok, const std::string& what)
{
  if (!ok) throw std::logic_error("construction check failed: " + what);
}

std::string dec(const BigInt& x) { return x.str(); }

// Elements of T^n cap H, by running through H.
std::vector<Perm> power_elements_of(const PermGroup& H, const PermGroup& T, std::size_t n)
{
  std::vector<Perm> out;
  H.for_each_element([&](const Perm& h) {
    if (in_power(h, T, n)) out.push_back(h);
  });
  return out;
}

PermGroup projection(const std::vector<Perm>& elems, std::size_t i, std::size_t n, std::size_t deg)
{
  std::vector<Perm> comps;
  comps.reserve(elems.size());
  for (const auto& x : elems) comps.push_back(WreathElement::unflatten(x, n, deg)[i]);
  return perm::subgroup_from_elements(deg, comps);
}

// Scalar restriction GF(q) -> GF(p) in the basis 1, x, ..., x^(f-1).
Matrix restrict_scalars(const Matrix& m, const gf::FieldPtr& prime)
{
  const auto& K = *m.field();
  const unsigned f = K.f();
  Matrix out(prime, m.rows() * f, m.cols() * f);
  gf::Elem basis = 1;
  for (unsigned l = 0; l < f; ++l, basis *= K.p())
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) {
        auto digits = K.digits(K.mul(basis, m.at(i, j)));
        for (unsigned c = 0; c < f; ++c) out.set(i * f + l, j * f + c, c < digits.size() ? digits[c] : 0);
      }
  return out;
}

// Similarity of two semisimple matrices: same minimal polynomial and the same
// kernel dimension for every irreducible factor of it.
bool similar_semisimple(const Matrix& a, const Matrix& b)
{
  auto ma = linalg::minimal_polynomial(a);
  if (!(ma == linalg::minimal_polynomial(b))) return false;
  if (!gf::is_squarefree(ma)) throw std::domain_error("similarity test needs semisimple matrices");
  for (const auto& g : gf::factor_squarefree(ma))
    if (linalg::evaluate(g, a).rank() != linalg::evaluate(g, b).rank()) return false;
  return true;
}

// Kernel of the projection of a subspace onto coordinate block i.
std::vector<linalg::Vec> block_kernel(const gf::FieldPtr& field, const std::vector<linalg::Vec>& basis,
                                      std::size_t i, std::size_t k)
{
  Matrix proj(field, basis.size(), k);
  for (std::size_t r = 0; r < basis.size(); ++r)
    for (std::size_t c = 0; c < k; ++c) proj.set(r, c, basis[r][i * k + c]);
  auto combos = proj.left_kernel();
  std::vector<linalg::Vec> vecs;
  for (std::size_t r = 0; r < combos.rows(); ++r) {
    linalg::Vec v(basis.front().size(), 0);
    for (std::size_t s = 0; s < basis.size(); ++s)
      for (std::size_t c = 0; c < v.size(); ++c) v[c] = field->add(v[c], field->mul(combos.at(r, s), basis[s][c]));
    vecs.push_back(std::move(v));
  }
  return linalg::rref(field, std::move(vecs));
}

std::uint64_t order_u64(const Perm& x) { return static_cast<std::uint64_t>(x.order()); }

nlohmann::json perm_list(const std::vector<Perm>& ps)
{
  auto j = nlohmann::json::array();
  for (const auto& p : ps) j.push_back(p.to_json());
  return j;
}

} // namespace

ElementaryAbelian::ElementaryAbelian(std::vector<Perm> basis, std::uint32_t p) : basis_(std::move(basis)), p_(p)
{
  if (basis_.empty()) throw std::invalid_argument("empty basis");
  const std::size_t deg = basis_.front().degree();
  for (const auto& x : basis_) {
    if (x.degree() != deg || x.is_identity() || x.order() != p) throw std::invalid_argument("basis element of wrong order");
    for (const auto& y : basis_)
      if (x * y != y * x) throw std::invalid_argument("basis does not commute");
  }
  std::size_t total = 1;
  for (std::size_t i = 0; i < basis_.size(); ++i) total *= p_;
  linalg::Vec v(basis_.size(), 0);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t t = idx;
    for (auto& c : v) { c = static_cast<gf::Elem>(t % p_); t /= p_; }
    if (!coords_.emplace(element(v), v).second) throw std::invalid_argument("basis is dependent");
  }
}

const linalg::Vec& ElementaryAbelian::coordinates(const Perm& x) const
{
  auto it = coords_.find(x);
  if (it == coords_.end()) throw std::out_of_range("element outside the elementary abelian group");
  return it->second;
}

Perm ElementaryAbelian::element(const linalg::Vec& v) const
{
  Perm x(basis_.front().degree());
  for (std::size_t i = 0; i < basis_.size(); ++i) x = x * basis_[i].pow(v[i]);
  return x;
}

bool in_power(const Perm& x, const PermGroup& T, std::size_t n)
{
  const std::size_t deg = T.degree();
  if (x.degree() != n * deg) throw std::invalid_argument("degree mismatch in power membership");
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<perm::Point> comp(deg);
    for (std::size_t w = 0; w < deg; ++w) {
      auto img = x[static_cast<perm::Point>(i * deg + w)];
      if (img / deg != i) return false;
      comp[w] = static_cast<perm::Point>(img % deg);
    }
    if (!T.contains(Perm(std::move(comp)))) return false;
  }
  return true;
}

std::vector<Perm> power_generators(const PermGroup& T, std::size_t n)
{
  std::vector<Perm> gens;
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& t : T.generators()) gens.push_back(WreathElement::at(t, i, n).flatten());
  return gens;
}

WreathElement build_theta(const AlmostSimpleSeed& seed)
{
  const std::size_t n = seed.q + 1;
  const Perm bc = seed.b * seed.c;
  std::vector<Perm> d0(n, bc);
  d0[1] = seed.b;
  auto theta = WreathElement(std::move(d0), 0) * WreathElement::tau(n, seed.degree);
  require(theta.flatten().order() == seed.q * seed.q - 1, "theta has order q^2 - 1");
  require(theta.pow(static_cast<long long>(n)) == WreathElement::constant(seed.b * seed.b * seed.c, n),
          "theta^n = (b^2 c, ..., b^2 c)");
  return theta;
}

std::string to_string(ThetaReading r)
{
  switch (r) {
  case ThetaReading::last_b: return "(b,1,b,...,b)";
  case ThetaReading::last_b_squared: return "(b,1,b,...,b,b^2)";
  case ThetaReading::last_one: return "(b,1,b,...,b,1)";
  }
  return "?";
}

WreathElement build_theta_pattern(const Perm& b, std::size_t n, ThetaReading reading)
{
  if (n < 3) throw std::invalid_argument("pattern needs at least 3 coordinates");
  std::vector<Perm> d(n, b);
  d[1] = Perm(b.degree());
  if (reading == ThetaReading::last_b_squared) d[n - 1] = b * b;
  if (reading == ThetaReading::last_one) d[n - 1] = Perm(b.degree());
  return WreathElement(std::move(d), 0) * WreathElement::tau(n, b.degree());
}

Matrix conjugation_matrix(const WreathElement& theta, const ElementaryAbelian& F)
{
  const std::size_t n = theta.n(), k = F.rank();
  const auto field = gf::make_field(F.basis().front().order().convert_to<std::uint64_t>(), 1);
  const auto inv = theta.inverse();
  std::vector<linalg::Vec> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      auto image = inv * WreathElement::at(F.basis()[j], i, n) * theta;
      if (image.shift() != 0) throw std::invalid_argument("F^n is not invariant");
      linalg::Vec row;
      row.reserve(n * k);
      for (std::size_t c = 0; c < n; ++c) {
        if (!F.contains(image[c])) throw std::invalid_argument("F^n is not invariant");
        const auto& v = F.coordinates(image[c]);
        row.insert(row.end(), v.begin(), v.end());
      }
      rows.push_back(std::move(row));
    }
  return Matrix(field, std::move(rows));
}

PAConstruction build_E_and_H(const AlmostSimpleSeed& seed, const WreathElement& theta, std::size_t component)
{
  PAConstruction pa;
  pa.seed = seed;
  pa.n = theta.n();
  pa.theta = theta;
  const std::size_t deg = seed.degree, n = pa.n;
  const auto params = numth::prime_power(seed.q);
  require(params.has_value(), "q is a prime power");
  const auto [p, f] = *params;
  const std::uint64_t q2m1 = seed.q * seed.q - 1;
  const Perm th = theta.flatten();
  require(th.order() == q2m1, "theta has order q^2 - 1");

  ElementaryAbelian F(seed.F, static_cast<std::uint32_t>(p));
  require(F.rank() == f, "F has rank f");
  pa.conj = conjugation_matrix(theta, F);
  pa.decomposition = eqcode::decompose_invariant(pa.conj);
  for (std::size_t i = 0; i < pa.decomposition.components.size(); ++i) {
    const auto& comp = pa.decomposition.components[i];
    if (comp.code.dimension() != 2 * f) continue;
    if (pa.decomposition.order / comp.kernel_order != q2m1) continue;
    if (eqcode::is_regular_on_nonzero(comp.code, pa.conj)) pa.candidates.push_back(i);
  }
  if (pa.candidates.empty()) throw std::logic_error("no regular invariant component of dimension 2f");
  if (component >= pa.candidates.size())
    throw std::out_of_range("component index " + std::to_string(component) + " but only " +
                            std::to_string(pa.candidates.size()) + " components qualify");
  pa.chosen = component;
  pa.code_witness = pa.decomposition.components[pa.candidates[component]].code;

  if (n == seed.q + 1) {
    auto shift = eqcode::build_shift_matrix(gf::make_field(p, f));
    pa.similar_to_shift = similar_semisimple(pa.conj, restrict_scalars(shift.A, pa.conj.field()));
  }

  // Back from vectors to group elements.
  const std::size_t k = f;
  for (const auto& v : pa.code_witness.basis()) {
    std::vector<Perm> comps;
    for (std::size_t i = 0; i < n; ++i) comps.push_back(F.element(linalg::Vec(v.begin() + i * k, v.begin() + (i + 1) * k)));
    pa.E.push_back(WreathElement(std::move(comps), 0).flatten());
  }
  PermGroup Egrp(n * deg, pa.E);
  pa.order_E = Egrp.order();
  require(pa.order_E == BigInt(seed.q) * seed.q, "|E| = q^2");

  // theta-conjugation is transitive on E \ {1}.
  {
    std::set<Perm> orbit;
    Perm x = pa.E.front();
    for (std::uint64_t i = 0; i < q2m1; ++i) {
      orbit.insert(x);
      x = x.conjugate_by(th);
    }
    bool inside = std::all_of(orbit.begin(), orbit.end(), [&](const Perm& y) { return Egrp.contains(y); });
    pa.E_regular = inside && orbit.size() == q2m1 && x == pa.E.front();
  }
  require(pa.E_regular, "theta regular on E minus 1");

  // Projections onto F and distinct coordinate kernels.
  pa.E_projections_onto_F = true;
  for (std::size_t i = 0; i < n && pa.E_projections_onto_F; ++i) {
    std::vector<linalg::Vec> proj;
    for (const auto& v : pa.code_witness.basis()) proj.emplace_back(v.begin() + i * k, v.begin() + (i + 1) * k);
    pa.E_projections_onto_F = linalg::rref(pa.conj.field(), proj).size() == k;
  }
  // Projection and kernel conditions are part of the q + 1 coordinate
  // construction; other patterns only record them.
  const bool standard = n == seed.q + 1;
  if (standard) require(pa.E_projections_onto_F, "pi_i(E) = F");
  {
    std::set<std::vector<linalg::Vec>> kernels;
    for (std::size_t i = 0; i < n; ++i) kernels.insert(block_kernel(pa.conj.field(), pa.code_witness.basis(), i, k));
    pa.E_kernels_distinct = kernels.size() == n;
  }
  if (standard) require(pa.E_kernels_distinct, "coordinate kernels on E pairwise distinct");

  auto hgens = pa.E;
  hgens.push_back(th);
  pa.H = PermGroup(n * deg, hgens);
  pa.order_H = pa.H.order();
  require(pa.order_H == BigInt(seed.q) * seed.q * q2m1, "|H| = q^2 (q^2 - 1)");
  auto cosets = perm::coset_action(pa.H, PermGroup(n * deg, {th}));
  pa.H_two_transitive = perm::action_report(cosets.action).two_transitive;
  require(pa.H_two_transitive, "H 2-transitive on the cosets of <theta>");

  if (seed.o) pa.o = WreathElement::constant(*seed.o, n).flatten();
  return pa;
}

void assemble_G(PAConstruction& pa)
{
  const auto& seed = pa.seed;
  const std::size_t n = pa.n, deg = seed.degree;
  const Perm th = pa.theta.flatten();

  // theta moves the coordinates transitively, so T in one coordinate suffices.
  std::vector<Perm> ggens;
  for (const auto& t : seed.T.generators()) ggens.push_back(WreathElement::at(t, 0, n).flatten());
  ggens.push_back(th);
  pa.G = PermGroup(n * deg, ggens);
  pa.order_G = pa.G.order();

  const BigInt orderT = seed.T.order();
  pa.order_M = boost::multiprecision::pow(orderT, static_cast<unsigned>(n));
  const std::uint64_t ord = order_u64(th);
  pa.theta_power_in_M = 0;
  for (std::uint64_t m = 1; m <= ord && pa.theta_power_in_M == 0; ++m)
    if (in_power(th.pow(static_cast<long long>(m)), seed.T, n)) pa.theta_power_in_M = m;
  pa.G_order_formula = pa.order_G == pa.order_M * pa.theta_power_in_M;
  require(pa.G_order_formula, "|G| = |T|^n |<theta> : <theta> cap T^n|");
  {
    const std::uint64_t step = n * seed.index_XT;
    bool ok = true;
    for (std::uint64_t m = 1; m <= ord && ok; ++m)
      ok = in_power(th.pow(static_cast<long long>(m)), seed.T, n) == (m % step == 0);
    pa.theta_power_criterion = ok;
  }

  auto mh = power_elements_of(pa.H, seed.T, n);
  pa.M_cap_H = perm::subgroup_from_elements(n * deg, mh);
  pa.order_M_cap_H = mh.size();
  pa.socle_transitive = pa.order_M * pa.order_H / pa.order_M_cap_H == pa.order_G;
  require(pa.socle_transitive, "T^n transitive on [G:H]");

  auto RT = perm::filtered_intersection_with_product(seed.R(), seed.T);
  pa.order_R_cap_T = RT.order();
  pa.subdirect = true;
  pa.projection_orders.clear();
  for (std::size_t i = 0; i < n; ++i) {
    auto proj = projection(mh, i, n, deg);
    pa.projection_orders.push_back(proj.order());
    pa.subdirect = pa.subdirect && proj.order() == pa.order_R_cap_T && proj.is_subgroup_of(RT);
  }
  if (n == seed.q + 1) require(pa.subdirect, "pi_i(T^n cap H) = R cap T for every i");

  pa.non_diagonal = std::any_of(mh.begin(), mh.end(), [&](const Perm& x) {
    return !x.is_identity() && WreathElement::unflatten(x, n, deg)[0].is_identity();
  });
  require(pa.non_diagonal, "ker(pi_1) meets T^n cap H");
}

PAConstruction nondiagonal_construction(const AlmostSimpleSeed& seed, std::size_t component)
{
  if (!seed.o) throw std::invalid_argument("seed carries no involution o");
  auto pa = build_E_and_H(seed, build_theta(seed), component);
  assemble_G(pa);
  return pa;
}

nlohmann::json PAConstruction::summary() const
{
  nlohmann::json j;
  j["family"] = atlas::to_string(seed.family);
  j["q"] = seed.q;
  j["n"] = n;
  j["block_degree"] = seed.degree;
  j["theta"] = theta.flatten().to_json();
  j["theta_order"] = dec(theta.flatten().order());
  j["components"] = decomposition.components.size();
  j["candidates"] = candidates;
  j["chosen"] = chosen;
  j["code"] = code_witness.to_json();
  j["E"] = perm_list(E);
  j["H"] = perm_list(H.generators());
  j["G"] = perm_list(G.generators());
  j["order_E"] = dec(order_E);
  j["order_H"] = dec(order_H);
  j["order_G"] = dec(order_G);
  j["order_M"] = dec(order_M);
  j["order_M_cap_H"] = dec(order_M_cap_H);
  j["order_R_cap_T"] = dec(order_R_cap_T);
  auto po = nlohmann::json::array();
  for (const auto& x : projection_orders) po.push_back(dec(x));
  j["projection_orders"] = po;
  j["theta_power_in_M"] = theta_power_in_M;
  j["checks"] = {{"E_regular", E_regular},
                 {"E_projections_onto_F", E_projections_onto_F},
                 {"E_kernels_distinct", E_kernels_distinct},
                 {"H_two_transitive", H_two_transitive},
                 {"G_order_formula", G_order_formula},
                 {"theta_power_criterion", theta_power_criterion},
                 {"socle_transitive", socle_transitive},
                 {"subdirect", subdirect},
                 {"non_diagonal", non_diagonal}};
  if (similar_to_shift) j["checks"]["similar_to_shift"] = *similar_to_shift;
  return j;
}

BipartiteConstruction bipartite_construction(std::uint64_t p, atlas::Family family)
{
  if (p < 5 || !numth::is_prime(p)) throw std::invalid_argument("bipartite construction needs a prime p >= 5");
  BipartiteConstruction bc;
  switch (family) {
  case atlas::Family::pgl2: bc.seed = atlas::seed_pgl2(p, atlas::Role::bipartite); break;
  case atlas::Family::symmetric: bc.seed = atlas::seed_symmetric(p, atlas::Role::bipartite); break;
  default: throw std::invalid_argument("bipartite construction supports pgl2 and symmetric");
  }
  const auto& s = bc.seed;
  bc.p = p;
  bc.n = p - 1;
  const std::size_t n = bc.n, deg = s.degree, N = n * deg;
  bc.a = WreathElement::constant(*s.a, n);
  bc.b = WreathElement::constant(s.b, n);
  bc.tau = WreathElement::tau(n, deg);
  std::vector<Perm> oc;
  for (std::size_t i = 0; i < n; ++i) oc.push_back(s.b.pow(static_cast<long long>(i)) * s.c);
  bc.o = WreathElement(oc, 0);

  const Perm a = bc.a.flatten(), b = bc.b.flatten(), tau = bc.tau.flatten(), o = bc.o.flatten();
  const Perm binv = b.inverse();
  bc.relations = tau.inverse() * o * tau == binv * o && b.conjugate_by(o) == binv &&
                 tau.conjugate_by(o) == binv * tau;
  require(bc.relations, "o^tau = b^-1 o, b^o = b^-1, tau^o = b^-1 tau");

  std::vector<Perm> gs;
  for (const auto& t : s.T.generators()) gs.push_back(WreathElement::at(t, 0, n).flatten());
  gs.push_back(b);
  gs.push_back(tau);
  bc.Gstar = PermGroup(N, gs);
  gs.push_back(o);
  bc.G = PermGroup(N, gs);
  bc.H = PermGroup(N, {a, b, tau});
  bc.K = PermGroup(N, {b, tau});
  bc.order_Gstar = bc.Gstar.order();
  bc.order_G = bc.G.order();
  bc.order_H = bc.H.order();
  bc.order_K = bc.K.order();
  bc.order_M = boost::multiprecision::pow(s.T.order(), static_cast<unsigned>(n));
  require(bc.order_H == BigInt(p * (p - 1) * (p - 1)), "|H| = p (p-1)^2");
  require(bc.order_H / bc.order_K == p, "|H:K| = p");
  bc.o_outside_Gstar = !bc.Gstar.contains(o);
  require(bc.o_outside_Gstar, "o not in G*");
  bc.H_two_transitive_on_K = perm::action_report(perm::coset_action(bc.H, bc.K).action).two_transitive;
  require(bc.H_two_transitive_on_K, "H 2-transitive on [H:K]");

  auto mh = power_elements_of(bc.H, s.T, n);
  bc.M_cap_H = perm::subgroup_from_elements(N, mh);
  bc.order_M_cap_H = mh.size();
  PermGroup ab2(N, {a, b * b});
  bc.M_cap_H_is_a_b2 = ab2.order() == bc.order_M_cap_H && ab2.is_subgroup_of(bc.M_cap_H);
  require(bc.M_cap_H_is_a_b2, "T^n cap H = <a, b^2>");
  bc.diagonal = true;
  for (std::size_t i = 0; i < n; ++i) bc.diagonal = bc.diagonal && projection(mh, i, n, deg).order() == bc.order_M_cap_H;
  require(bc.diagonal, "projections of T^n cap H injective");
  return bc;
}

nlohmann::json BipartiteConstruction::summary() const
{
  nlohmann::json j;
  j["family"] = atlas::to_string(seed.family);
  j["p"] = p;
  j["n"] = n;
  j["block_degree"] = seed.degree;
  j["a"] = a.flatten().to_json();
  j["b"] = b.flatten().to_json();
  j["tau"] = tau.flatten().to_json();
  j["o"] = o.flatten().to_json();
  j["order_Gstar"] = dec(order_Gstar);
  j["order_G"] = dec(order_G);
  j["order_H"] = dec(order_H);
  j["order_K"] = dec(order_K);
  j["order_M"] = dec(order_M);
  j["order_M_cap_H"] = dec(order_M_cap_H);
  j["checks"] = {{"relations", relations},
                 {"o_outside_Gstar", o_outside_Gstar},
                 {"H_two_transitive_on_K", H_two_transitive_on_K},
                 {"M_cap_H_is_a_b2", M_cap_H_is_a_b2},
                 {"diagonal", diagonal}};
  return j;
}

TwistedNormalizer twisted_centralizer(const PermGroup& T, const WreathElement& theta)
{
  if (theta.shift() != 1) throw std::invalid_argument("theta must shift coordinates by one step");
  const std::size_t n = theta.n();
  const std::uint64_t ord = order_u64(theta.flatten());
  auto telems = T.elements();
  TwistedNormalizer out;
  std::set<Perm> seen;
  for (std::uint64_t j = 1; j < ord; j += n) {
    if (numth::gcd(j, ord) != 1) continue;
    const auto target = theta.pow(static_cast<long long>(j));
    bool any = false;
    for (const auto& t0 : telems) {
      std::vector<Perm> ts{t0};
      bool ok = true;
      for (std::size_t i = 0; i + 1 < n && ok; ++i) {
        Perm next = theta[i].inverse() * ts[i] * target[i];
        ok = T.contains(next);
        ts.push_back(std::move(next));
      }
      if (!ok || theta[n - 1].inverse() * ts[n - 1] * target[n - 1] != t0) continue;
      auto m = WreathElement(ts, 0).flatten();
      any = true;
      if (j == 1) out.centralizer.push_back(m);
      if (seen.insert(m).second) out.normalizer.push_back(m);
    }
    if (any) out.exponents.push_back(j);
  }
  std::sort(out.centralizer.begin(), out.centralizer.end());
  std::sort(out.normalizer.begin(), out.normalizer.end());
  return out;
}

bool same_double_coset(const PermGroup& H, const Perm& g1, const Perm& g2)
{
  // g1 in H g2 H  iff  g2^-1 h g1 in H for some h in H.
  const Perm g2inv = g2.inverse();
  bool found = false;
  H.for_each_element([&](const Perm& h) {
    if (!found && H.contains(g2inv * h * g1)) found = true;
  });
  return found;
}

namespace {

struct DecompositionCounts {
  std::uint64_t theta_order = 0;
  std::size_t components = 0;
  std::vector<std::size_t> dimensions;
  std::size_t regular_six = 0;
};

DecompositionCounts count_components(const AlmostSimpleSeed& seed, const WreathElement& theta)
{
  DecompositionCounts c;
  c.theta_order = order_u64(theta.flatten());
  ElementaryAbelian F(seed.F, 2);
  auto conj = conjugation_matrix(theta, F);
  auto dec = eqcode::decompose_invariant(conj);
  c.components = dec.components.size();
  for (const auto& comp : dec.components) {
    c.dimensions.push_back(comp.code.dimension());
    if (comp.code.dimension() == 6 && eqcode::is_regular_on_nonzero(comp.code, conj)) ++c.regular_six;
  }
  std::sort(c.dimensions.begin(), c.dimensions.end());
  return c;
}

bool counts_as_expected(const DecompositionCounts& c)
{
  const std::vector<std::size_t> dims{1, 2, 3, 3, 6, 6, 6, 6, 6, 6, 6, 6, 6};
  return c.theta_order == 63 && c.components == 13 && c.dimensions == dims && c.regular_six == 6;
}

nlohmann::json counts_json(const DecompositionCounts& c)
{
  return {{"theta_order", c.theta_order},
          {"components", c.components},
          {"dimensions", c.dimensions},
          {"regular_six", c.regular_six}};
}

} // namespace

Example66 example_2_6(std::size_t component, bool group_part)
{
  constexpr std::size_t n = 21;
  Example66 ex;
  const auto seed = atlas::seed_psl28_gamma();
  const auto theta = build_theta_pattern(seed.b, n, ex.reading);
  auto counts = count_components(seed, theta);
  ex.theta_order = counts.theta_order;
  ex.component_count = counts.components;
  ex.dimensions = counts.dimensions;
  ex.regular_six = counts.regular_six;
  ex.counts_match = counts_as_expected(counts);
  if (!ex.counts_match) {
    ex.alternatives[to_string(ex.reading)] = counts_json(counts);
    for (auto r : {ThetaReading::last_b_squared, ThetaReading::last_one}) {
      auto alt = build_theta_pattern(seed.b, n, r);
      if (order_u64(alt.flatten()) != 63) {
        ex.alternatives[to_string(r)] = {{"theta_order", order_u64(alt.flatten())}};
        continue;
      }
      ex.alternatives[to_string(r)] = counts_json(count_components(seed, alt));
    }
    return ex;
  }
  if (!group_part) return ex;

  ex.pa = build_E_and_H(seed, theta, component);
  assemble_G(ex.pa);
  ex.order_G = ex.pa.order_G;
  ex.order_M = ex.pa.order_M;
  ex.index = ex.order_G / ex.pa.order_H;

  const auto norm = twisted_centralizer(seed.T, theta);
  ex.normalizer_order = norm.normalizer.size();
  for (const auto& x : norm.normalizer)
    for (const auto& y : norm.normalizer)
      if (x * y != y * x) ex.normalizer_nonabelian = true;
  for (const auto& x : norm.normalizer) {
    if (x.is_identity() || !(x * x).is_identity()) continue;
    ++ex.normalizer_involutions;
    if (ex.pa.H.contains(x)) continue;
    auto gens = ex.pa.H.generators();
    gens.push_back(x);
    if (PermGroup(n * seed.degree, gens).order() == ex.order_G) ex.generating_involutions.push_back(x);
  }
  std::vector<Perm> classes;
  for (const auto& x : ex.generating_involutions)
    if (std::none_of(classes.begin(), classes.end(), [&](const Perm& y) { return same_double_coset(ex.pa.H, x, y); }))
      classes.push_back(x);
  ex.generating_double_cosets = classes.size();
  if (!classes.empty()) ex.g = classes.front();

  // Coarser: also identify g with g^x for x in N_M(<theta>) normalizing H,
  // which gives isomorphic coset graphs.
  std::vector<Perm> fixing_H;
  for (const auto& x : norm.normalizer) {
    const auto& hg = ex.pa.H.generators();
    if (std::all_of(hg.begin(), hg.end(), [&](const Perm& h) { return ex.pa.H.contains(h.conjugate_by(x)); }))
      fixing_H.push_back(x);
  }
  ex.normalizer_fixing_H = fixing_H.size();
  std::vector<Perm> coarse;
  for (const auto& x : classes)
    if (std::none_of(coarse.begin(), coarse.end(), [&](const Perm& y) {
          return std::any_of(fixing_H.begin(), fixing_H.end(),
                             [&](const Perm& k) { return same_double_coset(ex.pa.H, x.conjugate_by(k), y); });
        }))
      coarse.push_back(x);
  ex.generating_classes_up_to_normalizer = coarse.size();

  const BigInt expected_index = boost::multiprecision::pow(BigInt(2), 57) * boost::multiprecision::pow(BigInt(3), 42) *
                                boost::multiprecision::pow(BigInt(7), 21);
  ex.index_identity = ex.index == expected_index;
  ex.arc_regular_identity = ex.order_M == ex.index * 64;
  return ex;
}

nlohmann::json Example66::summary() const
{
  nlohmann::json j;
  j["reading"] = to_string(reading);
  j["theta_order"] = theta_order;
  j["components"] = component_count;
  j["dimensions"] = dimensions;
  j["regular_six"] = regular_six;
  j["counts_match"] = counts_match;
  if (!alternatives.is_null()) j["alternatives"] = alternatives;
  if (!counts_match || pa.n == 0) return j;
  j["construction"] = pa.summary();
  j["index"] = dec(index);
  j["normalizer_order"] = normalizer_order;
  j["normalizer_nonabelian"] = normalizer_nonabelian;
  j["normalizer_involutions"] = normalizer_involutions;
  j["generating_involutions"] = generating_involutions.size();
  j["generating_double_cosets"] = generating_double_cosets;
  j["normalizer_fixing_H"] = normalizer_fixing_H;
  j["generating_classes_up_to_normalizer"] = generating_classes_up_to_normalizer;
  if (g) j["g"] = g->to_json();
  j["index_identity"] = index_identity;
  j["arc_regular_identity"] = arc_regular_identity;
  return j;
}

} // namespace tarc::construct
