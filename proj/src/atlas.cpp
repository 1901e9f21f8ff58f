#include "tarc/atlas.hpp"

#include <stdexcept>

#include "tarc/numth.hpp"

namespace tarc::atlas {

std::string to_string(Family f)
{
  switch (f) {
    case Family::pgl2: return "pgl2";
    case Family::symmetric: return "symmetric";
    case Family::psl28_gamma: return "psl28_gamma";
  }
  return "pgl2";
}

Family family_from_string(const std::string& s)
{
  if (s == "pgl2")
    return Family::pgl2;
  if (s == "symmetric")
    return Family::symmetric;
  if (s == "psl28_gamma")
    return Family::psl28_gamma;
  throw std::invalid_argument("unknown family '" + s + "'");
}

Perm mobius(const gf::Field& F, gf::Elem alpha, gf::Elem beta, gf::Elem gamma, gf::Elem delta, unsigned frob)
{
  const gf::Elem inf = F.q();
  std::uint64_t e = 1;
  for (unsigned i = 0; i < frob; ++i)
    e *= F.p();
  std::vector<Point> img(F.q() + 1);
  for (gf::Elem x = 0; x <= inf; ++x) {
    if (x == inf) {
      img[x] = gamma == 0 ? inf : F.div(alpha, gamma);
      continue;
    }
    const gf::Elem y = F.pow(x, e);
    const gf::Elem num = F.add(F.mul(alpha, y), beta);
    const gf::Elem den = F.add(F.mul(gamma, y), delta);
    img[x] = den == 0 ? inf : F.div(num, den);
  }
  return Perm(std::move(img));
}

PermGroup AlmostSimpleSeed::R() const
{
  if (role == Role::bipartite)
    return PermGroup(degree, {*a, b});
  std::vector<Perm> gens = F;
  gens.push_back(b);
  gens.push_back(c);
  return PermGroup(degree, std::move(gens));
}

PermGroup AlmostSimpleSeed::R_cap_T() const
{
  if (role == Role::bipartite)
    return PermGroup(degree, {*a, b * b});
  std::vector<Perm> gens = F;
  gens.push_back(b);
  gens.push_back(c.pow(index_XT));
  return PermGroup(degree, std::move(gens));
}

nlohmann::json AlmostSimpleSeed::to_json() const
{
  nlohmann::json j;
  j["family"] = to_string(family);
  j["role"] = role == Role::nondiagonal ? "nondiagonal" : "bipartite";
  j["q"] = q;
  j["degree"] = degree;
  j["index_XT"] = index_XT;
  auto gens = [](const std::vector<Perm>& v) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& p : v)
      a.push_back(p.to_json());
    return a;
  };
  j["X"] = gens(X.generators());
  j["T"] = gens(T.generators());
  j["F"] = gens(F);
  j["b"] = b.to_json();
  j["c"] = c.to_json();
  if (a)
    j["a"] = a->to_json();
  if (o)
    j["o"] = o->to_json();
  if (d)
    j["d"] = d->to_json();
  j["o_recipe"] = o_recipe;
  return j;
}

namespace {

void require(bool ok, const std::string& what)
{
  if (!ok)
    throw std::logic_error("seed verification failed: " + what);
}

bool normalizes(const Perm& x, const PermGroup& g)
{
  for (const auto& h : g.generators())
    if (!g.contains(h.conjugate_by(x)))
      return false;
  return true;
}

// Conditions on o for the non-diagonal construction, given the rest.
bool o_is_valid(const AlmostSimpleSeed& s, const Perm& o)
{
  if (o.is_identity() || !(o * o).is_identity() || !s.T.contains(o))
    return false;
  if (o * s.c != s.c * o)
    return false;
  if (!normalizes(o, PermGroup(s.degree, {s.b, s.c})))
    return false;
  std::vector<Perm> gens = s.F;
  gens.push_back(s.b);
  gens.push_back(s.c);
  gens.push_back(o);
  return PermGroup(s.degree, gens).order() == s.X.order();
}

void verify_common(const AlmostSimpleSeed& s)
{
  require(s.T.is_subgroup_of(s.X), "T <= X");
  require(s.X.order() == s.T.order() * s.index_XT, "|X:T|");
  PermGroup F(s.degree, s.F);
  require(F.order() == s.q, "|F| = q");
  require(s.R().normalizes(F), "F normal in R");
}

void verify_nondiagonal(const AlmostSimpleSeed& s)
{
  verify_common(s);
  const std::uint64_t g2 = numth::gcd(2, s.q - 1);
  require(s.b.order() == (s.q - 1) / g2, "order(b)");
  require(s.c.order() == g2, "order(c)");
  require(s.b * s.c == s.c * s.b, "bc = cb");
  auto R = s.R();
  require(R.order() == s.q * (s.q - 1), "|R| = q(q-1)");
  auto RT = perm::filtered_intersection_with_product(R, s.T);
  auto expected = s.R_cap_T();
  require(expected.is_subgroup_of(s.T), "F:<b, c^|X:T|> <= T");
  require(RT.order() == expected.order(), "R cap T = F:<b, c^|X:T|>");
  if (s.o)
    require(o_is_valid(s, *s.o), "o conditions");
}

void choose_o(AlmostSimpleSeed& s, const std::vector<std::pair<Perm, std::string>>& candidates)
{
  for (const auto& [o, how] : candidates)
    if (o_is_valid(s, o)) {
      s.o = o;
      s.o_recipe = how;
      return;
    }
  // Exhaustive fallback on small X: least valid involution.
  if (s.X.order() > 1000000)
    throw std::logic_error("seed: no valid o from the recipe and X too large to search");
  std::optional<Perm> best;
  s.X.for_each_element([&](const Perm& x) {
    if ((!best || x < *best) && o_is_valid(s, x))
      best = x;
  });
  if (!best)
    throw std::logic_error("seed: no involution o satisfies the conditions");
  s.o = *best;
  s.o_recipe = "search";
}

std::vector<Perm> translations(const gf::Field& F)
{
  std::vector<Perm> out;
  gf::Elem beta = 1;
  for (unsigned j = 0; j < F.f(); ++j, beta *= F.p())
    out.push_back(mobius(F, 1, beta, 0, 1));
  return out;
}

// Maps x -> (x * k) over Z_p, optionally composed with inversion; points 0..p-1.
Perm zp_map(std::uint64_t p, const std::function<std::uint64_t(std::uint64_t)>& f)
{
  std::vector<Point> img(p);
  for (std::uint64_t x = 0; x < p; ++x)
    img[x] = static_cast<Point>(f(x));
  return Perm(std::move(img));
}

std::uint64_t least_nonresidue(std::uint64_t p)
{
  for (std::uint64_t v = 2; v < p; ++v)
    if (numth::pow_mod(v, (p - 1) / 2, p) == p - 1)
      return v;
  throw std::logic_error("no quadratic non-residue");
}

void verify_bipartite(const AlmostSimpleSeed& s)
{
  verify_common(s);
  const std::uint64_t p = s.q;
  require(s.a->order() == p, "order(a) = p");
  require(s.b.order() == p - 1, "order(b) = p-1");
  require(!s.c.is_identity() && (s.c * s.c).is_identity(), "c involution");
  require(s.b.conjugate_by(s.c) == s.b.inverse(), "b^c = b^-1");
  require(!s.T.contains(s.c * s.b.pow(static_cast<long long>((p - 1) / 2))), "c b^((p-1)/2) not in T");
  require(PermGroup(s.degree, {s.b, s.c}).order() == 2 * (p - 1), "|<b,c>| = 2(p-1)");
  require(PermGroup(s.degree, {*s.a, s.b}).order() == p * (p - 1), "|R| = p(p-1)");
  require(PermGroup(s.degree, {*s.a, s.b, s.c}).order() == s.X.order(), "X = <a,b,c>");
  auto RT = perm::filtered_intersection_with_product(PermGroup(s.degree, {*s.a, s.b}), s.T);
  require(RT.order() == p * (p - 1) / 2, "|R cap T| = p(p-1)/2");
  require(s.R_cap_T().order() == RT.order() && s.R_cap_T().is_subgroup_of(s.T), "R cap T = <a, b^2>");
}

} // namespace

AlmostSimpleSeed seed_pgl2(std::uint64_t q, Role role)
{
  auto pp = numth::prime_power(q);
  if (!pp)
    throw std::invalid_argument("seed_pgl2: q must be a prime power");
  if (role == Role::nondiagonal) {
    bool shape = (q % 2 == 0 && q >= 4) || (q >= 7 && q % 4 == 3);
    if (!shape)
      throw std::invalid_argument("seed_pgl2: need q >= 4 even or q >= 7 with q = 3 mod 4");
    auto ps = numth::validate_c1(q);
    if (!ps.valid)
      throw std::invalid_argument("seed_pgl2: q rejected (" + ps.violated_clause + ")");
  } else if (pp->second != 1 || q < 5) {
    throw std::invalid_argument("seed_pgl2: bipartite role needs a prime p >= 5");
  }

  auto field = gf::make_field(pp->first, pp->second);
  const auto& F = *field;
  const gf::Elem mu = F.primitive_element();
  const gf::Elem minus_one = F.neg(1);

  AlmostSimpleSeed s;
  s.family = Family::pgl2;
  s.role = role;
  s.q = q;
  s.degree = q + 1;
  const Perm inv = mobius(F, 0, 1, 1, 0);
  const Perm scale = mobius(F, mu, 0, 0, 1);
  auto xgens = translations(F);
  auto tgens = xgens;
  xgens.push_back(scale);
  xgens.push_back(inv);
  if (q % 2 == 0) {
    tgens = xgens;
  } else {
    tgens.push_back(scale * scale);
    tgens.push_back(mobius(F, 0, minus_one, 1, 0));
  }
  s.X = PermGroup(s.degree, xgens);
  s.T = PermGroup(s.degree, tgens);
  s.index_XT = static_cast<unsigned>(numth::gcd(2, q - 1));

  if (role == Role::nondiagonal) {
    s.F = translations(F);
    s.a = scale;
    s.b = scale.pow(s.index_XT);
    s.c = scale.pow(static_cast<long long>((q - 1) / s.index_XT));
    std::vector<std::pair<Perm, std::string>> candidates;
    for (gf::Elem gamma = 1; gamma < q; ++gamma)
      candidates.emplace_back(mobius(F, 0, gamma, 1, 0), "x -> " + std::to_string(gamma) + "/x");
    choose_o(s, candidates);
    verify_nondiagonal(s);
  } else {
    s.a = mobius(F, 1, 1, 0, 1);
    s.F = {*s.a};
    s.b = scale;
    const Perm half = s.b.pow(static_cast<long long>((q - 1) / 2));
    bool found = false;
    for (gf::Elem kappa = 1; kappa < q && !found; ++kappa) {
      Perm c = mobius(F, 0, kappa, 1, 0);
      if (!s.T.contains(c * half)) {
        s.c = c;
        s.o_recipe = "c: x -> " + std::to_string(kappa) + "/x";
        found = true;
      }
    }
    require(found, "no involution c with c b^((p-1)/2) outside T");
    verify_bipartite(s);
  }
  return s;
}

AlmostSimpleSeed seed_symmetric(std::uint64_t p, Role role)
{
  if (!numth::is_prime(p))
    throw std::invalid_argument("seed_symmetric: p must be prime");
  if (role == Role::nondiagonal) {
    if (p < 7 || p % 4 != 3)
      throw std::invalid_argument("seed_symmetric: need p >= 7 with p = 3 mod 4");
    auto ps = numth::validate_c1(p);
    if (!ps.valid)
      throw std::invalid_argument("seed_symmetric: p rejected (" + ps.violated_clause + ")");
  } else if (p < 5) {
    throw std::invalid_argument("seed_symmetric: bipartite role needs p >= 5");
  }

  const std::uint64_t g = gf::make_field(p, 1)->primitive_element();
  AlmostSimpleSeed s;
  s.family = Family::symmetric;
  s.role = role;
  s.q = p;
  s.degree = p;
  s.X = PermGroup::symmetric(p);
  s.T = PermGroup::alternating(p);
  s.index_XT = 2;
  const Perm shift = zp_map(p, [&](std::uint64_t x) { return (x + 1) % p; });
  const Perm scale = zp_map(p, [&](std::uint64_t x) { return x * g % p; });
  auto over = [&](std::uint64_t k) {
    // x -> k/x on Z_p^*, 0 fixed.
    return zp_map(p, [&](std::uint64_t x) -> std::uint64_t {
      if (x == 0)
        return 0;
      return k * numth::pow_mod(x, p - 2, p) % p;
    });
  };
  s.F = {shift};

  if (role == Role::nondiagonal) {
    s.a = scale;
    s.b = scale * scale;
    s.c = scale.pow(static_cast<long long>((p - 1) / 2));
    const std::uint64_t nu = least_nonresidue(p);
    s.d = over(nu);
    require(s.a->conjugate_by(*s.d) == s.a->inverse(), "d inverts a");
    choose_o(s, {{s.c * *s.d, "c d with d: x -> " + std::to_string(nu) + "/x"}});
    require(PermGroup(p, {shift, s.b, *s.o}).order() == s.T.order(), "<F, b, o> = A_p");
    verify_nondiagonal(s);
  } else {
    s.a = shift;
    s.b = scale;
    const Perm half = s.b.pow(static_cast<long long>((p - 1) / 2));
    bool found = false;
    for (std::uint64_t kappa = 1; kappa < p && !found; ++kappa) {
      Perm c = over(kappa);
      if (!s.T.contains(c * half)) {
        s.c = c;
        s.o_recipe = "c: x -> " + std::to_string(kappa) + "/x";
        found = true;
      }
    }
    require(found, "no involution c with c b^((p-1)/2) outside T");
    verify_bipartite(s);
  }
  return s;
}

AlmostSimpleSeed seed_psl28_gamma()
{
  auto field = gf::make_field(2, 3);
  const auto& F = *field;
  AlmostSimpleSeed s;
  s.family = Family::psl28_gamma;
  s.role = Role::nondiagonal;
  s.q = 8;
  s.degree = 9;
  auto tgens = translations(F);
  const Perm scale = mobius(F, F.primitive_element(), 0, 0, 1);
  tgens.push_back(scale);
  tgens.push_back(mobius(F, 0, 1, 1, 0));
  const Perm frobenius = mobius(F, 1, 0, 0, 1, 1);
  auto xgens = tgens;
  xgens.push_back(frobenius);
  s.T = PermGroup(9, tgens);
  s.X = PermGroup(9, xgens);
  s.index_XT = 3;
  s.F = translations(F);
  s.a = scale;
  s.b = frobenius;
  s.c = Perm::identity(9);
  s.o_recipe = "none";

  require(s.X.order() == 1512, "|X| = 1512");
  require(s.T.order() == 504, "|T| = 504");
  require(s.b.order() == 3, "order(b) = 3");
  PermGroup Fg(9, s.F);
  require(Fg.order() == 8, "|F| = 8");
  require(normalizes(s.b, Fg), "b normalizes F");
  std::uint64_t in_T = 0, in_X = 0;
  s.X.for_each_element([&](const Perm& x) {
    if (normalizes(x, Fg)) {
      ++in_X;
      if (s.T.contains(x))
        ++in_T;
    }
  });
  require(in_T == 56, "|N_T(F)| = 56");
  require(in_X == 168, "|N_X(F)| = 168");
  return s;
}

} // namespace tarc::atlas
