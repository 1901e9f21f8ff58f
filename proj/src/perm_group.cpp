#include "tarc/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace tarc::perm {

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> gens) : degree_(degree), gens_(std::move(gens))
{
  for (const auto& g : gens_)
    if (g.degree() != degree_)
      throw std::invalid_argument("PermGroup: generator degree mismatch");
}

PermGroup PermGroup::symmetric(std::size_t n)
{
  if (n < 2)
    return PermGroup(n, {});
  std::vector<Point> cyc(n);
  for (std::size_t i = 0; i < n; ++i)
    cyc[i] = static_cast<Point>((i + 1) % n);
  Perm swap01(n);
  std::vector<Point> sw = swap01.images();
  std::swap(sw[0], sw[1]);
  return PermGroup(n, {Perm(cyc), Perm(sw)});
}

PermGroup PermGroup::alternating(std::size_t n)
{
  if (n < 3)
    return PermGroup(n, {});
  std::vector<Perm> gens;
  // 3-cycles (0 1 i) generate A_n.
  for (std::size_t i = 2; i < n; ++i) {
    std::vector<Point> img(n);
    std::iota(img.begin(), img.end(), Point{0});
    img[0] = 1;
    img[1] = static_cast<Point>(i);
    img[i] = 0;
    gens.emplace_back(std::move(img));
  }
  return PermGroup(n, std::move(gens));
}

const StabChain& PermGroup::chain() const
{
  if (!chain_) {
    StabChain::Options opts;
    opts.seed = seed_;
    chain_ = std::make_shared<StabChain>(degree_, gens_, opts);
  }
  return *chain_;
}

const StabChain& PermGroup::sorted_chain() const
{
  if (!sorted_chain_)
    sorted_chain_ = std::make_shared<StabChain>(StabChain::with_sorted_base(degree_, gens_, seed_));
  return *sorted_chain_;
}

bool PermGroup::contains(const Perm& x) const
{
  if (x.degree() != degree_)
    throw std::invalid_argument("PermGroup::contains: domain mismatch");
  return chain().contains(x);
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const
{
  return std::all_of(gens_.begin(), gens_.end(), [&](const Perm& g) { return other.contains(g); });
}

bool PermGroup::normalizes(const PermGroup& other) const
{
  for (const auto& g : gens_)
    for (const auto& h : other.generators())
      if (!other.contains(h.conjugate_by(g)))
        return false;
  return true;
}

std::vector<Perm> PermGroup::elements(std::uint64_t limit) const
{
  if (order() > limit)
    throw std::length_error("PermGroup::elements: group too large to enumerate");
  std::vector<Perm> out;
  out.reserve(static_cast<std::size_t>(order()));
  for_each_element([&](const Perm& g) { out.push_back(g); });
  return out;
}

std::vector<Point> PermGroup::orbit(Point p) const
{
  std::vector<bool> seen(degree_, false);
  std::vector<Point> orb{p};
  seen[p] = true;
  for (std::size_t k = 0; k < orb.size(); ++k)
    for (const auto& g : gens_) {
      Point img = g[orb[k]];
      if (!seen[img]) {
        seen[img] = true;
        orb.push_back(img);
      }
    }
  std::sort(orb.begin(), orb.end());
  return orb;
}

std::vector<std::vector<Point>> PermGroup::orbits() const
{
  std::vector<bool> seen(degree_, false);
  std::vector<std::vector<Point>> out;
  for (Point p = 0; p < degree_; ++p) {
    if (seen[p])
      continue;
    auto orb = orbit(p);
    for (Point x : orb)
      seen[x] = true;
    out.push_back(std::move(orb));
  }
  return out;
}

PermGroup PermGroup::stabilizer(const std::vector<Point>& points) const
{
  StabChain::Options opts;
  opts.seed = seed_;
  opts.base_prefix = points;
  StabChain c(degree_, gens_, opts);
  // After dropping trivial levels, the first level whose base is outside
  // `points` carries generators of the pointwise stabilizer.
  std::size_t i = 0;
  while (i < c.length() && std::find(points.begin(), points.end(), c.level(i).base) != points.end())
    ++i;
  if (i == c.length())
    return PermGroup(degree_, {});
  return PermGroup(degree_, c.level(i).gens);
}

namespace {

struct UnionFind {
  std::vector<Point> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), Point{0}); }
  Point find(Point x)
  {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(Point a, Point b)
  {
    a = find(a);
    b = find(b);
    if (a == b)
      return false;
    if (b < a)
      std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

} // namespace

std::vector<Point> minimal_block(const PermGroup& g, Point a, Point b)
{
  const std::size_t n = g.degree();
  UnionFind uf(n);
  std::vector<std::pair<Point, Point>> pending{{a, b}};
  uf.unite(a, b);
  while (!pending.empty()) {
    auto [x, y] = pending.back();
    pending.pop_back();
    for (const auto& s : g.generators()) {
      Point u = s[x], v = s[y];
      if (uf.unite(u, v))
        pending.emplace_back(u, v);
    }
  }
  std::vector<Point> block;
  const Point root = uf.find(a);
  for (Point p = 0; p < n; ++p)
    if (uf.find(p) == root)
      block.push_back(p);
  return block;
}

ActionReport action_report(const PermGroup& g)
{
  ActionReport r;
  const std::size_t n = g.degree();
  r.orbits = g.orbits();
  r.transitive = n > 0 && r.orbits.size() == 1;

  const BigInt order = g.order();
  r.semiregular = std::all_of(r.orbits.begin(), r.orbits.end(),
                              [&](const auto& o) { return BigInt(o.size()) == order; });
  r.regular = r.transitive && r.semiregular;

  if (!r.transitive)
    return r;
  if (n <= 2) {
    r.primitive = true;
    r.two_transitive = n == 2;
    return r;
  }
  auto stab = g.stabilizer({0});
  r.two_transitive = stab.orbit(1).size() == n - 1;
  if (r.two_transitive) {
    r.primitive = true;
    return r;
  }
  // A nontrivial block through 0 contains some other point; it suffices to
  // try one representative of each orbit of the stabilizer of 0.
  r.primitive = true;
  std::vector<bool> tried(n, false);
  tried[0] = true;
  for (Point b = 1; b < n; ++b) {
    if (tried[b])
      continue;
    for (Point x : stab.orbit(b))
      tried[x] = true;
    auto block = minimal_block(g, 0, b);
    if (block.size() < n) {
      r.primitive = false;
      r.block = std::move(block);
      break;
    }
  }
  return r;
}

CosetAction coset_action(const PermGroup& group, const PermGroup& subgroup, std::uint64_t limit)
{
  if (group.degree() != subgroup.degree())
    throw std::invalid_argument("coset_action: domain mismatch");
  if (!subgroup.is_subgroup_of(group))
    throw std::invalid_argument("coset_action: subgroup is not contained in group");
  const BigInt index = group.order() / subgroup.order();
  if (index > limit)
    throw std::length_error("coset_action: index exceeds the limit");

  const StabChain& K = subgroup.sorted_chain();
  const auto& gens = group.generators();
  const std::size_t count = static_cast<std::size_t>(index);

  std::map<std::vector<Point>, Point> label;
  std::vector<Perm> reps{Perm::identity(group.degree())};
  label.emplace(K.canonical_coset_image(reps[0]), 0);
  std::vector<std::vector<Point>> images(gens.size(), std::vector<Point>(count));
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t s = 0; s < gens.size(); ++s) {
      Perm y = reps[i] * gens[s];
      auto key = K.canonical_coset_image(y);
      auto [it, fresh] = label.emplace(std::move(key), static_cast<Point>(reps.size()));
      if (fresh) {
        if (reps.size() >= count)
          throw std::logic_error("coset_action: more cosets than the index");
        reps.push_back(std::move(y));
      }
      images[s][i] = it->second;
    }
  }
  if (reps.size() != count)
    throw std::logic_error("coset_action: coset count differs from the index");
  std::vector<Perm> action_gens;
  for (auto& img : images)
    action_gens.emplace_back(std::move(img));
  return {PermGroup(count, std::move(action_gens)), std::move(reps), std::move(label)};
}

Point CosetAction::label(const PermGroup& subgroup, const Perm& y) const
{
  auto it = labels.find(subgroup.sorted_chain().canonical_coset_image(y));
  if (it == labels.end())
    throw std::out_of_range("coset label: element outside the group");
  return it->second;
}

PermGroup subgroup_from_elements(std::size_t degree, const std::vector<Perm>& pool)
{
  std::vector<Perm> gens;
  std::unique_ptr<StabChain> current;
  for (const auto& x : pool) {
    if (x.is_identity())
      continue;
    if (current && current->contains(x))
      continue;
    gens.push_back(x);
    current = std::make_unique<StabChain>(degree, gens);
  }
  return PermGroup(degree, std::move(gens));
}

PermGroup filtered_intersection_with_product(const PermGroup& H, const PermGroup& M, std::uint64_t limit)
{
  if (H.degree() != M.degree())
    throw std::invalid_argument("filtered_intersection_with_product: domain mismatch");
  std::vector<Perm> kept;
  for (const auto& h : H.elements(limit))
    if (M.contains(h))
      kept.push_back(h);
  return subgroup_from_elements(H.degree(), kept);
}

} // namespace tarc::perm
