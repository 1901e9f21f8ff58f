#include "tarc/stab_chain.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace tarc::perm {

StabChain::StabChain(std::size_t degree, const std::vector<Perm>& gens, const Options& opts)
  : degree_(degree)
{
  for (const auto& g : gens)
    if (g.degree() != degree)
      throw std::invalid_argument("StabChain: generator degree mismatch");
  for (Point b : opts.base_prefix)
    if (b >= degree)
      throw std::invalid_argument("StabChain: base point out of range");
  build(gens, opts);
}

StabChain StabChain::with_sorted_base(std::size_t degree, const std::vector<Perm>& gens, std::uint64_t seed)
{
  Options opts;
  opts.seed = seed;
  opts.base_prefix.resize(degree);
  for (std::size_t i = 0; i < degree; ++i)
    opts.base_prefix[i] = static_cast<Point>(i);
  return StabChain(degree, gens, opts);
}

void StabChain::add_level(Point base)
{
  Level L;
  L.base = base;
  L.orbit = {base};
  L.index.assign(degree_, -1);
  L.index[base] = 0;
  L.reps.push_back(Perm::identity(degree_));
  L.rep_invs.push_back(Perm::identity(degree_));
  levels_.push_back(std::move(L));
  checked_.emplace_back(0, 0);
}

void StabChain::add_generator(std::size_t li, const Perm& g)
{
  Level& L = levels_[li];
  L.gens.push_back(g);
  const std::size_t old = L.orbit.size();
  for (std::size_t k = 0; k < L.orbit.size(); ++k) {
    // Old points only need the new generator; new points need all of them.
    const std::size_t first = k < old ? L.gens.size() - 1 : 0;
    for (std::size_t s = first; s < L.gens.size(); ++s) {
      Point img = L.gens[s][L.orbit[k]];
      if (L.index[img] >= 0)
        continue;
      L.index[img] = static_cast<std::int32_t>(L.orbit.size());
      L.orbit.push_back(img);
      Perm rep = L.reps[k] * L.gens[s];
      L.rep_invs.push_back(rep.inverse());
      L.reps.push_back(std::move(rep));
    }
  }
}

StabChain::SiftResult StabChain::sift(Perm g, std::size_t start) const
{
  for (std::size_t i = start; i < levels_.size(); ++i) {
    const Level& L = levels_[i];
    const Point img = g[L.base];
    const auto k = L.index[img];
    if (k < 0)
      return {std::move(g), i};
    if (k > 0)
      g = g * L.rep_invs[static_cast<std::size_t>(k)];
  }
  return {std::move(g), levels_.size()};
}

bool StabChain::contains(const Perm& g) const
{
  if (g.degree() != degree_)
    throw std::invalid_argument("StabChain::contains: degree mismatch");
  auto r = sift(g);
  return r.level == levels_.size() && r.residue.is_identity();
}

std::size_t StabChain::absorb(const SiftResult& r, std::size_t from)
{
  std::size_t stop = r.level;
  if (stop == levels_.size()) {
    // Residue fixes every base point: extend the base.
    add_level(r.residue.first_moved());
  }
  for (std::size_t i = from; i <= stop; ++i)
    add_generator(i, r.residue);
  return stop;
}

void StabChain::random_phase(const std::vector<Perm>& gens, const Options& opts)
{
  std::vector<Perm> slots;
  for (const auto& g : gens)
    if (!g.is_identity())
      slots.push_back(g);
  if (slots.empty())
    return;
  const std::size_t given = slots.size();
  while (slots.size() < 10) {
    Perm copy = slots[slots.size() % given];
    slots.push_back(std::move(copy));
  }
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<std::size_t> pick(0, slots.size() - 1);
  Perm acc = Perm::identity(degree_);
  auto next = [&]() -> const Perm& {
    std::size_t i = pick(rng), j = pick(rng);
    while (j == i)
      j = pick(rng);
    slots[i] = (rng() & 1) ? slots[i] * slots[j] : slots[i] * slots[j].inverse();
    acc = acc * slots[i];
    return acc;
  };
  for (int k = 0; k < 50; ++k)
    next();

  unsigned quiet = 0;
  while (quiet < opts.random_stop) {
    auto r = sift(next());
    if (r.level == levels_.size() && r.residue.is_identity()) {
      ++quiet;
      continue;
    }
    quiet = 0;
    absorb(r, 0);
  }
}

void StabChain::verify_phase()
{
  if (levels_.empty())
    return;
  std::size_t i = levels_.size();
  while (i-- > 0) {
    bool restarted = false;
    const auto [done_orbit, done_gens] = checked_[i];
    for (std::size_t k = 0; k < levels_[i].orbit.size() && !restarted; ++k) {
      for (std::size_t s = 0; s < levels_[i].gens.size(); ++s) {
        if (k < done_orbit && s < done_gens)
          continue;
        const Level& L = levels_[i];
        const Perm& gen = L.gens[s];
        const Point img = gen[L.orbit[k]];
        const auto kk = static_cast<std::size_t>(L.index[img]);
        Perm schreier = L.reps[k] * gen;
        if (schreier == L.reps[kk])
          continue;
        schreier = schreier * L.rep_invs[kk];
        auto r = sift(std::move(schreier), i + 1);
        if (r.level == levels_.size() && r.residue.is_identity())
          continue;
        // New strong generator; recheck from the deepest affected level.
        std::size_t stop = absorb(r, i + 1);
        i = stop + 1;
        restarted = true;
        break;
      }
    }
    if (!restarted)
      checked_[i] = {levels_[i].orbit.size(), levels_[i].gens.size()};
  }
}

void StabChain::drop_trivial_levels()
{
  std::vector<Level> kept;
  for (auto& L : levels_)
    if (L.orbit.size() > 1)
      kept.push_back(std::move(L));
  levels_ = std::move(kept);
  checked_.assign(levels_.size(), {0, 0});
}

void StabChain::build(const std::vector<Perm>& gens, const Options& opts)
{
  for (Point b : opts.base_prefix)
    add_level(b);
  // Every generator belongs to the top level.
  std::vector<Perm> nontrivial;
  for (const auto& g : gens)
    if (!g.is_identity())
      nontrivial.push_back(g);
  if (!nontrivial.empty() && levels_.empty())
    add_level(nontrivial.front().first_moved());
  for (const auto& g : nontrivial) {
    // Put g on every level whose earlier base points it fixes.
    std::size_t depth = 0;
    while (depth < levels_.size() && g[levels_[depth].base] == levels_[depth].base)
      ++depth;
    if (depth == levels_.size())
      add_level(g.first_moved());
    for (std::size_t i = 0; i <= depth; ++i)
      add_generator(i, g);
  }
  random_phase(nontrivial, opts);
  verify_phase();
  drop_trivial_levels();
}

std::vector<Point> StabChain::base() const
{
  std::vector<Point> b;
  for (const auto& L : levels_)
    b.push_back(L.base);
  return b;
}

BigInt StabChain::order() const
{
  BigInt n = 1;
  for (const auto& L : levels_)
    n *= L.orbit.size();
  return n;
}

std::vector<Point> StabChain::canonical_coset_image(const Perm& x) const
{
  if (x.degree() != degree_)
    throw std::invalid_argument("canonical_coset_image: degree mismatch");
  Perm y = x;
  Point prev = 0;
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    const Level& L = levels_[i];
    if (i > 0 && L.base <= prev)
      throw std::logic_error("canonical_coset_image: base is not increasing");
    prev = L.base;
    std::size_t best = 0;
    for (std::size_t k = 1; k < L.orbit.size(); ++k)
      if (y[L.orbit[k]] < y[L.orbit[best]])
        best = k;
    if (best)
      y = L.reps[best] * y;
  }
  return y.images();
}

void StabChain::for_each_element(const std::function<void(const Perm&)>& fn) const
{
  // g = u_{L-1} ... u_1 u_0 with u_i from the level-i transversal.
  std::function<void(std::size_t, const Perm&)> rec = [&](std::size_t i, const Perm& left) {
    if (i == 0) {
      fn(left);
      return;
    }
    for (const auto& u : levels_[i - 1].reps)
      rec(i - 1, left * u);
  };
  rec(levels_.size(), Perm::identity(degree_));
}

std::vector<Perm> StabChain::strong_generators() const
{
  return levels_.empty() ? std::vector<Perm>{} : levels_.front().gens;
}

} // namespace tarc::perm
