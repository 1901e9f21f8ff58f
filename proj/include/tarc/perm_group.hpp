#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "tarc/bigint.hpp"
#include "tarc/perm.hpp"
#include "tarc/stab_chain.hpp"

namespace tarc::perm {

/// Permutation group given by generators, with a lazily built stabilizer chain.
/// Building the chain is not thread-safe; queries afterwards are.
class PermGroup
{
public:
  PermGroup(std::size_t degree, std::vector<Perm> gens);

  static PermGroup symmetric(std::size_t n);
  static PermGroup alternating(std::size_t n);

  std::size_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }

  const StabChain& chain() const;
  /// Chain with an increasing base, for canonical coset labels.
  const StabChain& sorted_chain() const;
  void set_seed(std::uint64_t seed) { seed_ = seed; }
  /// Seed for random Schreier-Sims in groups created afterwards. Orders and
  /// memberships never depend on it.
  static void set_default_seed(std::uint64_t seed) { default_seed_ = seed; }
  static std::uint64_t default_seed() { return default_seed_; }

  BigInt order() const { return chain().order(); }
  /// Throws std::invalid_argument on a degree mismatch.
  bool contains(const Perm& x) const;
  bool is_subgroup_of(const PermGroup& other) const;
  bool normalizes(const PermGroup& other) const;

  /// Throws std::length_error if the order exceeds `limit`.
  std::vector<Perm> elements(std::uint64_t limit = 1000000) const;
  void for_each_element(const std::function<void(const Perm&)>& fn) const { chain().for_each_element(fn); }

  std::vector<Point> orbit(Point p) const;
  /// Orbits in order of their least point, each sorted.
  std::vector<std::vector<Point>> orbits() const;

  /// Pointwise stabilizer of the given points (generators from a chain with
  /// those points first in the base).
  PermGroup stabilizer(const std::vector<Point>& points) const;

private:
  std::size_t degree_;
  std::vector<Perm> gens_;
  std::uint64_t seed_ = default_seed_;
  static inline std::atomic<std::uint64_t> default_seed_{1};
  mutable std::shared_ptr<StabChain> chain_;
  mutable std::shared_ptr<StabChain> sorted_chain_;
};

struct ActionReport {
  bool transitive = false;
  bool two_transitive = false;
  bool primitive = false;
  bool semiregular = false;
  bool regular = false;
  std::vector<std::vector<Point>> orbits;
  /// A nontrivial block containing 0 when transitive but imprimitive.
  std::optional<std::vector<Point>> block;
};

ActionReport action_report(const PermGroup& g);

/// Least block containing a and b for a transitive group (union-find closure).
std::vector<Point> minimal_block(const PermGroup& g, Point a, Point b);

struct CosetAction {
  PermGroup action;         // on coset indices, generator i -> group generator i
  std::vector<Perm> reps;   // reps[i] lies in coset i; reps[0] = identity
  std::map<std::vector<Point>, Point> labels;  // canonical coset image -> index

  /// Index of the coset subgroup * y. Throws std::out_of_range if y lies
  /// outside the group.
  Point label(const PermGroup& subgroup, const Perm& y) const;
};

/// Action of `group` on the right cosets of `subgroup` by right
/// multiplication, cosets numbered in breadth-first order from the trivial
/// coset. Throws std::length_error if the index exceeds `limit`, and
/// std::invalid_argument if subgroup is not contained in group.
CosetAction coset_action(const PermGroup& group, const PermGroup& subgroup, std::uint64_t limit = 1000000);

/// {h in H : h in M}, by enumerating H.
PermGroup filtered_intersection_with_product(const PermGroup& H, const PermGroup& M,
                                             std::uint64_t limit = 1000000);

/// Subgroup generated by `pool`. Greedy:
/// an element is added as a generator only when not already generated.
PermGroup subgroup_from_elements(std::size_t degree, const std::vector<Perm>& pool);

} // namespace tarc::perm
