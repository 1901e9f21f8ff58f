#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "tarc/bigint.hpp"
#include "tarc/perm.hpp"

namespace tarc::perm {

/// Base and strong generating set with explicit transversals.
///
/// Built by random Schreier-Sims (product replacement, seeded) and then
/// certified by a deterministic pass in which every Schreier generator is
/// sifted, so the chain is exact regardless of the random phase.
class StabChain
{
public:
  struct Options {
    std::uint64_t seed = 1;
    /// Base points to use first, in order. Further points, if needed, are
    /// the least points moved by sift residues.
    std::vector<Point> base_prefix;
    /// Stop the random phase after this many consecutive trivial sifts.
    unsigned random_stop = 25;
  };

  struct Level {
    Point base;
    std::vector<Perm> gens;
    std::vector<Point> orbit;
    std::vector<std::int32_t> index;  // point -> position in orbit, or -1
    std::vector<Perm> reps;           // reps[k] maps base to orbit[k]
    std::vector<Perm> rep_invs;
  };

  StabChain(std::size_t degree, const std::vector<Perm>& gens, const Options& opts);
  StabChain(std::size_t degree, const std::vector<Perm>& gens)
    : StabChain(degree, gens, Options{}) {}

  /// Chain with base 0, 1, ..., n-1 (trivial levels dropped), so the base is
  /// increasing. Needed for canonical coset representatives.
  static StabChain with_sorted_base(std::size_t degree, const std::vector<Perm>& gens,
                                    std::uint64_t seed = 1);

  std::size_t degree() const { return degree_; }
  std::size_t length() const { return levels_.size(); }
  const Level& level(std::size_t i) const { return levels_[i]; }
  std::vector<Point> base() const;
  BigInt order() const;

  struct SiftResult {
    Perm residue;
    std::size_t level;  // first level where sifting stopped; length() if none
  };
  SiftResult sift(Perm g, std::size_t start = 0) const;
  bool contains(const Perm& g) const;

  /// Image array of the lexicographically least element of the right coset
  /// K x, K this group. Requires an increasing base (see with_sorted_base).
  std::vector<Point> canonical_coset_image(const Perm& x) const;

  /// Visits every element once.
  void for_each_element(const std::function<void(const Perm&)>& fn) const;

  std::vector<Perm> strong_generators() const;

private:
  void build(const std::vector<Perm>& gens, const Options& opts);
  void add_level(Point base);
  void add_generator(std::size_t level, const Perm& g);
  void random_phase(const std::vector<Perm>& gens, const Options& opts);
  void verify_phase();
  /// Adds a nontrivial residue of a sift that stopped at `stop` to levels
  /// from..stop, creating a new level when the residue fixes every base point.
  std::size_t absorb(const SiftResult& r, std::size_t from);
  void drop_trivial_levels();

  std::size_t degree_;
  std::vector<Level> levels_;
  // Per level, the (orbit, generator) rectangle whose Schreier generators are
  // already known to sift.
  std::vector<std::pair<std::size_t, std::size_t>> checked_;
};

} // namespace tarc::perm
