#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tarc/perm_group.hpp"

namespace tarc::graph {

using perm::Perm;
using perm::PermGroup;
using Vertex = std::uint32_t;

/// Simple undirected graph on 0..n-1 with sorted adjacency lists.
class SmallGraph
{
public:
  explicit SmallGraph(std::size_t n = 0) : adj_(n) {}
  /// Throws std::invalid_argument on loops or out-of-range ends; repeated
  /// edges are ignored.
  void add_edge(Vertex u, Vertex v);

  std::size_t vertex_count() const { return adj_.size(); }
  std::size_t edge_count() const;
  const std::vector<Vertex>& neighbours(Vertex v) const { return adj_[v]; }
  bool adjacent(Vertex u, Vertex v) const;
  /// The common degree, if all vertices have one.
  std::optional<std::size_t> valency() const;
  bool connected() const;
  bool bipartite() const;
  /// Length of a shortest cycle; empty for forests.
  std::optional<std::size_t> girth() const;
  /// Sides 0/1 when built as a double cover.
  const std::optional<std::vector<std::uint8_t>>& sides() const { return sides_; }
  void set_sides(std::vector<std::uint8_t> s) { sides_ = std::move(s); }
  /// One "u v" line per edge with u < v, in increasing order.
  std::string edge_list() const;

private:
  std::vector<std::vector<Vertex>> adj_;
  std::optional<std::vector<std::uint8_t>> sides_;
};

struct CosetGraph {
  SmallGraph graph;
  perm::CosetAction cosets;    // vertex i is the coset H * cosets.reps[i]
  std::size_t vertex_orbits = 0;
  std::size_t two_arc_orbits = 0;
  std::size_t two_arcs = 0;
};

/// Cos(G, H, g) with all vertices: Hx ~ Hy iff y x^-1 in HgH. Throws
/// std::invalid_argument unless g is in G, g not in H and g^2 in H, and
/// std::length_error when |G:H| exceeds `limit`.
CosetGraph enumerate_small_graph(const PermGroup& G, const PermGroup& H, const Perm& g,
                                 std::uint64_t limit = 1000000);

/// Orbits of the group generated by `action` (acting on the vertices) on the
/// ordered triples (u, v, w) with u ~ v ~ w and u != w.
std::size_t two_arc_orbits(const SmallGraph& g, const std::vector<Perm>& action, std::size_t* count = nullptr);

/// (a, 0) ~ (b, 1) iff a ~ b; vertex (a, s) is a + s n.
SmallGraph standard_double_cover(const SmallGraph& g);

} // namespace tarc::graph
