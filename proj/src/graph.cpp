#include "tarc/graph.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace tarc::graph {

void SmallGraph::add_edge(Vertex u, Vertex v)
{
  if (u >= adj_.size() || v >= adj_.size()) throw std::invalid_argument("edge end out of range");
  if (u == v) throw std::invalid_argument("loops are not allowed");
  if (adjacent(u, v)) return;
  adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
  adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
}

std::size_t SmallGraph::edge_count() const
{
  std::size_t twice = 0;
  for (const auto& a : adj_) twice += a.size();
  return twice / 2;
}

bool SmallGraph::adjacent(Vertex u, Vertex v) const
{
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::optional<std::size_t> SmallGraph::valency() const
{
  if (adj_.empty()) return 0;
  for (const auto& a : adj_)
    if (a.size() != adj_.front().size()) return std::nullopt;
  return adj_.front().size();
}

bool SmallGraph::connected() const
{
  if (adj_.empty()) return true;
  std::vector<bool> seen(adj_.size(), false);
  std::deque<Vertex> queue{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex v : adj_[u])
      if (!seen[v]) {
        seen[v] = true;
        ++reached;
        queue.push_back(v);
      }
  }
  return reached == adj_.size();
}

bool SmallGraph::bipartite() const
{
  std::vector<int> colour(adj_.size(), -1);
  for (Vertex s = 0; s < adj_.size(); ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex v : adj_[u]) {
        if (colour[v] < 0) {
          colour[v] = 1 - colour[u];
          queue.push_back(v);
        } else if (colour[v] == colour[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::optional<std::size_t> SmallGraph::girth() const
{
  std::size_t best = std::numeric_limits<std::size_t>::max();
  const std::size_t n = adj_.size();
  std::vector<std::size_t> dist(n);
  std::vector<Vertex> parent(n);
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), std::numeric_limits<std::size_t>::max());
    dist[s] = 0;
    parent[s] = s;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      if (2 * dist[u] + 1 >= best) break;
      for (Vertex v : adj_[u]) {
        if (dist[v] == std::numeric_limits<std::size_t>::max()) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          queue.push_back(v);
        } else if (parent[u] != v) {
          best = std::min(best, dist[u] + dist[v] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<std::size_t>::max()) return std::nullopt;
  return best;
}

std::string SmallGraph::edge_list() const
{
  std::ostringstream os;
  for (Vertex u = 0; u < adj_.size(); ++u)
    for (Vertex v : adj_[u])
      if (u < v) os << u << ' ' << v << '\n';
  return os.str();
}

std::size_t two_arc_orbits(const SmallGraph& g, const std::vector<Perm>& action, std::size_t* count)
{
  const std::uint64_t n = g.vertex_count();
  auto key = [n](std::uint64_t u, std::uint64_t v, std::uint64_t w) { return (u * n + v) * n + w; };
  std::unordered_map<std::uint64_t, std::uint32_t> index;
  std::vector<std::array<Vertex, 3>> arcs;
  for (Vertex v = 0; v < n; ++v)
    for (Vertex u : g.neighbours(v))
      for (Vertex w : g.neighbours(v))
        if (u != w) {
          index.emplace(key(u, v, w), static_cast<std::uint32_t>(arcs.size()));
          arcs.push_back({u, v, w});
        }
  if (count) *count = arcs.size();

  std::vector<std::uint32_t> parent(arcs.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::uint32_t i = 0; i < arcs.size(); ++i)
    for (const auto& s : action) {
      auto it = index.find(key(s[arcs[i][0]], s[arcs[i][1]], s[arcs[i][2]]));
      if (it == index.end()) throw std::invalid_argument("action does not preserve the graph");
      auto a = find(i), b = find(it->second);
      if (a != b) parent[a] = b;
    }
  std::size_t roots = 0;
  for (std::uint32_t i = 0; i < arcs.size(); ++i)
    if (find(i) == i) ++roots;
  return roots;
}

CosetGraph enumerate_small_graph(const PermGroup& G, const PermGroup& H, const Perm& g, std::uint64_t limit)
{
  if (!G.contains(g)) throw std::invalid_argument("g is not in G");
  if (H.contains(g)) throw std::invalid_argument("g lies in H");
  if (!H.contains(g * g)) throw std::invalid_argument("g^2 is not in H");

  CosetGraph out{SmallGraph(0), perm::coset_action(G, H, limit), 0, 0, 0};
  const auto& ca = out.cosets;
  const std::size_t n = ca.reps.size();

  // Neighbours of the trivial coset are the cosets H g h; keep one
  // representative per coset.
  std::vector<Perm> step;
  std::set<perm::Point> seen;
  H.for_each_element([&](const Perm& h) {
    Perm y = g * h;
    if (seen.insert(ca.label(H, y)).second) step.push_back(std::move(y));
  });

  SmallGraph graph(n);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& e : step) {
      auto j = ca.label(H, e * ca.reps[i]);
      if (j == i) throw std::logic_error("coset graph has a loop");
      graph.add_edge(static_cast<Vertex>(i), j);
    }
  for (std::size_t i = 0; i < n; ++i)
    if (graph.neighbours(static_cast<Vertex>(i)).size() != step.size())
      throw std::logic_error("coset graph adjacency is not symmetric");
  out.graph = std::move(graph);
  out.vertex_orbits = ca.action.orbits().size();
  out.two_arc_orbits = two_arc_orbits(out.graph, ca.action.generators(), &out.two_arcs);
  return out;
}

SmallGraph standard_double_cover(const SmallGraph& g)
{
  const auto n = static_cast<Vertex>(g.vertex_count());
  SmallGraph cover(2 * n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : g.neighbours(u)) cover.add_edge(u, v + n);
  std::vector<std::uint8_t> sides(2 * n, 0);
  std::fill(sides.begin() + n, sides.end(), 1);
  cover.set_sides(std::move(sides));
  return cover;
}

} // namespace tarc::graph
