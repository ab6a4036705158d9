#pragma once

// Simple undirected graphs on vertices 0..n-1 with single-word adjacency
// bitsets. Induced subgraphs are never copied: a (graph, live VertexSet) pair
// is the subgraph currency throughout the library.

#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace matchroot {

inline constexpr int kMaxVertices = 64;

/// Effective vertex cap: MATCHROOT_MAX_N if set (clamped to 1..64), else 64.
int vertex_cap();

class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr VertexSet first(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }
  static VertexSet of(std::initializer_list<int> vs) {
    VertexSet s;
    for (int v : vs) s = s.with(v);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr int lowest() const { return std::countr_zero(bits_); }
  constexpr VertexSet with(int v) const { return VertexSet(bits_ | (std::uint64_t{1} << v)); }
  constexpr VertexSet without(int v) const {
    return VertexSet(bits_ & ~(std::uint64_t{1} << v));
  }
  constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;

  class iterator {
   public:
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr bool operator!=(const iterator& o) const { return rest_ != o.rest_; }

   private:
    std::uint64_t rest_;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<int> members() const;

  /// Lexicographic order on the ascending member lists.
  static bool lex_less(VertexSet a, VertexSet b);

 private:
  std::uint64_t bits_ = 0;
};

class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
  static Graph complete(int n);

  int order() const { return n_; }
  VertexSet vertices() const { return VertexSet::first(n_); }
  VertexSet neighbors(int v) const { return VertexSet(adj_[static_cast<std::size_t>(v)]); }
  bool adjacent(int u, int v) const { return neighbors(u).contains(v); }
  int edge_count() const;
  /// Edges (u, v) with u < v, sorted.
  std::vector<std::pair<int, int>> edges() const;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::array<std::uint64_t, kMaxVertices> adj_{};
};

Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

/// Parses `{"n": int, "edges": [[u, v], ...]}`.
Graph parse_edge_list_json(std::string_view text);
std::string to_edge_list_json(const Graph& g);

/// graph6 line or JSON object, detected from the first non-blank character.
Graph parse_graph_auto(std::string_view text);

/// live minus X. Deletion order never matters.
inline VertexSet delete_vertices(VertexSet live, VertexSet x) { return live - x; }

/// Same vertex set, edge (u, v) removed. Throws ContractError on a non-edge.
Graph delete_edge(const Graph& g, int u, int v);

/// Same vertex set, edge (u, v) added. Throws ContractError if present.
Graph add_edge(const Graph& g, int u, int v);

/// The induced subgraph on `keep`, relabelled 0..|keep|-1 in index order.
Graph induced_subgraph(const Graph& g, VertexSet keep);

/// Edges of g with both ends in live, as a graph on the same vertex indices.
Graph restrict_to(const Graph& g, VertexSet live);

/// Connected components of g[live], sorted by least member.
std::vector<VertexSet> components(const Graph& g, VertexSet live);
inline std::vector<VertexSet> components(const Graph& g) { return components(g, g.vertices()); }

bool is_connected(const Graph& g, VertexSet live);

/// Bron-Kerbosch with pivoting; lexicographic by sorted member list.
std::vector<VertexSet> maximal_cliques(const Graph& g, VertexSet live);
inline std::vector<VertexSet> maximal_cliques(const Graph& g) {
  return maximal_cliques(g, g.vertices());
}

bool is_clique(const Graph& g, VertexSet s);
bool is_independent(const Graph& g, VertexSet s);

using PathVisitor = std::function<void(const std::vector<int>&)>;

/// Every simple u-v path in g[live], each exactly once, by DFS over
/// ascending neighbours.
void for_each_path(const Graph& g, VertexSet live, int u, int v, const PathVisitor& visit);
std::vector<std::vector<int>> paths_between(const Graph& g, VertexSet live, int u, int v);

Graph complement(const Graph& g);
/// Edge-set union. Throws ContractError when the orders differ.
Graph union_edges(const Graph& a, const Graph& b);

}  // namespace matchroot
