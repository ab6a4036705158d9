#pragma once

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "matchroot/algebraic.hpp"
#include "matchroot/exactpoly.hpp"
#include "matchroot/graph.hpp"

namespace matchroot {

/// Matching polynomials of the induced subgraphs of one root graph, memoized
/// by live-vertex mask. The entry cap is enforced with clear-on-cap at the
/// start of each public query, so references returned by a query remain
/// valid until the next query.
class MatchPolyCache {
 public:
  static constexpr std::size_t kDefaultEntryCap = std::size_t{1} << 21;

  explicit MatchPolyCache(Graph g, std::size_t entry_cap = kDefaultEntryCap);

  const Graph& graph() const { return g_; }

  /// mu(G[live], x).
  const Polynomial& poly(VertexSet live);
  const Polynomial& poly() { return poly(g_.vertices()); }

  /// Square-free decomposition of mu(G[live], x).
  const std::vector<SquarefreeFactor>& factors(VertexSet live);

  std::size_t size() const { return polys_.size(); }

 private:
  const Polynomial& compute(VertexSet live);

  Graph g_;
  std::size_t entry_cap_;
  std::unordered_map<std::uint64_t, Polynomial> polys_;
  std::unordered_map<std::uint64_t, std::vector<SquarefreeFactor>> factors_;
};

/// mu(G[live], x) by the vertex recurrence with component splitting.
Polynomial matching_polynomial(const Graph& g, VertexSet live);
inline Polynomial matching_polynomial(const Graph& g) {
  return matching_polynomial(g, g.vertices());
}

inline constexpr int kOracleCap = 12;

/// mu by explicit enumeration of matchings. Throws CapExceeded above `cap`
/// live vertices.
Polynomial matching_polynomial_oracle(const Graph& g, VertexSet live, int cap = kOracleCap);
inline Polynomial matching_polynomial_oracle(const Graph& g) {
  return matching_polynomial_oracle(g, g.vertices());
}

/// A fixed theta over one root graph, with mult(theta, G[live]) memoized.
class ThetaContext {
 public:
  ThetaContext(MatchPolyCache& cache, AlgebraicNumber theta)
      : cache_(&cache), theta_(std::move(theta)) {}

  const Graph& graph() const { return cache_->graph(); }
  const AlgebraicNumber& theta() const { return theta_; }
  MatchPolyCache& cache() { return *cache_; }

  int mult(VertexSet live);
  int mult() { return mult(graph().vertices()); }

 private:
  MatchPolyCache* cache_;
  AlgebraicNumber theta_;
  std::unordered_map<std::uint64_t, int> mults_;
};

/// mult(t, G[live]).
int mult(const AlgebraicNumber& t, const Graph& g, VertexSet live);

/// The distinct real roots of mu(G[live], x), ascending.
std::vector<AlgebraicNumber> theta_candidates(MatchPolyCache& cache, VertexSet live);
inline std::vector<AlgebraicNumber> theta_candidates(MatchPolyCache& cache) {
  return theta_candidates(cache, cache.graph().vertices());
}

}  // namespace matchroot
