#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "matchroot/operators.hpp"

namespace matchroot {

/// Every pair of X shifts mult by +2 when deleted from G[live]. Throws
/// ContractError when |X| <= 1.
bool is_nice(ThetaContext& ctx, VertexSet X, VertexSet live);
inline bool is_nice(ThetaContext& ctx, VertexSet X) {
  return is_nice(ctx, X, ctx.graph().vertices());
}

/// mult(theta, G - X) = mult(theta, G) + |X|. X must be nonempty.
bool is_extreme(ThetaContext& ctx, VertexSet X, VertexSet live);
inline bool is_extreme(ThetaContext& ctx, VertexSet X) {
  return is_extreme(ctx, X, ctx.graph().vertices());
}

/// c_theta(G - X) = mult(theta, G) + |X|. X must be nonempty.
bool is_tutte(ThetaContext& ctx, VertexSet X, VertexSet live);
inline bool is_tutte(ThetaContext& ctx, VertexSet X) {
  return is_tutte(ctx, X, ctx.graph().vertices());
}

/// Maximal cliques of D_{2,theta}(G) with at least two members.
std::vector<VertexSet> maximal_nice_sets(ThetaContext& ctx);

inline constexpr int kSubsetCap = 10;

/// Maximal members of the family of theta-extreme sets with |X| > 1, by
/// checking every subset. Throws CapExceeded above `cap` vertices.
std::vector<VertexSet> maximal_extreme_sets_bruteforce(ThetaContext& ctx, int cap = kSubsetCap);

/// Same for theta-Tutte sets.
std::vector<VertexSet> maximal_tutte_sets_bruteforce(ThetaContext& ctx, int cap = kSubsetCap);

struct MatchingCertificate {
  VertexSet removed;         // V(M') for the sub-matching M'
  int mult = 0;              // mult(theta, G - V(M'))
  bool residual_nice = true; // X - V(M') nice in G - V(M'), or fewer than 2 left
};

struct NiceMatchingResult {
  std::vector<std::pair<int, int>> pairs;  // (x_i, y_i), x ascending
  VertexSet X;
  VertexSet Y;
  int base_mult = 0;
  std::vector<MatchingCertificate> certificates;
  bool exhaustive = true;

  bool is_matching(const Graph& g) const;
  bool y_independent(const Graph& g) const;
  bool certificates_hold() const;
};

inline constexpr int kExhaustiveCertificateCap = 12;
inline constexpr int kSampledCertificates = 4096;

/// Pairs each x in X, ascending, with the least neighbour that is essential
/// once x is removed from what is left, then records certificates for the
/// sub-matchings. Throws ContractError unless X is nice, and InvariantBreach
/// if some x has no essential neighbour.
NiceMatchingResult nice_matching(ThetaContext& ctx, VertexSet X);

/// Checks that the swap x_i <-> y_i maps every edge of G[X u Y] onto an edge
/// of `d_theta`. On failure the offending edge of G is written to `witness`.
bool embed_check(const Graph& g, const Graph& d_theta, const NiceMatchingResult& result,
                 std::pair<int, int>* witness = nullptr);
bool embed_check(ThetaContext& ctx, const NiceMatchingResult& result);

inline constexpr int kCopySearchCap = 12;

/// An injective map from the vertices of `pattern` into those of `host`
/// that sends every edge of G[pattern] onto an edge of `host`, by
/// backtracking. Returns the image of each pattern vertex in ascending
/// pattern order, or nothing. Throws CapExceeded when |pattern| > `cap`.
std::optional<std::vector<int>> subgraph_copy(const Graph& g, VertexSet pattern, const Graph& host,
                                              int cap = kCopySearchCap);

inline constexpr int kHeilmannLiebCap = 7;
inline constexpr int kPathCap = 8;

/// mu(G-u) mu(G-v) - mu(G) mu(G-u-v) equals the sum over u-v paths P of
/// mu(G-P)^2, exactly. Throws CapExceeded above `cap` vertices.
bool heilmann_lieb_check(const Graph& g, int u, int v, int cap = kHeilmannLiebCap);

/// Some u-v path P has mult(theta, G - P) <= mult(theta, G). Throws
/// CapExceeded above `cap` vertices.
bool path_criterion(ThetaContext& ctx, int u, int v, int cap = kPathCap);

}  // namespace matchroot
