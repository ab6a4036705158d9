#pragma once

#include <array>

#include "matchroot/classify.hpp"

namespace matchroot {

/// All operator outputs are graphs on the root graph's vertex indices. When a
/// `live` set is given, edges only join live vertices.

/// Pairs (u, v) with mult(theta, G[live] - u - v) = mult(theta, G[live]) + r.
Graph d_r_graph(ThetaContext& ctx, int r, VertexSet live);
inline Graph d_r_graph(ThetaContext& ctx, int r) {
  return d_r_graph(ctx, r, ctx.graph().vertices());
}

struct DGraphBundle {
  std::array<Graph, 5> by_shift;  // index r + 2
  Graph d_theta;                  // r in {-2, -1, 0}
  Graph g_plus;                   // r in {1, 2}

  const Graph& d(int r) const { return by_shift.at(static_cast<std::size_t>(r + 2)); }
};

/// One pass over all live pairs. Throws InvariantBreach if a shift falls
/// outside -2..2.
DGraphBundle d_graph_bundle(ThetaContext& ctx, VertexSet live);
inline DGraphBundle d_graph_bundle(ThetaContext& ctx) {
  return d_graph_bundle(ctx, ctx.graph().vertices());
}

/// Pairs with mult(theta, G - u - v) <= mult(theta, G), tested directly.
Graph d_graph(ThetaContext& ctx, VertexSet live);
inline Graph d_graph(ThetaContext& ctx) { return d_graph(ctx, ctx.graph().vertices()); }

/// G with every special vertex joined to all other vertices.
Graph s_graph(const Graph& g, const ThetaDecomposition& d);
Graph s_graph(ThetaContext& ctx);

/// D_theta(G) rebuilt from the decomposition of G alone.
Graph d_graph_closed_form(ThetaContext& ctx, const ThetaDecomposition& d);

/// D_{r,theta}(S_theta(G)) rebuilt from the decomposition of G. For
/// r in {-2, -1, 0} this needs mult(theta, G) >= 2 and throws PremiseError
/// otherwise.
Graph d_r_closed_form_on_s(ThetaContext& ctx, const ThetaDecomposition& d, int r);

/// Which placement of (u, v) relative to the components below A a pair-
/// multiplicity prediction used.
enum class PairPlacement {
  CriticalAndRootfree,   // u in some H, v in some Q
  SameRootfree,          // u, v in one Q
  DistinctRootfree,      // u, v in two different Q
  SameCritical,          // u, v in one H
  DistinctCritical,      // u, v in two different H, needs mult >= 2
};

std::string_view to_string(PairPlacement p);

struct PairPrediction {
  int value = 0;
  PairPlacement placement = PairPlacement::SameRootfree;
};

/// Predicted mult(theta, S_theta(G) - u - v) from the decomposition of G and
/// `s_mult` = mult(theta, S_theta(G)). Throws PremiseError when u or v lies
/// in A, or for two distinct critical components while mult(theta, G) < 2.
PairPrediction predicted_pair_mult_in_s(ThetaContext& ctx, const ThetaDecomposition& d,
                                        int s_mult, int u, int v);

/// Predicted mult(theta, G - u - v) for u, v both in root-free components.
/// Throws PremiseError otherwise.
PairPrediction predicted_pair_mult_in_g(ThetaContext& ctx, const ThetaDecomposition& d, int u,
                                        int v);

}  // namespace matchroot
