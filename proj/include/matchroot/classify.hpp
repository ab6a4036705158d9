#pragma once

#include <string_view>
#include <vector>

#include "matchroot/matchpoly.hpp"

namespace matchroot {

enum class VertexClass { Essential, Neutral, Positive };

std::string_view to_string(VertexClass c);

/// Class of v in G[live]: how mult(theta, .) moves when v is deleted.
VertexClass vertex_class(ThetaContext& ctx, VertexSet live, int v);
inline VertexClass vertex_class(ThetaContext& ctx, int v) {
  return vertex_class(ctx, ctx.graph().vertices(), v);
}

struct ThetaDecomposition {
  VertexSet live;
  VertexSet B;
  VertexSet A;
  VertexSet N;
  VertexSet P;
  std::vector<VertexSet> criticals;
  std::vector<VertexSet> rootfree;
  int base_mult = 0;
  /// Base class of every vertex, indexed by root-graph vertex; entries
  /// outside `live` are Neutral and meaningless.
  std::vector<VertexClass> classes;

  /// Same partition and same components; `classes` and `live` are ignored.
  bool same_structure(const ThetaDecomposition& o) const;

  /// The component of G[live] - A containing v, or an empty set for v in A.
  VertexSet component_of(int v) const;
  bool in_critical(int v) const;
};

ThetaDecomposition decomposition(ThetaContext& ctx, VertexSet live);
inline ThetaDecomposition decomposition(ThetaContext& ctx) {
  return decomposition(ctx, ctx.graph().vertices());
}

/// Every vertex of the connected component is essential within it. Throws
/// ContractError when `component` does not induce a connected subgraph.
bool is_theta_critical(ThetaContext& ctx, VertexSet component);

/// Number of theta-critical components of G[live].
int c_theta(ThetaContext& ctx, VertexSet live);

}  // namespace matchroot
