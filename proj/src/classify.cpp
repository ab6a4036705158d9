#include "matchroot/classify.hpp"

#include "matchroot/errors.hpp"

namespace matchroot {

std::string_view to_string(VertexClass c) {
  switch (c) {
    case VertexClass::Essential:
      return "essential";
    case VertexClass::Neutral:
      return "neutral";
    case VertexClass::Positive:
      return "positive";
  }
  return "?";
}

VertexClass vertex_class(ThetaContext& ctx, VertexSet live, int v) {
  if (!live.contains(v)) throw ContractError("vertex_class: vertex " + std::to_string(v) + " is not live");
  const int delta = ctx.mult(live.without(v)) - ctx.mult(live);
  switch (delta) {
    case -1:
      return VertexClass::Essential;
    case 0:
      return VertexClass::Neutral;
    case 1:
      return VertexClass::Positive;
    default:
      throw InvariantBreach("interlacing violated at vertex " + std::to_string(v) + ": shift " +
                            std::to_string(delta));
  }
}

bool ThetaDecomposition::same_structure(const ThetaDecomposition& o) const {
  return B == o.B && A == o.A && N == o.N && P == o.P && criticals == o.criticals &&
         rootfree == o.rootfree && base_mult == o.base_mult;
}

VertexSet ThetaDecomposition::component_of(int v) const {
  for (VertexSet c : criticals) {
    if (c.contains(v)) return c;
  }
  for (VertexSet c : rootfree) {
    if (c.contains(v)) return c;
  }
  return VertexSet{};
}

bool ThetaDecomposition::in_critical(int v) const {
  for (VertexSet c : criticals) {
    if (c.contains(v)) return true;
  }
  return false;
}

ThetaDecomposition decomposition(ThetaContext& ctx, VertexSet live) {
  const Graph& g = ctx.graph();
  ThetaDecomposition d;
  d.live = live;
  d.base_mult = ctx.mult(live);
  d.classes.assign(static_cast<std::size_t>(g.order()), VertexClass::Neutral);
  VertexSet positive;
  for (int v : live) {
    const VertexClass c = vertex_class(ctx, live, v);
    d.classes[static_cast<std::size_t>(v)] = c;
    if (c == VertexClass::Essential) d.B = d.B.with(v);
    if (c == VertexClass::Positive) positive = positive.with(v);
  }
  if (d.base_mult > 0) {
    for (int v : live - d.B) {
      if (!(g.neighbors(v) & d.B).empty()) d.A = d.A.with(v);
    }
  }
  d.P = positive - d.A;
  d.N = live - d.B - d.A - positive;
  for (VertexSet c : components(g, live - d.A)) {
    if (ctx.mult(c) > 0) {
      d.criticals.push_back(c);
    } else {
      d.rootfree.push_back(c);
    }
  }
  return d;
}

bool is_theta_critical(ThetaContext& ctx, VertexSet component) {
  if (component.empty() || !is_connected(ctx.graph(), component)) {
    throw ContractError("is_theta_critical: input is not a connected component");
  }
  for (int v : component) {
    if (vertex_class(ctx, component, v) != VertexClass::Essential) return false;
  }
  return true;
}

int c_theta(ThetaContext& ctx, VertexSet live) {
  int count = 0;
  for (VertexSet c : components(ctx.graph(), live)) {
    if (is_theta_critical(ctx, c)) ++count;
  }
  return count;
}

}  // namespace matchroot
