#include "matchroot/operators.hpp"

#include "matchroot/errors.hpp"

namespace matchroot {

namespace {

void check_shift(int r) {
  if (r < -2 || r > 2) throw ContractError("shift r must lie in -2..2, got " + std::to_string(r));
}

// Where a vertex sits below A: the component and whether it is critical.
struct Placement {
  VertexSet component;
  bool critical = false;
  bool special = false;
};

Placement place(const ThetaDecomposition& d, int v) {
  if (d.A.contains(v)) return {VertexSet{}, false, true};
  for (VertexSet c : d.criticals) {
    if (c.contains(v)) return {c, true, false};
  }
  for (VertexSet c : d.rootfree) {
    if (c.contains(v)) return {c, false, false};
  }
  throw ContractError("vertex " + std::to_string(v) + " is outside the decomposition");
}

int pair_shift_in(ThetaContext& ctx, VertexSet comp, int u, int v) {
  return ctx.mult(comp.without(u).without(v)) - ctx.mult(comp);
}

}  // namespace

Graph d_r_graph(ThetaContext& ctx, int r, VertexSet live) {
  check_shift(r);
  const int base = ctx.mult(live);
  Graph out(ctx.graph().order());
  for (int u : live) {
    for (int v : live) {
      if (v <= u) continue;
      if (ctx.mult(live.without(u).without(v)) == base + r) out.add_edge(u, v);
    }
  }
  return out;
}

DGraphBundle d_graph_bundle(ThetaContext& ctx, VertexSet live) {
  const int n = ctx.graph().order();
  DGraphBundle b{{Graph(n), Graph(n), Graph(n), Graph(n), Graph(n)}, Graph(n), Graph(n)};
  const int base = ctx.mult(live);
  for (int u : live) {
    for (int v : live) {
      if (v <= u) continue;
      const int r = ctx.mult(live.without(u).without(v)) - base;
      if (r < -2 || r > 2) {
        throw InvariantBreach("pair (" + std::to_string(u) + ", " + std::to_string(v) +
                              ") shifts mult by " + std::to_string(r));
      }
      b.by_shift[static_cast<std::size_t>(r + 2)].add_edge(u, v);
      (r <= 0 ? b.d_theta : b.g_plus).add_edge(u, v);
    }
  }
  return b;
}

Graph d_graph(ThetaContext& ctx, VertexSet live) {
  const int base = ctx.mult(live);
  Graph out(ctx.graph().order());
  for (int u : live) {
    for (int v : live) {
      if (v > u && ctx.mult(live.without(u).without(v)) <= base) out.add_edge(u, v);
    }
  }
  return out;
}

Graph s_graph(const Graph& g, const ThetaDecomposition& d) {
  Graph s = g;
  for (int a : d.A) {
    for (int v : d.live) {
      if (v != a && !s.adjacent(a, v)) s.add_edge(a, v);
    }
  }
  return s;
}

Graph s_graph(ThetaContext& ctx) { return s_graph(ctx.graph(), decomposition(ctx)); }

Graph d_graph_closed_form(ThetaContext& ctx, const ThetaDecomposition& d) {
  Graph out(ctx.graph().order());
  for (int u : d.live) {
    for (int v : d.live) {
      if (v <= u) continue;
      bool edge = d.B.contains(u) || d.B.contains(v);
      if (!edge && !d.A.contains(u) && !d.A.contains(v)) {
        const VertexSet cu = d.component_of(u);
        const VertexSet cv = d.component_of(v);
        if (cu == cv) {
          edge = pair_shift_in(ctx, cu, u, v) == 0;
        } else {
          edge = d.N.contains(u) && d.N.contains(v);
        }
      }
      if (edge) out.add_edge(u, v);
    }
  }
  return out;
}

Graph d_r_closed_form_on_s(ThetaContext& ctx, const ThetaDecomposition& d, int r) {
  check_shift(r);
  if (r <= 0 && d.base_mult < 2) {
    throw PremiseError("closed form for shift " + std::to_string(r) + " needs mult >= 2, have " +
                       std::to_string(d.base_mult));
  }
  const VertexSet& A = d.A;
  const VertexSet& B = d.B;
  const VertexSet& N = d.N;
  const VertexSet& P = d.P;
  auto holds = [&](int u, int v) {
    const Placement pu = place(d, u);
    const Placement pv = place(d, v);
    const bool same = !pu.special && pu.component == pv.component;
    const bool both_rootfree = !pu.special && !pv.special && !pu.critical && !pv.critical;
    const bool both_critical = pu.critical && pv.critical;
    switch (r) {
      case -2:
        return both_critical && !same;
      case -1:
        return (N.contains(u) && B.contains(v)) ||
               (both_critical && same && pair_shift_in(ctx, pu.component, u, v) == -1);
      case 0:
        return ((P.contains(u) || A.contains(u)) && B.contains(v)) ||
               (N.contains(u) && N.contains(v) && both_rootfree && !same) ||
               (both_critical && same && pair_shift_in(ctx, pu.component, u, v) == 0) ||
               (both_rootfree && same && pair_shift_in(ctx, pu.component, u, v) == 0);
      case 1:
        return (A.contains(u) && N.contains(v)) ||
               (P.contains(u) && N.contains(v) && both_rootfree && !same) ||
               (both_rootfree && same && pair_shift_in(ctx, pu.component, u, v) == 1);
      default:
        return (A.contains(u) && A.contains(v)) || (A.contains(u) && P.contains(v)) ||
               (P.contains(u) && P.contains(v) && both_rootfree && !same) ||
               (both_rootfree && same && pair_shift_in(ctx, pu.component, u, v) == 2);
    }
  };
  Graph out(ctx.graph().order());
  for (int u : d.live) {
    for (int v : d.live) {
      if (v > u && (holds(u, v) || holds(v, u))) out.add_edge(u, v);
    }
  }
  return out;
}

std::string_view to_string(PairPlacement p) {
  switch (p) {
    case PairPlacement::CriticalAndRootfree:
      return "critical-and-rootfree";
    case PairPlacement::SameRootfree:
      return "same-rootfree";
    case PairPlacement::DistinctRootfree:
      return "distinct-rootfree";
    case PairPlacement::SameCritical:
      return "same-critical";
    case PairPlacement::DistinctCritical:
      return "distinct-critical";
  }
  return "?";
}

PairPrediction predicted_pair_mult_in_s(ThetaContext& ctx, const ThetaDecomposition& d,
                                        int s_mult, int u, int v) {
  if (u == v) throw ContractError("pair prediction needs distinct vertices");
  Placement pu = place(d, u);
  Placement pv = place(d, v);
  if (pu.special || pv.special) throw PremiseError("pair touches a special vertex");
  if (pu.critical && !pv.critical) {
    return {s_mult - 1 + ctx.mult(pv.component.without(v)), PairPlacement::CriticalAndRootfree};
  }
  if (!pu.critical && pv.critical) {
    return {s_mult - 1 + ctx.mult(pu.component.without(u)), PairPlacement::CriticalAndRootfree};
  }
  const bool same = pu.component == pv.component;
  if (!pu.critical) {
    if (same) {
      return {s_mult + ctx.mult(pu.component.without(u).without(v)), PairPlacement::SameRootfree};
    }
    return {s_mult + ctx.mult(pu.component.without(u)) + ctx.mult(pv.component.without(v)),
            PairPlacement::DistinctRootfree};
  }
  if (same) {
    return {s_mult - 1 + ctx.mult(pu.component.without(u).without(v)),
            PairPlacement::SameCritical};
  }
  if (d.base_mult < 2) throw PremiseError("distinct critical components need mult >= 2");
  return {s_mult - 2, PairPlacement::DistinctCritical};
}

PairPrediction predicted_pair_mult_in_g(ThetaContext& ctx, const ThetaDecomposition& d, int u,
                                        int v) {
  if (u == v) throw ContractError("pair prediction needs distinct vertices");
  const Placement pu = place(d, u);
  const Placement pv = place(d, v);
  if (pu.special || pv.special || pu.critical || pv.critical) {
    throw PremiseError("prediction in G covers root-free components only");
  }
  if (pu.component == pv.component) {
    return {d.base_mult + ctx.mult(pu.component.without(u).without(v)),
            PairPlacement::SameRootfree};
  }
  return {d.base_mult + ctx.mult(pu.component.without(u)) + ctx.mult(pv.component.without(v)),
          PairPlacement::DistinctRootfree};
}

}  // namespace matchroot
