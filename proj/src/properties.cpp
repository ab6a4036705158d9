#include <algorithm>
#include <functional>
#include <memory>
#include <optional>

#include "matchroot/errors.hpp"
#include "matchroot/operators.hpp"
#include "matchroot/textio.hpp"
#include "matchroot/tuttesets.hpp"
#include "matchroot/verify.hpp"

namespace matchroot {

namespace {

using nlohmann::json;

struct Outcome {
  Status status = Status::Pass;
  json witness;
  json detail;

  static Outcome fail(json w) { return {Status::Fail, std::move(w), json()}; }
  static Outcome premise(std::string why) { return {Status::PremiseSkipped, json{{"reason", why}}, json()}; }
};

json pair_json(int u, int v) { return json::array({u, v}); }

json edges_json(const Graph& g) {
  json out = json::array();
  for (auto [u, v] : g.edges()) out.push_back(pair_json(u, v));
  return out;
}

// Edges of `a` missing from `b` and vice versa, for witnesses.
json graph_diff(const Graph& a, const Graph& b, const char* name_a, const char* name_b) {
  json only_a = json::array();
  json only_b = json::array();
  for (auto [u, v] : a.edges()) {
    if (!b.adjacent(u, v)) only_a.push_back(pair_json(u, v));
  }
  for (auto [u, v] : b.edges()) {
    if (!a.adjacent(u, v)) only_b.push_back(pair_json(u, v));
  }
  return {{std::string("only_in_") + name_a, only_a}, {std::string("only_in_") + name_b, only_b}};
}

json family_json(const std::vector<VertexSet>& f) {
  json out = json::array();
  for (VertexSet s : f) out.push_back(vertex_set_to_json(s));
  return out;
}

// ---------------------------------------------------------------------------
// Graph-level properties.

struct GraphEnv {
  const Graph& g;
  MatchPolyCache& cache;
  const Caps& caps;
};

Outcome prop_oracle(GraphEnv& e) {
  if (e.g.order() > e.caps.oracle) return {Status::CapSkipped, json{{"cap", e.caps.oracle}}, json()};
  const Polynomial rec = e.cache.poly();
  const Polynomial orc = matching_polynomial_oracle(e.g, e.g.vertices(), e.caps.oracle);
  if (rec != orc) {
    return Outcome::fail({{"recurrence", polynomial_to_json(rec)}, {"oracle", polynomial_to_json(orc)}});
  }
  return {};
}

Outcome prop_edge_recurrence(GraphEnv& e) {
  const Polynomial mu = e.cache.poly();
  const VertexSet all = e.g.vertices();
  for (auto [u, v] : e.g.edges()) {
    const Polynomial minus_edge = matching_polynomial(delete_edge(e.g, u, v));
    const Polynomial rhs = minus_edge - e.cache.poly(all.without(u).without(v));
    if (rhs != mu) {
      return Outcome::fail({{"edge", pair_json(u, v)},
                            {"expected", polynomial_to_json(mu)},
                            {"actual", polynomial_to_json(rhs)}});
    }
  }
  return {Status::Pass, json(), json{{"edges", e.g.edge_count()}}};
}

Outcome prop_derivative(GraphEnv& e) {
  const Polynomial lhs = derivative(e.cache.poly());
  Polynomial rhs;
  for (int v : e.g.vertices()) rhs += e.cache.poly(e.g.vertices().without(v));
  if (lhs != rhs) {
    return Outcome::fail({{"derivative", polynomial_to_json(lhs)}, {"vertex_sum", polynomial_to_json(rhs)}});
  }
  return {};
}

Outcome prop_parity(GraphEnv& e) {
  const Polynomial& mu = e.cache.poly();
  const int n = e.g.order();
  if (mu.degree() != n || mu.leading() != 1) {
    return Outcome::fail({{"mu", polynomial_to_json(mu)}, {"reason", "not monic of degree n"}});
  }
  for (int k = 0; k <= n; ++k) {
    const Integer& c = mu.coeff(n - k);
    const int s = sgn(c);
    const bool ok = (k % 2 == 1) ? s == 0 : (s == 0 || s == ((k / 2) % 2 == 0 ? 1 : -1));
    if (!ok) return Outcome::fail({{"mu", polynomial_to_json(mu)}, {"power", n - k}});
  }
  return {};
}

Outcome prop_heilmann_lieb(GraphEnv& e) {
  if (e.g.order() > e.caps.heilmann_lieb) {
    return {Status::CapSkipped, json{{"cap", e.caps.heilmann_lieb}}, json()};
  }
  int pairs = 0;
  for (int u : e.g.vertices()) {
    for (int v : e.g.vertices()) {
      if (v <= u) continue;
      ++pairs;
      if (!heilmann_lieb_check(e.g, u, v, e.caps.heilmann_lieb)) return Outcome::fail({{"pair", pair_json(u, v)}});
    }
  }
  return {Status::Pass, json(), json{{"pairs", pairs}}};
}

// ---------------------------------------------------------------------------
// Properties at a fixed theta.

struct SideGraph {
  std::unique_ptr<MatchPolyCache> cache;
  std::unique_ptr<ThetaContext> ctx;
};

struct ThetaEnv {
  ThetaEnv(const Graph& graph, MatchPolyCache& c, ThetaContext& t, const Caps& k, bool is_probe)
      : g(graph), cache(c), ctx(t), caps(k), probe(is_probe) {}

  const Graph& g;
  MatchPolyCache& cache;
  ThetaContext& ctx;
  const Caps& caps;
  bool probe = false;

  int base() { return ctx.mult(); }
  bool theta_is_zero() const { return ctx.theta().is_zero(); }

  const ThetaDecomposition& dec() {
    if (!dec_) dec_ = decomposition(ctx);
    return *dec_;
  }
  const DGraphBundle& bundle() {
    if (!bundle_) bundle_ = d_graph_bundle(ctx);
    return *bundle_;
  }
  const Graph& s() {
    if (!s_graph_) s_graph_ = s_graph(g, dec());
    return *s_graph_;
  }
  ThetaContext& s_ctx() {
    if (!s_side_.ctx) {
      s_side_.cache = std::make_unique<MatchPolyCache>(s());
      s_side_.ctx = std::make_unique<ThetaContext>(*s_side_.cache, ctx.theta());
    }
    return *s_side_.ctx;
  }
  const Graph& d_direct() {
    if (!d_direct_) d_direct_ = d_graph(ctx);
    return *d_direct_;
  }
  const std::vector<VertexSet>& nice_sets() {
    if (!nice_) nice_ = maximal_nice_sets(ctx);
    return *nice_;
  }

 private:
  std::optional<ThetaDecomposition> dec_;
  std::optional<DGraphBundle> bundle_;
  std::optional<Graph> s_graph_;
  SideGraph s_side_;
  std::optional<Graph> d_direct_;
  std::optional<std::vector<VertexSet>> nice_;
};

json class_json(VertexClass c) { return std::string(to_string(c)); }

Outcome prop_interlacing(ThetaEnv& e) {
  const int base = e.base();
  for (int u : e.g.vertices()) {
    const int m = e.ctx.mult(e.g.vertices().without(u));
    if (m < base - 1 || m > base + 1) {
      return Outcome::fail({{"vertex", u}, {"mult", base}, {"mult_after_delete", m}});
    }
  }
  return {};
}

Outcome prop_root_symmetry(ThetaEnv& e) {
  ThetaContext neg(e.cache, e.ctx.theta().negate());
  const VertexSet all = e.g.vertices();
  if (neg.mult(all) != e.base()) return Outcome::fail({{"mult", e.base()}, {"mult_negated", neg.mult(all)}});
  for (int u : all) {
    if (neg.mult(all.without(u)) != e.ctx.mult(all.without(u))) {
      return Outcome::fail({{"vertex", u},
                            {"mult", e.ctx.mult(all.without(u))},
                            {"mult_negated", neg.mult(all.without(u))}});
    }
  }
  return {};
}

Outcome prop_decomposition_invariants(ThetaEnv& e) {
  const ThetaDecomposition& d = e.dec();
  const VertexSet all = e.g.vertices();
  const bool disjoint = (d.B & d.A).empty() && (d.B & d.N).empty() && (d.B & d.P).empty() &&
                        (d.A & d.N).empty() && (d.A & d.P).empty() && (d.N & d.P).empty();
  if (!disjoint || (d.B | d.A | d.N | d.P) != all) {
    return Outcome::fail({{"reason", "B, A, N, P do not partition V"}, {"decomposition", decomposition_to_json(d)}});
  }
  std::vector<VertexSet> below;
  below.insert(below.end(), d.criticals.begin(), d.criticals.end());
  below.insert(below.end(), d.rootfree.begin(), d.rootfree.end());
  std::sort(below.begin(), below.end(), [](VertexSet a, VertexSet b) { return a.lowest() < b.lowest(); });
  if (below != components(e.g, all - d.A)) {
    return Outcome::fail({{"reason", "components below A mismatch"}});
  }
  VertexSet critical_union;
  for (VertexSet c : d.criticals) {
    if (e.ctx.mult(c) != 1) return Outcome::fail({{"critical", vertex_set_to_json(c)}, {"mult", e.ctx.mult(c)}});
    critical_union = critical_union | c;
  }
  for (VertexSet c : d.rootfree) {
    if (e.ctx.mult(c) != 0) return Outcome::fail({{"rootfree", vertex_set_to_json(c)}, {"mult", e.ctx.mult(c)}});
  }
  if (critical_union != d.B) {
    return Outcome::fail({{"reason", "B differs from the union of critical components"},
                          {"decomposition", decomposition_to_json(d)}});
  }
  if (d.base_mult >= 1 && static_cast<int>(d.criticals.size()) != d.A.size() + d.base_mult) {
    return Outcome::fail({{"reason", "critical count"},
                          {"expected", d.A.size() + d.base_mult},
                          {"actual", d.criticals.size()}});
  }
  return {};
}

Outcome prop_stability(ThetaEnv& e) {
  if (e.base() < 1) return Outcome::premise("theta is not a root");
  const ThetaDecomposition& d = e.dec();
  for (int u : d.A) {
    const ThetaDecomposition du = decomposition(e.ctx, e.g.vertices().without(u));
    if (du.B != d.B || du.P != d.P || du.N != d.N || du.A != d.A.without(u)) {
      return Outcome::fail({{"deleted", u},
                            {"before", decomposition_to_json(d)},
                            {"after", decomposition_to_json(du)}});
    }
  }
  return {Status::Pass, json(), json{{"special_vertices", d.A.size()}}};
}

Outcome prop_gallai(ThetaEnv& e) {
  for (VertexSet c : e.dec().criticals) {
    if (!is_theta_critical(e.ctx, c) || e.ctx.mult(c) != 1) {
      return Outcome::fail({{"component", vertex_set_to_json(c)}, {"mult", e.ctx.mult(c)}});
    }
  }
  return {};
}

Outcome prop_special_positive(ThetaEnv& e) {
  if (e.base() < 1) return Outcome::premise("theta is not a root");
  const ThetaDecomposition& d = e.dec();
  for (int a : d.A) {
    const VertexClass c = d.classes[static_cast<std::size_t>(a)];
    if (c != VertexClass::Positive) return Outcome::fail({{"vertex", a}, {"class", class_json(c)}});
  }
  return {};
}

Outcome prop_essential_neighbor(ThetaEnv& e) {
  const VertexSet all = e.g.vertices();
  for (int u : all) {
    const VertexClass cu = e.dec().classes[static_cast<std::size_t>(u)];
    if (cu == VertexClass::Essential) continue;
    bool has = false;
    for (int w : e.g.neighbors(u)) {
      if (vertex_class(e.ctx, all.without(u), w) == VertexClass::Essential) {
        has = true;
        break;
      }
    }
    if (has != (cu == VertexClass::Positive)) {
      return Outcome::fail({{"vertex", u}, {"class", class_json(cu)}, {"essential_neighbour_after_delete", has}});
    }
  }
  return {};
}

Outcome prop_neutral_neighbor(ThetaEnv& e) {
  if (e.theta_is_zero()) return Outcome::premise("theta is zero");
  const VertexSet all = e.g.vertices();
  for (int u : e.dec().B) {
    bool has = false;
    for (int w : e.g.neighbors(u)) {
      if (vertex_class(e.ctx, all.without(u), w) == VertexClass::Neutral) {
        has = true;
        break;
      }
    }
    if (!has) return Outcome::fail({{"vertex", u}});
  }
  return {};
}

Outcome prop_existence_essential(ThetaEnv& e) {
  if (e.base() < 1) return Outcome::premise("theta is not a root");
  if (e.dec().B.empty()) return Outcome::fail({{"mult", e.base()}, {"reason", "no essential vertex"}});
  return {};
}

Outcome prop_positive_deletion(ThetaEnv& e) {
  const ThetaDecomposition& d = e.dec();
  const VertexSet all = e.g.vertices();
  for (int u : all) {
    if (d.classes[static_cast<std::size_t>(u)] != VertexClass::Positive) continue;
    for (int v : all.without(u)) {
      const VertexClass before = d.classes[static_cast<std::size_t>(v)];
      const VertexClass after = vertex_class(e.ctx, all.without(u), v);
      const bool ok = before == VertexClass::Essential ? after == VertexClass::Essential
                      : before == VertexClass::Neutral ? after != VertexClass::Positive
                                                        : after != VertexClass::Neutral;
      if (!ok) {
        return Outcome::fail({{"deleted", u}, {"vertex", v}, {"before", class_json(before)}, {"after", class_json(after)}});
      }
    }
  }
  return {};
}

Outcome prop_neutral_deletion(ThetaEnv& e) {
  const ThetaDecomposition& d = e.dec();
  const VertexSet all = e.g.vertices();
  for (int u : all) {
    if (d.classes[static_cast<std::size_t>(u)] != VertexClass::Neutral) continue;
    for (int v : all.without(u)) {
      const VertexClass before = d.classes[static_cast<std::size_t>(v)];
      const VertexClass after = vertex_class(e.ctx, all.without(u), v);
      const bool ok = before == VertexClass::Essential ? after == VertexClass::Essential
                                                        : after != VertexClass::Essential;
      if (!ok) {
        return Outcome::fail({{"deleted", u}, {"vertex", v}, {"before", class_json(before)}, {"after", class_json(after)}});
      }
    }
  }
  return {};
}

Outcome prop_dgraph_definition(ThetaEnv& e) {
  const Graph& direct = e.d_direct();
  const Graph& from_bundle = e.bundle().d_theta;
  if (direct != from_bundle) return Outcome::fail(graph_diff(direct, from_bundle, "direct", "shift_union"));
  return {};
}

Outcome prop_dgraph_partition(ThetaEnv& e) {
  const int n = e.g.order();
  std::array<Graph, 5> d{Graph(n), Graph(n), Graph(n), Graph(n), Graph(n)};
  for (int r = -2; r <= 2; ++r) d[static_cast<std::size_t>(r + 2)] = d_r_graph(e.ctx, r);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      int hits = 0;
      for (const Graph& h : d) hits += h.adjacent(u, v) ? 1 : 0;
      if (hits != 1) return Outcome::fail({{"pair", pair_json(u, v)}, {"graphs_containing_pair", hits}});
    }
  }
  return {};
}

Outcome prop_dgraph_symmetry(ThetaEnv& e) {
  ThetaContext neg(e.cache, e.ctx.theta().negate());
  for (int r = -2; r <= 2; ++r) {
    const Graph a = d_r_graph(e.ctx, r);
    const Graph b = d_r_graph(neg, r);
    if (a != b) {
      json w = graph_diff(a, b, "theta", "minus_theta");
      w["r"] = r;
      return Outcome::fail(w);
    }
  }
  return {};
}

Outcome prop_complement(ThetaEnv& e) {
  const Graph lhs = complement(e.d_direct());
  const Graph rhs = union_edges(d_r_graph(e.ctx, 1), d_r_graph(e.ctx, 2));
  if (lhs != rhs) return Outcome::fail(graph_diff(lhs, rhs, "complement", "g_plus"));
  return {};
}

Outcome prop_shift_special_cases(ThetaEnv& e) {
  const DGraphBundle& b = e.bundle();
  json checked = json::array();
  auto expect_empty = [&](int r) -> std::optional<Outcome> {
    checked.push_back(r);
    if (b.d(r).edge_count() != 0) return Outcome::fail({{"r", r}, {"edges", edges_json(b.d(r))}});
    return std::nullopt;
  };
  if (e.theta_is_zero()) {
    if (auto f = expect_empty(-1)) return *f;
    if (auto f = expect_empty(1)) return *f;
  }
  if (e.base() <= 1) {
    if (auto f = expect_empty(-2)) return *f;
  }
  if (e.base() == 0) {
    if (auto f = expect_empty(-1)) return *f;
  }
  if (checked.empty()) return Outcome::premise("theta nonzero and mult >= 2");
  return {Status::Pass, json(), json{{"shifts_checked", checked}}};
}

Outcome prop_s_decomposition(ThetaEnv& e) {
  ThetaContext& sc = e.s_ctx();
  const ThetaDecomposition ds = decomposition(sc);
  if (sc.mult() != e.base() || !ds.same_structure(e.dec())) {
    return Outcome::fail({{"g", decomposition_to_json(e.dec())}, {"s", decomposition_to_json(ds)}});
  }
  return {};
}

Outcome prop_s_dgraph(ThetaEnv& e) {
  const Graph ds = d_graph(e.s_ctx());
  if (ds != e.d_direct()) return Outcome::fail(graph_diff(e.d_direct(), ds, "g", "s"));
  return {};
}

Outcome prop_edge_addition(ThetaEnv& e) {
  const ThetaDecomposition& d = e.dec();
  int added = 0;
  for (int u : d.A) {
    for (int v : e.g.vertices().without(u)) {
      if (e.g.adjacent(u, v)) continue;
      MatchPolyCache c2(add_edge(e.g, u, v));
      ThetaContext t2(c2, e.ctx.theta());
      const ThetaDecomposition d2 = decomposition(t2);
      ++added;
      if (d2.B != d.B || d2.A != d.A || d2.N != d.N || d2.P != d.P || d2.base_mult != d.base_mult) {
        return Outcome::fail({{"added_edge", pair_json(u, v)},
                              {"before", decomposition_to_json(d)},
                              {"after", decomposition_to_json(d2)}});
      }
    }
  }
  return {Status::Pass, json(), json{{"edges_added", added}}};
}

Outcome prop_coarse_bounds(ThetaEnv& e) {
  const ThetaDecomposition& d = e.dec();
  const int base = e.base();
  const VertexSet all = e.g.vertices();
  for (int u : all) {
    for (int v : all.without(u)) {
      const int m = e.ctx.mult(all.without(u).without(v));
      int lo = base - 2;
      int hi = base + 2;
      if (d.B.contains(u)) {
        hi = base;
      } else if (d.A.contains(u)) {
        lo = hi = d.N.contains(v) ? base + 1 : d.B.contains(v) ? base : base + 2;
      } else if (d.P.contains(u)) {
        lo = base;
      } else {
        lo = base - 1;
        hi = base + 1;
      }
      if (m < lo || m > hi) {
        return Outcome::fail({{"pair", pair_json(u, v)}, {"mult", m}, {"allowed", json::array({lo, hi})}});
      }
    }
  }
  return {};
}

Outcome closed_form_on_s(ThetaEnv& e, int r) {
  if (r <= 0 && e.base() < 2) return Outcome::premise("needs mult >= 2");
  const Graph predicted = d_r_closed_form_on_s(e.ctx, e.dec(), r);
  const Graph direct = d_r_graph(e.s_ctx(), r);
  if (predicted != direct) {
    json w = graph_diff(predicted, direct, "closed_form", "direct");
    w["r"] = r;
    return Outcome::fail(w);
  }
  return {Status::Pass, json(), json{{"edges", direct.edge_count()}}};
}

Outcome prop_closed_dgraph(ThetaEnv& e) {
  const Graph predicted = d_graph_closed_form(e.ctx, e.dec());
  if (predicted != e.d_direct()) {
    Outcome o = Outcome::fail(graph_diff(predicted, e.d_direct(), "closed_form", "direct"));
    if (e.base() <= 1) o.status = Status::Flagged;
    return o;
  }
  return {};
}

Outcome prop_pair_mult_in_s(ThetaEnv& e) {
  const ThetaDecomposition& d = e.dec();
  ThetaContext& sc = e.s_ctx();
  const int s_mult = sc.mult();
  const VertexSet all = e.g.vertices();
  int checked = 0;
  int premise_skipped = 0;
  int not_covered = 0;
  for (int u : all) {
    for (int v : all) {
      if (v <= u) continue;
      if (d.A.contains(u) || d.A.contains(v)) {
        ++not_covered;
        continue;
      }
      PairPrediction p;
      try {
        p = predicted_pair_mult_in_s(e.ctx, d, s_mult, u, v);
      } catch (const PremiseError&) {
        ++premise_skipped;
        continue;
      }
      ++checked;
      const int actual = sc.mult(all.without(u).without(v));
      if (actual != p.value) {
        return Outcome::fail({{"pair", pair_json(u, v)},
                              {"placement", std::string(to_string(p.placement))},
                              {"expected", p.value},
                              {"actual", actual}});
      }
    }
  }
  return {Status::Pass, json(),
          json{{"checked", checked}, {"premise_skipped", premise_skipped}, {"touching_special", not_covered}}};
}

Outcome prop_pair_mult_in_g(ThetaEnv& e) {
  const ThetaDecomposition& d = e.dec();
  const VertexSet rootfree = e.g.vertices() - d.A - d.B;
  int checked = 0;
  for (int u : rootfree) {
    for (int v : rootfree) {
      if (v <= u) continue;
      const PairPrediction p = predicted_pair_mult_in_g(e.ctx, d, u, v);
      const int actual = e.ctx.mult(e.g.vertices().without(u).without(v));
      ++checked;
      if (actual != p.value) {
        return Outcome::fail({{"pair", pair_json(u, v)},
                              {"placement", std::string(to_string(p.placement))},
                              {"expected", p.value},
                              {"actual", actual}});
      }
    }
  }
  return {Status::Pass, json(), json{{"checked", checked}}};
}

Outcome prop_triple(ThetaEnv& e) {
  if (e.g.order() > e.caps.subsets) return {Status::CapSkipped, json{{"cap", e.caps.subsets}}, json()};
  const auto& nice = e.nice_sets();
  const auto extreme = maximal_extreme_sets_bruteforce(e.ctx, e.caps.subsets);
  const auto tutte = maximal_tutte_sets_bruteforce(e.ctx, e.caps.subsets);
  if (nice != extreme || nice != tutte) {
    return Outcome::fail({{"nice", family_json(nice)}, {"extreme", family_json(extreme)}, {"tutte", family_json(tutte)}});
  }
  return {Status::Pass, json(), json{{"maximal_sets", nice.size()}}};
}

template <typename Fn>
Outcome over_subsets(ThetaEnv& e, int cap, int min_size, Fn fn) {
  const int n = e.g.order();
  if (n > cap) return {Status::CapSkipped, json{{"cap", cap}}, json()};
  int checked = 0;
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
    const VertexSet x(m);
    if (x.size() < min_size) continue;
    ++checked;
    if (auto w = fn(x)) return Outcome::fail(*w);
  }
  return {Status::Pass, json(), json{{"subsets", checked}}};
}

Outcome prop_nice_iff_extreme(ThetaEnv& e) {
  return over_subsets(e, e.caps.nice_vs_extreme, 2, [&](VertexSet x) -> std::optional<json> {
    const bool nice = is_nice(e.ctx, x);
    const bool extreme = is_extreme(e.ctx, x);
    if (nice != extreme) return json{{"set", vertex_set_to_json(x)}, {"nice", nice}, {"extreme", extreme}};
    return std::nullopt;
  });
}

Outcome prop_extreme_implies_nice(ThetaEnv& e) {
  return over_subsets(e, e.caps.nice_vs_extreme, 2, [&](VertexSet x) -> std::optional<json> {
    if (is_extreme(e.ctx, x) && !is_nice(e.ctx, x)) return json{{"set", vertex_set_to_json(x)}};
    return std::nullopt;
  });
}

Outcome prop_tutte_implies_extreme(ThetaEnv& e) {
  return over_subsets(e, e.caps.nice_vs_extreme, 1, [&](VertexSet x) -> std::optional<json> {
    if (is_tutte(e.ctx, x) && !is_extreme(e.ctx, x)) return json{{"set", vertex_set_to_json(x)}};
    return std::nullopt;
  });
}

Outcome prop_all_positive(ThetaEnv& e) {
  VertexSet positive;
  for (int v : e.g.vertices()) {
    if (e.dec().classes[static_cast<std::size_t>(v)] == VertexClass::Positive) positive = positive.with(v);
  }
  if (positive.size() > e.caps.subsets) return {Status::CapSkipped, json{{"cap", e.caps.subsets}}, json()};
  const auto members = positive.members();
  const int base = e.base();
  int checked = 0;
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << members.size()); ++m) {
    VertexSet x;
    for (std::size_t i = 0; i < members.size(); ++i) {
      if ((m >> i) & 1U) x = x.with(members[i]);
    }
    const int k = x.size();
    const int got = e.ctx.mult(e.g.vertices() - x);
    ++checked;
    if (got != base + k && got > base + k - 2) {
      return Outcome::fail({{"set", vertex_set_to_json(x)}, {"mult", base}, {"mult_after_delete", got}});
    }
  }
  return {Status::Pass, json(), json{{"subsets", checked}}};
}

template <typename Fn>
Outcome over_paths(ThetaEnv& e, Fn fn) {
  if (e.g.order() > e.caps.paths) return {Status::CapSkipped, json{{"cap", e.caps.paths}}, json()};
  const VertexSet all = e.g.vertices();
  std::optional<json> failure;
  long paths = 0;
  for (int u : all) {
    for (int v : all) {
      if (v <= u || failure) continue;
      for_each_path(e.g, all, u, v, [&](const std::vector<int>& p) {
        if (failure) return;
        ++paths;
        VertexSet rest = all;
        for (int w : p) rest = rest.without(w);
        failure = fn(p, e.ctx.mult(rest));
      });
    }
  }
  if (failure) return Outcome::fail(*failure);
  return {Status::Pass, json(), json{{"paths", paths}}};
}

Outcome prop_path_interlacing(ThetaEnv& e) {
  const int base = e.base();
  return over_paths(e, [&](const std::vector<int>& p, int m) -> std::optional<json> {
    if (m < base - 1) return json{{"path", p}, {"mult", base}, {"mult_after_delete", m}};
    return std::nullopt;
  });
}

Outcome prop_essential_path(ThetaEnv& e) {
  const int base = e.base();
  const auto& classes = e.dec().classes;
  return over_paths(e, [&](const std::vector<int>& p, int m) -> std::optional<json> {
    if (m != base - 1) return std::nullopt;
    const VertexClass a = classes[static_cast<std::size_t>(p.front())];
    const VertexClass b = classes[static_cast<std::size_t>(p.back())];
    if (a != VertexClass::Essential || b != VertexClass::Essential) {
      return json{{"path", p}, {"ends", json::array({class_json(a), class_json(b)})}};
    }
    return std::nullopt;
  });
}

Outcome prop_path_criterion(ThetaEnv& e) {
  if (e.g.order() > e.caps.paths) return {Status::CapSkipped, json{{"cap", e.caps.paths}}, json()};
  const auto& classes = e.dec().classes;
  const VertexSet all = e.g.vertices();
  const int base = e.base();
  int checked = 0;
  for (int u : all) {
    for (int v : all) {
      if (v <= u || classes[static_cast<std::size_t>(u)] != VertexClass::Positive ||
          classes[static_cast<std::size_t>(v)] != VertexClass::Positive) {
        continue;
      }
      ++checked;
      const bool by_paths = path_criterion(e.ctx, u, v, e.caps.paths);
      const bool by_pair = e.ctx.mult(all.without(u).without(v)) <= base;
      if (by_paths != by_pair) {
        return Outcome::fail({{"pair", pair_json(u, v)}, {"path_exists", by_paths}, {"pair_not_positive", by_pair}});
      }
    }
  }
  return {Status::Pass, json(), json{{"pairs", checked}}};
}

Outcome prop_nice_matching(ThetaEnv& e) {
  int sets = 0;
  for (VertexSet x : e.nice_sets()) {
    NiceMatchingResult r;
    try {
      r = nice_matching(e.ctx, x);
    } catch (const InvariantBreach& err) {
      return Outcome::fail({{"set", vertex_set_to_json(x)}, {"error", err.what()}});
    }
    ++sets;
    json pairs = json::array();
    for (auto [a, b] : r.pairs) pairs.push_back(pair_json(a, b));
    if (!r.is_matching(e.g)) return Outcome::fail({{"set", vertex_set_to_json(x)}, {"pairs", pairs}, {"reason", "not a matching"}});
    if (!r.y_independent(e.g)) return Outcome::fail({{"set", vertex_set_to_json(x)}, {"pairs", pairs}, {"reason", "Y not independent"}});
    for (const auto& c : r.certificates) {
      if (c.mult != r.base_mult || !c.residual_nice) {
        return Outcome::fail({{"set", vertex_set_to_json(x)},
                              {"pairs", pairs},
                              {"removed", vertex_set_to_json(c.removed)},
                              {"expected_mult", r.base_mult},
                              {"actual_mult", c.mult},
                              {"residual_nice", c.residual_nice}});
      }
    }
  }
  return {Status::Pass, json(), json{{"sets", sets}}};
}

Outcome prop_embedding(ThetaEnv& e) {
  int sets = 0;
  for (VertexSet x : e.nice_sets()) {
    const NiceMatchingResult r = nice_matching(e.ctx, x);
    std::pair<int, int> bad{-1, -1};
    ++sets;
    if (!embed_check(e.g, e.d_direct(), r, &bad)) {
      return Outcome::fail({{"set", vertex_set_to_json(x)}, {"edge", pair_json(bad.first, bad.second)}});
    }
  }
  return {Status::Pass, json(), json{{"sets", sets}}};
}

// The statement itself: some copy of G[X u Y] sits inside D_theta, whether or
// not the swap map is one.
Outcome prop_embedding_copy(ThetaEnv& e) {
  int sets = 0;
  int swap_misses = 0;
  for (VertexSet x : e.nice_sets()) {
    const NiceMatchingResult r = nice_matching(e.ctx, x);
    ++sets;
    if (!embed_check(e.g, e.d_direct(), r)) ++swap_misses;
    if (!subgraph_copy(e.g, r.X | r.Y, e.d_direct())) {
      return Outcome::fail({{"set", vertex_set_to_json(x)}, {"Y", vertex_set_to_json(r.Y)}});
    }
  }
  return {Status::Pass, json(), json{{"sets", sets}, {"swap_map_misses", swap_misses}}};
}

// ---------------------------------------------------------------------------
// Registry.

struct GraphProperty {
  std::string name;
  std::function<Outcome(GraphEnv&)> run;
};

struct ThetaProperty {
  std::string name;
  bool on_probe;
  std::function<Outcome(ThetaEnv&)> run;
};

const std::vector<GraphProperty>& graph_properties() {
  static const std::vector<GraphProperty> props = {
      {"oracle-equivalence", prop_oracle},
      {"edge-recurrence", prop_edge_recurrence},
      {"derivative-identity", prop_derivative},
      {"coefficient-parity", prop_parity},
      {"heilmann-lieb", prop_heilmann_lieb},
  };
  return props;
}

const std::vector<ThetaProperty>& theta_properties() {
  static const std::vector<ThetaProperty> props = {
      {"interlacing", true, prop_interlacing},
      {"root-symmetry", false, prop_root_symmetry},
      {"decomposition-invariants", false, prop_decomposition_invariants},
      {"theta-stability", false, prop_stability},
      {"gallai-critical", false, prop_gallai},
      {"special-positive", false, prop_special_positive},
      {"essential-neighbor", false, prop_essential_neighbor},
      {"neutral-neighbor", false, prop_neutral_neighbor},
      {"existence-essential", false, prop_existence_essential},
      {"positive-deletion-classes", false, prop_positive_deletion},
      {"neutral-deletion-classes", false, prop_neutral_deletion},
      {"dgraph-definition", true, prop_dgraph_definition},
      {"dgraph-partition", false, prop_dgraph_partition},
      {"dgraph-symmetry", false, prop_dgraph_symmetry},
      {"complement-gplus", false, prop_complement},
      {"shift-special-cases", false, prop_shift_special_cases},
      {"s-decomposition-stability", false, prop_s_decomposition},
      {"s-dgraph-stability", false, prop_s_dgraph},
      {"edge-addition-stability", false, prop_edge_addition},
      {"coarse-pair-bounds", false, prop_coarse_bounds},
      {"closed-form-minus2", false, [](ThetaEnv& e) { return closed_form_on_s(e, -2); }},
      {"closed-form-minus1", false, [](ThetaEnv& e) { return closed_form_on_s(e, -1); }},
      {"closed-form-zero", false, [](ThetaEnv& e) { return closed_form_on_s(e, 0); }},
      {"closed-form-plus1", false, [](ThetaEnv& e) { return closed_form_on_s(e, 1); }},
      {"closed-form-plus2", false, [](ThetaEnv& e) { return closed_form_on_s(e, 2); }},
      {"closed-form-dgraph", false, prop_closed_dgraph},
      {"pair-mult-in-s", false, prop_pair_mult_in_s},
      {"pair-mult-in-g", false, prop_pair_mult_in_g},
      {"triple-equivalence", false, prop_triple},
      {"nice-iff-extreme", false, prop_nice_iff_extreme},
      {"extreme-implies-nice", false, prop_extreme_implies_nice},
      {"tutte-implies-extreme", false, prop_tutte_implies_extreme},
      {"all-positive-dichotomy", false, prop_all_positive},
      {"path-interlacing", false, prop_path_interlacing},
      {"essential-path-endpoints", false, prop_essential_path},
      {"path-criterion", false, prop_path_criterion},
      {"nice-matching", false, prop_nice_matching},
      {"embedding", false, prop_embedding},
      {"embedding-copy", false, prop_embedding_copy},
  };
  return props;
}

bool selected(const SuiteOptions& opts, const std::string& name) {
  return opts.properties.empty() ||
         std::find(opts.properties.begin(), opts.properties.end(), name) != opts.properties.end();
}

template <typename Env>
Outcome guarded(const std::function<Outcome(Env&)>& fn, Env& env) {
  try {
    return fn(env);
  } catch (const CapExceeded& err) {
    return {Status::CapSkipped, json{{"reason", err.what()}}, json()};
  } catch (const std::exception& err) {
    return Outcome::fail({{"exception", err.what()}});
  }
}

PropertyReport make_report(const std::string& g6, const json& theta, std::string role,
                           const std::string& name, Outcome o) {
  return {g6, theta, std::move(role), name, o.status, std::move(o.witness), std::move(o.detail)};
}

}  // namespace

const std::vector<std::string>& property_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& p : graph_properties()) out.push_back(p.name);
    for (const auto& p : theta_properties()) out.push_back(p.name);
    return out;
  }();
  return names;
}

Rational probe_theta(const Polynomial& p) {
  long k = 3;
  while (sign_at(p, Rational(k)) == 0) ++k;
  return Rational(k);
}

std::vector<PropertyReport> run_on_graph(const Graph& g, const SuiteOptions& opts) {
  for (const auto& name : opts.properties) {
    const auto& all = property_names();
    if (std::find(all.begin(), all.end(), name) == all.end()) {
      throw ContractError("unknown property '" + name + "'");
    }
  }
  std::vector<PropertyReport> out;
  const std::string g6 = to_graph6(g);
  MatchPolyCache cache(g);
  GraphEnv genv{g, cache, opts.caps};
  for (const auto& p : graph_properties()) {
    if (selected(opts, p.name)) out.push_back(make_report(g6, json(), "", p.name, guarded(p.run, genv)));
  }

  std::vector<std::pair<AlgebraicNumber, bool>> thetas;
  for (auto& t : theta_candidates(cache)) thetas.emplace_back(std::move(t), false);
  thetas.emplace_back(AlgebraicNumber::from_rational(probe_theta(cache.poly())), true);

  for (const auto& [theta, probe] : thetas) {
    ThetaContext ctx(cache, theta);
    ThetaEnv env{g, cache, ctx, opts.caps, probe};
    const json tj = theta_to_json(theta);
    const std::string role = probe ? "probe" : "root";
    for (const auto& p : theta_properties()) {
      if (probe && !p.on_probe) continue;
      if (selected(opts, p.name)) out.push_back(make_report(g6, tj, role, p.name, guarded(p.run, env)));
    }
  }
  return out;
}

std::vector<PropertyReport> run_suite(const std::vector<Graph>& corpus, const SuiteOptions& opts) {
  std::vector<PropertyReport> out;
  for (const Graph& g : corpus) {
    auto part = run_on_graph(g, opts);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

std::vector<PropertyReport> explore_iterated_d(const std::vector<Graph>& corpus, int depth) {
  if (depth < 2) throw ContractError("explore depth must be at least 2");
  std::vector<PropertyReport> out;
  for (const Graph& g : corpus) {
    MatchPolyCache cache(g);
    for (const AlgebraicNumber& theta : theta_candidates(cache)) {
      std::vector<Graph> chain{g};
      for (int k = 1; k <= depth; ++k) {
        MatchPolyCache c(chain.back());
        ThetaContext t(c, theta);
        chain.push_back(d_graph(t));
      }
      int stable_at = -1;
      for (int k = 1; k + 1 < static_cast<int>(chain.size()); ++k) {
        if (chain[static_cast<std::size_t>(k)] == chain[static_cast<std::size_t>(k + 1)]) {
          stable_at = k;
          break;
        }
      }
      json iterates = json::array();
      for (std::size_t k = 1; k < chain.size(); ++k) iterates.push_back(to_graph6(chain[k]));
      const bool converged = chain[chain.size() - 1] == chain[chain.size() - 2];
      PropertyReport r{to_graph6(g), theta_to_json(theta), "root", "iterated-dgraph",
                       converged ? Status::Pass : Status::Fail, json(),
                       json{{"theta_policy", "fixed"}, {"iterates", iterates}, {"first_fixed_index", stable_at}}};
      if (!converged) r.witness = json{{"last", iterates.back()}, {"previous", iterates[iterates.size() - 2]}};
      out.push_back(std::move(r));
    }
  }
  return out;
}

}  // namespace matchroot
