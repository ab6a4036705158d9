#include <doctest.h>

#include "matchroot/errors.hpp"
#include "matchroot/operators.hpp"
#include "matchroot/verify.hpp"
#include "support.hpp"

using namespace matchroot;
using namespace testing_support;

namespace {

AlgebraicNumber rat(long p) { return AlgebraicNumber::from_rational(p); }

// D_{r,theta} straight from enumerated matching polynomials.
Graph d_r_oracle(const Graph& g, const AlgebraicNumber& t, int r) {
  const VertexSet all = g.vertices();
  const int base = root_multiplicity(t, matching_polynomial_oracle(g, all));
  Graph out(g.order());
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      const int m = root_multiplicity(t, matching_polynomial_oracle(g, all.without(u).without(v)));
      if (m == base + r) out.add_edge(u, v);
    }
  }
  return out;
}

std::vector<Graph> small_corpus() {
  auto out = generate_random_graphs(2, 8, make_rational(2, 5), 4242, 80);
  out.push_back(golden_graph());
  out.push_back(disjoint_edges(2));
  out.push_back(star_graph(3));
  return out;
}

}  // namespace

TEST_CASE("shift graphs on small examples") {
  MatchPolyCache c(disjoint_edges(2));
  ThetaContext zero(c, rat(0));
  CHECK(d_r_graph(zero, -1).edge_count() == 0);
  CHECK(d_r_graph(zero, 1).edge_count() == 0);
  CHECK(d_r_graph(zero, 2) == Graph::from_edges(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}));
  CHECK(d_graph(zero) == disjoint_edges(2));

  MatchPolyCache k2(parse_graph6("A_"));
  ThetaContext k2zero(k2, rat(0));
  CHECK(d_graph(k2zero).adjacent(0, 1));
}

TEST_CASE("golden graph operators at theta = 1") {
  MatchPolyCache c(golden_graph());
  ThetaContext one(c, rat(1));
  CHECK_FALSE(d_r_graph(one, -2).adjacent(3, 5));

  const Graph s = s_graph(one);
  for (int v = 2; v < 10; ++v) {
    CHECK(s.adjacent(0, v));
    CHECK(s.adjacent(1, v));
  }
  CHECK(s.adjacent(0, 1));
  MatchPolyCache sc(s);
  ThetaContext s_one(sc, rat(1));
  CHECK(d_r_graph(s_one, -2).adjacent(3, 5));
  CHECK(d_graph(s_one) == d_graph(one));

  const auto d = decomposition(one);
  CHECK(d_graph_closed_form(one, d) == d_graph(one));
  CHECK(d_r_closed_form_on_s(one, d, -2).adjacent(3, 5));
  const PairPrediction p = predicted_pair_mult_in_s(one, d, s_one.mult(), 3, 5);
  CHECK(p.value == 0);
  CHECK(p.placement == PairPlacement::DistinctCritical);
}

TEST_CASE("S graph leaves graphs without special vertices alone") {
  MatchPolyCache k2(parse_graph6("A_"));
  ThetaContext zero(k2, rat(0));
  CHECK(s_graph(zero) == parse_graph6("A_"));
  MatchPolyCache p3(path_graph(3));
  ThetaContext p3zero(p3, rat(0));
  CHECK(s_graph(p3zero) == path_graph(3));
}

TEST_CASE("closed form on a graph whose vertices are all essential is complete") {
  MatchPolyCache c(Graph::complete(3));
  const auto roots = theta_candidates(c);
  for (const auto& t : roots) {
    ThetaContext ctx(c, t);
    const auto d = decomposition(ctx);
    if (d.B == c.graph().vertices()) CHECK(d_graph_closed_form(ctx, d) == Graph::complete(3));
  }
  MatchPolyCache k1(Graph(1));
  ThetaContext k1zero(k1, rat(0));
  CHECK(decomposition(k1zero).B == VertexSet::of({0}));
}

TEST_CASE("2K2 closed forms at theta = 0") {
  MatchPolyCache c(disjoint_edges(2));
  ThetaContext zero(c, rat(0));
  const auto d = decomposition(zero);
  CHECK(d_graph_closed_form(zero, d) == disjoint_edges(2));
  CHECK(d_r_closed_form_on_s(zero, d, 2) == d_r_graph(zero, 2));
  CHECK_THROWS_AS(d_r_closed_form_on_s(zero, d, -2), PremiseError);
  const PairPrediction p = predicted_pair_mult_in_s(zero, d, 0, 0, 2);
  CHECK(p.value == 2);
  CHECK(p.placement == PairPlacement::DistinctRootfree);
  CHECK(predicted_pair_mult_in_g(zero, d, 0, 2).value == 2);
  CHECK(predicted_pair_mult_in_g(zero, d, 0, 1).value == 0);
}

TEST_CASE("shift graphs agree with the enumeration oracle") {
  for (const Graph& g : small_corpus()) {
    MatchPolyCache cache(g);
    auto thetas = theta_candidates(cache);
    thetas.push_back(rat(3));
    for (const auto& t : thetas) {
      ThetaContext ctx(cache, t);
      const DGraphBundle b = d_graph_bundle(ctx);
      for (int r = -2; r <= 2; ++r) {
        const Graph expect = d_r_oracle(g, t, r);
        CHECK(b.d(r) == expect);
        CHECK(d_r_graph(ctx, r) == expect);
      }
      CHECK(b.d_theta == d_graph(ctx));
      CHECK(complement(b.d_theta) == b.g_plus);
    }
  }
}

TEST_CASE("closed forms agree with direct computation") {
  for (const Graph& g : small_corpus()) {
    MatchPolyCache cache(g);
    for (const auto& t : theta_candidates(cache)) {
      ThetaContext ctx(cache, t);
      const auto d = decomposition(ctx);
      MatchPolyCache sc(s_graph(g, d));
      ThetaContext s(sc, t);
      CHECK(d_graph_closed_form(ctx, d) == d_graph(ctx));
      for (int r = -2; r <= 2; ++r) {
        if (r <= 0 && d.base_mult < 2) {
          CHECK_THROWS_AS(d_r_closed_form_on_s(ctx, d, r), PremiseError);
        } else {
          CHECK(d_r_closed_form_on_s(ctx, d, r) == d_r_graph(s, r));
        }
      }
    }
  }
}

TEST_CASE("pair predictions refuse pairs touching special vertices") {
  MatchPolyCache c(golden_graph());
  ThetaContext one(c, rat(1));
  const auto d = decomposition(one);
  CHECK_THROWS_AS(predicted_pair_mult_in_s(one, d, 2, 0, 3), PremiseError);
  CHECK_THROWS_AS(predicted_pair_mult_in_g(one, d, 2, 3), PremiseError);
}
