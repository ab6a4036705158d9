#include "matchroot/matchpoly.hpp"

#include "matchroot/errors.hpp"

namespace matchroot {

MatchPolyCache::MatchPolyCache(Graph g, std::size_t entry_cap)
    : g_(std::move(g)), entry_cap_(entry_cap == 0 ? 1 : entry_cap) {}

const Polynomial& MatchPolyCache::poly(VertexSet live) {
  if (!live.subset_of(g_.vertices())) throw ContractError("mask outside the root graph");
  if (polys_.size() >= entry_cap_) {
    polys_.clear();
    factors_.clear();
  }
  return compute(live);
}

const Polynomial& MatchPolyCache::compute(VertexSet live) {
  if (auto it = polys_.find(live.bits()); it != polys_.end()) return it->second;

  Polynomial p;
  const auto comps = components(g_, live);
  if (comps.empty()) {
    p = Polynomial::constant(1);
  } else if (comps.size() > 1) {
    p = Polynomial::constant(1);
    for (VertexSet c : comps) p = p * compute(c);
  } else {
    int pivot = live.lowest();
    int best = -1;
    for (int v : live) {
      const int d = (g_.neighbors(v) & live).size();
      if (d > best) {
        best = d;
        pivot = v;
      }
    }
    const VertexSet rest = live.without(pivot);
    p = compute(rest).shifted(1);
    for (int w : g_.neighbors(pivot) & live) p -= compute(rest.without(w));
  }
  return polys_.emplace(live.bits(), std::move(p)).first->second;
}

const std::vector<SquarefreeFactor>& MatchPolyCache::factors(VertexSet live) {
  if (auto it = factors_.find(live.bits()); it != factors_.end()) return it->second;
  auto decomposition = squarefree_decomposition(poly(live));
  return factors_.emplace(live.bits(), std::move(decomposition)).first->second;
}

Polynomial matching_polynomial(const Graph& g, VertexSet live) {
  MatchPolyCache cache(g);
  return cache.poly(live);
}

namespace {

void count_matchings(const std::vector<std::pair<int, int>>& edges, std::size_t next,
                     VertexSet used, int size, std::vector<Integer>& counts) {
  if (next == edges.size()) {
    counts[static_cast<std::size_t>(size)] += 1;
    return;
  }
  count_matchings(edges, next + 1, used, size, counts);
  const auto [u, v] = edges[next];
  if (!used.contains(u) && !used.contains(v)) {
    count_matchings(edges, next + 1, used.with(u).with(v), size + 1, counts);
  }
}

}  // namespace

Polynomial matching_polynomial_oracle(const Graph& g, VertexSet live, int cap) {
  const int n = live.size();
  if (n > cap) {
    throw CapExceeded("matching oracle: " + std::to_string(n) + " vertices exceeds cap " +
                      std::to_string(cap));
  }
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges()) {
    if (live.contains(u) && live.contains(v)) edges.emplace_back(u, v);
  }
  std::vector<Integer> counts(static_cast<std::size_t>(n / 2 + 1));
  count_matchings(edges, 0, VertexSet{}, 0, counts);
  std::vector<Integer> coeffs(static_cast<std::size_t>(n + 1));
  for (int r = 0; 2 * r <= n; ++r) {
    Integer c = counts[static_cast<std::size_t>(r)];
    if (r % 2 == 1) c = -c;
    coeffs[static_cast<std::size_t>(n - 2 * r)] = c;
  }
  return Polynomial(std::move(coeffs));
}

int ThetaContext::mult(VertexSet live) {
  if (auto it = mults_.find(live.bits()); it != mults_.end()) return it->second;
  const int m = root_multiplicity(theta_, cache_->factors(live));
  mults_.emplace(live.bits(), m);
  return m;
}

int mult(const AlgebraicNumber& t, const Graph& g, VertexSet live) {
  return root_multiplicity(t, matching_polynomial(g, live));
}

std::vector<AlgebraicNumber> theta_candidates(MatchPolyCache& cache, VertexSet live) {
  return real_roots(cache.poly(live));
}

}  // namespace matchroot
