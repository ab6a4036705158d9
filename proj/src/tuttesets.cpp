#include "matchroot/tuttesets.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "matchroot/errors.hpp"

namespace matchroot {

bool is_nice(ThetaContext& ctx, VertexSet X, VertexSet live) {
  if (X.size() <= 1) throw ContractError("is_nice needs |X| > 1");
  if (!X.subset_of(live)) throw ContractError("is_nice: X is not inside the live set");
  const int target = ctx.mult(live) + 2;
  for (int u : X) {
    for (int v : X) {
      if (v > u && ctx.mult(live.without(u).without(v)) != target) return false;
    }
  }
  return true;
}

bool is_extreme(ThetaContext& ctx, VertexSet X, VertexSet live) {
  if (X.empty()) throw ContractError("is_extreme needs a nonempty X");
  if (!X.subset_of(live)) throw ContractError("is_extreme: X is not inside the live set");
  return ctx.mult(live - X) == ctx.mult(live) + X.size();
}

bool is_tutte(ThetaContext& ctx, VertexSet X, VertexSet live) {
  if (X.empty()) throw ContractError("is_tutte needs a nonempty X");
  if (!X.subset_of(live)) throw ContractError("is_tutte: X is not inside the live set");
  return c_theta(ctx, live - X) == ctx.mult(live) + X.size();
}

std::vector<VertexSet> maximal_nice_sets(ThetaContext& ctx) {
  const Graph d2 = d_r_graph(ctx, 2);
  std::vector<VertexSet> out;
  for (VertexSet c : maximal_cliques(d2)) {
    if (c.size() > 1) out.push_back(c);
  }
  return out;
}

namespace {

template <typename Pred>
std::vector<VertexSet> maximal_family(ThetaContext& ctx, int cap, const char* what, Pred pred) {
  const int n = ctx.graph().order();
  if (n > cap) {
    throw CapExceeded(std::string(what) + ": " + std::to_string(n) + " vertices exceeds cap " +
                      std::to_string(cap));
  }
  std::vector<std::uint64_t> masks;
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
    if (std::popcount(m) > 1) masks.push_back(m);
  }
  std::stable_sort(masks.begin(), masks.end(), [](std::uint64_t a, std::uint64_t b) {
    return std::popcount(a) > std::popcount(b);
  });
  std::vector<VertexSet> kept;
  for (std::uint64_t m : masks) {
    const VertexSet x(m);
    const bool covered = std::any_of(kept.begin(), kept.end(),
                                     [&](VertexSet k) { return x.subset_of(k); });
    if (!covered && pred(x)) kept.push_back(x);
  }
  std::sort(kept.begin(), kept.end(), VertexSet::lex_less);
  return kept;
}

}  // namespace

// A subset of a larger member is skipped before its own test: such a set
// can never be maximal, whatever the predicate says about it.
std::vector<VertexSet> maximal_extreme_sets_bruteforce(ThetaContext& ctx, int cap) {
  return maximal_family(ctx, cap, "extreme-set enumeration",
                        [&](VertexSet x) { return is_extreme(ctx, x); });
}

std::vector<VertexSet> maximal_tutte_sets_bruteforce(ThetaContext& ctx, int cap) {
  return maximal_family(ctx, cap, "Tutte-set enumeration",
                        [&](VertexSet x) { return is_tutte(ctx, x); });
}

bool NiceMatchingResult::is_matching(const Graph& g) const {
  VertexSet used;
  for (auto [x, y] : pairs) {
    if (!g.adjacent(x, y) || used.contains(x) || used.contains(y)) return false;
    used = used.with(x).with(y);
  }
  return true;
}

bool NiceMatchingResult::y_independent(const Graph& g) const {
  return (X & Y).empty() && is_independent(g, Y);
}

bool NiceMatchingResult::certificates_hold() const {
  return std::all_of(certificates.begin(), certificates.end(), [&](const MatchingCertificate& c) {
    return c.mult == base_mult && c.residual_nice;
  });
}

NiceMatchingResult nice_matching(ThetaContext& ctx, VertexSet X) {
  if (!is_nice(ctx, X)) throw ContractError("nice_matching: X is not theta-nice");
  const Graph& g = ctx.graph();
  NiceMatchingResult res;
  res.X = X;
  res.base_mult = ctx.mult();

  VertexSet live = g.vertices();
  for (int x : X) {
    const VertexSet after = live.without(x);
    int partner = -1;
    for (int y : g.neighbors(x) & after) {
      if (vertex_class(ctx, after, y) == VertexClass::Essential) {
        partner = y;
        break;
      }
    }
    if (partner < 0) {
      throw InvariantBreach("nice_matching: vertex " + std::to_string(x) +
                            " has no essential neighbour after its deletion");
    }
    res.pairs.emplace_back(x, partner);
    res.Y = res.Y.with(partner);
    live = after.without(partner);
  }

  const int m = static_cast<int>(res.pairs.size());
  auto certify = [&](std::uint64_t chosen) {
    MatchingCertificate c;
    for (int i = 0; i < m; ++i) {
      if ((chosen >> i) & 1U) {
        c.removed = c.removed.with(res.pairs[static_cast<std::size_t>(i)].first)
                        .with(res.pairs[static_cast<std::size_t>(i)].second);
      }
    }
    const VertexSet rest = g.vertices() - c.removed;
    c.mult = ctx.mult(rest);
    const VertexSet residual = X - c.removed;
    if (residual.size() >= 2) c.residual_nice = is_nice(ctx, residual, rest);
    res.certificates.push_back(c);
  };
  if (m <= kExhaustiveCertificateCap) {
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) certify(s);
  } else {
    res.exhaustive = false;
    std::mt19937_64 rng(X.bits());
    for (int k = 0; k < kSampledCertificates; ++k) {
      certify(rng() & ((std::uint64_t{1} << m) - 1));
    }
  }
  return res;
}

bool embed_check(const Graph& g, const Graph& d_theta, const NiceMatchingResult& result,
                 std::pair<int, int>* witness) {
  const int n = g.order();
  std::vector<int> swap(static_cast<std::size_t>(n), -1);
  for (auto [x, y] : result.pairs) {
    swap[static_cast<std::size_t>(x)] = y;
    swap[static_cast<std::size_t>(y)] = x;
  }
  const VertexSet h = result.X | result.Y;
  for (int a : h) {
    for (int b : g.neighbors(a) & h) {
      if (b <= a) continue;
      if (!d_theta.adjacent(swap[static_cast<std::size_t>(a)], swap[static_cast<std::size_t>(b)])) {
        if (witness != nullptr) *witness = {a, b};
        return false;
      }
    }
  }
  return true;
}

bool embed_check(ThetaContext& ctx, const NiceMatchingResult& result) {
  return embed_check(ctx.graph(), d_graph(ctx), result);
}

std::optional<std::vector<int>> subgraph_copy(const Graph& g, VertexSet pattern, const Graph& host,
                                              int cap) {
  if (pattern.size() > cap) {
    throw CapExceeded("subgraph copy: " + std::to_string(pattern.size()) + " pattern vertices exceeds cap " +
                      std::to_string(cap));
  }
  // Most constrained first: place pattern vertices by descending degree.
  std::vector<int> order = pattern.members();
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return (g.neighbors(a) & pattern).size() > (g.neighbors(b) & pattern).size();
  });
  std::vector<int> image(static_cast<std::size_t>(g.order()), -1);
  VertexSet used;
  const VertexSet targets = host.vertices();

  std::function<bool(std::size_t)> place = [&](std::size_t i) {
    if (i == order.size()) return true;
    const int a = order[i];
    const int need = (g.neighbors(a) & pattern).size();
    for (int t : targets - used) {
      if (host.neighbors(t).size() < need) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        const int b = order[j];
        if (g.adjacent(a, b) && !host.adjacent(t, image[static_cast<std::size_t>(b)])) ok = false;
      }
      if (!ok) continue;
      image[static_cast<std::size_t>(a)] = t;
      used = used.with(t);
      if (place(i + 1)) return true;
      used = used.without(t);
      image[static_cast<std::size_t>(a)] = -1;
    }
    return false;
  };

  if (!place(0)) return std::nullopt;
  std::vector<int> out;
  for (int a : pattern) out.push_back(image[static_cast<std::size_t>(a)]);
  return out;
}

bool heilmann_lieb_check(const Graph& g, int u, int v, int cap) {
  if (g.order() > cap) {
    throw CapExceeded("Heilmann-Lieb check: " + std::to_string(g.order()) +
                      " vertices exceeds cap " + std::to_string(cap));
  }
  MatchPolyCache cache(g);
  const VertexSet all = g.vertices();
  const Polynomial mu_u = cache.poly(all.without(u));
  const Polynomial mu_v = cache.poly(all.without(v));
  const Polynomial mu = cache.poly(all);
  const Polynomial mu_uv = cache.poly(all.without(u).without(v));
  const Polynomial lhs = mu_u * mu_v - mu * mu_uv;
  Polynomial rhs;
  for_each_path(g, all, u, v, [&](const std::vector<int>& path) {
    VertexSet rest = all;
    for (int w : path) rest = rest.without(w);
    const Polynomial& q = cache.poly(rest);
    rhs += q * q;
  });
  return lhs == rhs;
}

bool path_criterion(ThetaContext& ctx, int u, int v, int cap) {
  const Graph& g = ctx.graph();
  if (g.order() > cap) {
    throw CapExceeded("path criterion: " + std::to_string(g.order()) + " vertices exceeds cap " +
                      std::to_string(cap));
  }
  const int base = ctx.mult();
  bool found = false;
  for_each_path(g, g.vertices(), u, v, [&](const std::vector<int>& path) {
    if (found) return;
    VertexSet rest = g.vertices();
    for (int w : path) rest = rest.without(w);
    if (ctx.mult(rest) <= base) found = true;
  });
  return found;
}

}  // namespace matchroot
