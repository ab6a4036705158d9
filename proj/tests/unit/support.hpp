#pragma once

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>

#include "matchroot/graph.hpp"
#include "matchroot/exactpoly.hpp"

namespace testing_support {

using matchroot::Graph;
using matchroot::Integer;
using matchroot::Polynomial;

inline std::string data_path(const std::string& name) { return std::string(MATCHROOT_TEST_DATA) + "/" + name; }

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline Graph cycle_graph(int n) {
  Graph g = path_graph(n);
  g.add_edge(0, n - 1);
  return g;
}

inline Graph star_graph(int leaves) {
  Graph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

inline Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
  }
  return g;
}

inline Graph disjoint_edges(int k) {
  Graph g(2 * k);
  for (int i = 0; i < k; ++i) g.add_edge(2 * i, 2 * i + 1);
  return g;
}

// Golden 10-vertex graph: u = 0, v = 1 and four pendant edges {2,3}, {4,5},
// {6,7}, {8,9}; u touches the first two, v the last three.
inline Graph golden_graph() {
  return Graph::from_edges(10, {{0, 2}, {0, 4}, {1, 4}, {1, 6}, {1, 8}, {2, 3}, {4, 5}, {6, 7}, {8, 9}});
}

// Closed-form matching polynomials computed by their own three-term
// recurrences, independent of the library's graph recursion.
inline Polynomial x_times(const Polynomial& p) { return p.shifted(1); }

inline Polynomial path_poly(int n) {
  Polynomial a{1};
  if (n == 0) return a;
  Polynomial b{0, 1};
  for (int k = 2; k <= n; ++k) {
    Polynomial c = x_times(b) - a;
    a = b;
    b = c;
  }
  return b;
}

inline Polynomial cycle_poly(int n) { return path_poly(n) - path_poly(n - 2); }

inline Polynomial hermite_poly(int n) {
  Polynomial a{1};
  if (n == 0) return a;
  Polynomial b{0, 1};
  for (int k = 1; k < n; ++k) {
    Polynomial c = x_times(b) - a * Integer(k);
    a = b;
    b = c;
  }
  return b;
}

inline Polynomial bipartite_poly(int a, int b) {
  Polynomial out;
  Integer binom_a = 1;
  Integer binom_b = 1;
  Integer fact = 1;
  for (int k = 0; k <= std::min(a, b); ++k) {
    if (k > 0) {
      binom_a = binom_a * (a - k + 1) / k;
      binom_b = binom_b * (b - k + 1) / k;
      fact *= k;
    }
    Integer c = binom_a * binom_b * fact;
    if (k % 2 == 1) c = -c;
    out += Polynomial::monomial(c, a + b - 2 * k);
  }
  return out;
}

}  // namespace testing_support
