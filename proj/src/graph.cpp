#include "matchroot/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <json.hpp>

#include "matchroot/errors.hpp"

namespace matchroot {

int vertex_cap() {
  static const int cap = [] {
    const char* env = std::getenv("MATCHROOT_MAX_N");
    if (env == nullptr || *env == '\0') return kMaxVertices;
    const int v = std::atoi(env);
    return std::clamp(v, 1, kMaxVertices);
  }();
  return cap;
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (int v : *this) out.push_back(v);
  return out;
}

bool VertexSet::lex_less(VertexSet a, VertexSet b) {
  const auto ma = a.members();
  const auto mb = b.members();
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) {
    throw ContractError("graph order " + std::to_string(n) + " outside 0.." +
                        std::to_string(kMaxVertices));
  }
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int v = 0; v < n; ++v) g.adj_[static_cast<std::size_t>(v)] = g.vertices().without(v).bits();
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw ContractError("vertex " + std::to_string(v) + " out of range");
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += neighbors(v).size();
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    for (int v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw ContractError("self-loop at vertex " + std::to_string(u));
  adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
  adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  adj_[static_cast<std::size_t>(u)] &= ~(std::uint64_t{1} << v);
  adj_[static_cast<std::size_t>(v)] &= ~(std::uint64_t{1} << u);
}

// graph6: a size header, then the upper triangle column by column
// ((0,1), (0,2), (1,2), (0,3), ...) packed six bits per byte, MSB first,
// each byte offset by 63.
Graph parse_graph6(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  std::size_t base = 0;
  if (text.substr(0, kHeader.size()) == kHeader) base = kHeader.size();
  std::size_t end = text.size();
  while (end > base && (text[end - 1] == '\n' || text[end - 1] == '\r' || text[end - 1] == ' ')) {
    --end;
  }
  if (end == base) throw ParseError("graph6: empty input", base);
  if (text[base] == ':' || text[base] == '&') {
    throw ParseError("graph6: sparse6/digraph6 input is not supported", base);
  }
  auto value_at = [&](std::size_t i) -> int {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw ParseError("graph6: byte outside 63..126", i);
    return c - 63;
  };
  std::size_t pos = base;
  long n = value_at(pos);
  ++pos;
  if (n == 63) {
    if (end - pos < 3) throw ParseError("graph6: truncated size header", end);
    if (value_at(pos) == 63) throw ParseError("graph6: 8-byte size header exceeds the vertex cap", pos);
    n = 0;
    for (int k = 0; k < 3; ++k) n = (n << 6) | value_at(pos++);
  }
  if (n > vertex_cap()) {
    throw ParseError("graph6: order " + std::to_string(n) + " exceeds the vertex cap " +
                         std::to_string(vertex_cap()),
                     base);
  }
  const long bits = n * (n - 1) / 2;
  const std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
  if (end - pos != body) {
    throw ParseError("graph6: expected " + std::to_string(body) + " body bytes, found " +
                         std::to_string(end - pos),
                     std::min(end, pos + body));
  }
  Graph g(static_cast<int>(n));
  long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const std::size_t byte = pos + static_cast<std::size_t>(k / 6);
      if ((value_at(byte) >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const std::size_t last = end - 1;
    const int pad_mask = (1 << (6 - bits % 6)) - 1;
    if (value_at(last) & pad_mask) throw ParseError("graph6: nonzero padding bits", last);
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

Graph parse_edge_list_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("edge-list JSON: ") + e.what(), e.byte);
  }
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer()) {
    throw ParseError("edge-list JSON: expected an object with integer field \"n\"", 0);
  }
  const long n = doc["n"].get<long>();
  if (n < 0 || n > vertex_cap()) {
    throw ParseError("edge-list JSON: order " + std::to_string(n) + " outside 0.." +
                         std::to_string(vertex_cap()),
                     0);
  }
  Graph g(static_cast<int>(n));
  if (!doc.contains("edges")) return g;
  if (!doc["edges"].is_array()) throw ParseError("edge-list JSON: \"edges\" must be an array", 0);
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
      throw ParseError("edge-list JSON: each edge must be [u, v]", 0);
    }
    const long u = e[0].get<long>();
    const long v = e[1].get<long>();
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) {
      throw ParseError("edge-list JSON: bad edge [" + std::to_string(u) + ", " +
                           std::to_string(v) + "]",
                       0);
    }
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  return g;
}

std::string to_edge_list_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  nlohmann::json doc;
  doc["n"] = g.order();
  doc["edges"] = std::move(edges);
  return doc.dump();
}

Graph parse_graph_auto(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && (text[i] == ' ' || text[i] == '\n' || text[i] == '\r' || text[i] == '\t')) ++i;
  if (i < text.size() && text[i] == '{') return parse_edge_list_json(text);
  return parse_graph6(text.substr(i));
}

Graph delete_edge(const Graph& g, int u, int v) {
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !g.adjacent(u, v)) {
    throw ContractError("delete_edge: (" + std::to_string(u) + ", " + std::to_string(v) +
                        ") is not an edge");
  }
  Graph h = g;
  h.remove_edge(u, v);
  return h;
}

Graph add_edge(const Graph& g, int u, int v) {
  if (g.adjacent(u, v)) {
    throw ContractError("add_edge: (" + std::to_string(u) + ", " + std::to_string(v) +
                        ") is already an edge");
  }
  Graph h = g;
  h.add_edge(u, v);
  return h;
}

Graph induced_subgraph(const Graph& g, VertexSet keep) {
  const auto verts = keep.members();
  Graph h(static_cast<int>(verts.size()));
  for (std::size_t a = 0; a < verts.size(); ++a) {
    for (std::size_t b = a + 1; b < verts.size(); ++b) {
      if (g.adjacent(verts[a], verts[b])) h.add_edge(static_cast<int>(a), static_cast<int>(b));
    }
  }
  return h;
}

Graph restrict_to(const Graph& g, VertexSet live) {
  Graph h(g.order());
  for (auto [u, v] : g.edges()) {
    if (live.contains(u) && live.contains(v)) h.add_edge(u, v);
  }
  return h;
}

std::vector<VertexSet> components(const Graph& g, VertexSet live) {
  std::vector<VertexSet> out;
  VertexSet rest = live;
  while (!rest.empty()) {
    VertexSet comp = VertexSet::single(rest.lowest());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (int v : frontier) next = next | g.neighbors(v);
      next = (next & rest) - comp;
      comp = comp | next;
      frontier = next;
    }
    out.push_back(comp);
    rest = rest - comp;
  }
  return out;
}

bool is_connected(const Graph& g, VertexSet live) { return components(g, live).size() <= 1; }

namespace {

void bron_kerbosch(const Graph& g, VertexSet live, VertexSet r, VertexSet p, VertexSet x,
                   std::vector<VertexSet>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  int pivot = -1;
  int best = -1;
  for (int u : p | x) {
    const int c = (p & g.neighbors(u)).size();
    if (c > best) {
      best = c;
      pivot = u;
    }
  }
  for (int v : p - g.neighbors(pivot)) {
    const VertexSet nv = g.neighbors(v) & live;
    bron_kerbosch(g, live, r.with(v), p & nv, x & nv, out);
    p = p.without(v);
    x = x.with(v);
  }
}

}  // namespace

std::vector<VertexSet> maximal_cliques(const Graph& g, VertexSet live) {
  std::vector<VertexSet> out;
  if (live.empty()) return out;
  bron_kerbosch(g, live, VertexSet{}, live, VertexSet{}, out);
  std::sort(out.begin(), out.end(), VertexSet::lex_less);
  return out;
}

bool is_clique(const Graph& g, VertexSet s) {
  for (int v : s) {
    if (!(s.without(v)).subset_of(g.neighbors(v))) return false;
  }
  return true;
}

bool is_independent(const Graph& g, VertexSet s) {
  for (int v : s) {
    if (!(g.neighbors(v) & s).empty()) return false;
  }
  return true;
}

namespace {

void path_dfs(const Graph& g, VertexSet live, int target, std::vector<int>& path, VertexSet used,
              const PathVisitor& visit) {
  const int at = path.back();
  for (int w : g.neighbors(at) & live) {
    if (used.contains(w)) continue;
    path.push_back(w);
    if (w == target) {
      visit(path);
    } else {
      path_dfs(g, live, target, path, used.with(w), visit);
    }
    path.pop_back();
  }
}

}  // namespace

void for_each_path(const Graph& g, VertexSet live, int u, int v, const PathVisitor& visit) {
  if (u == v) throw ContractError("paths_between: endpoints must differ");
  if (!live.contains(u) || !live.contains(v)) {
    throw ContractError("paths_between: endpoints must be live vertices");
  }
  std::vector<int> path{u};
  path_dfs(g, live, v, path, VertexSet::single(u), visit);
}

std::vector<std::vector<int>> paths_between(const Graph& g, VertexSet live, int u, int v) {
  std::vector<std::vector<int>> out;
  for_each_path(g, live, u, v, [&](const std::vector<int>& p) { out.push_back(p); });
  return out;
}

Graph complement(const Graph& g) {
  Graph h(g.order());
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) h.add_edge(u, v);
    }
  }
  return h;
}

Graph union_edges(const Graph& a, const Graph& b) {
  if (a.order() != b.order()) throw ContractError("union_edges: vertex sets differ");
  Graph h = a;
  for (auto [u, v] : b.edges()) h.add_edge(u, v);
  return h;
}

}  // namespace matchroot
