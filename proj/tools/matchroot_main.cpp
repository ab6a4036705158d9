#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "matchroot/errors.hpp"
#include "matchroot/textio.hpp"
#include "matchroot/tuttesets.hpp"
#include "matchroot/verify.hpp"

using namespace matchroot;
using nlohmann::json;

namespace {

// A graph argument is a graph6 string, an edge-list JSON object, a path to a
// file holding one of those on its first line, or "-" for standard input.
Graph load_graph(const std::string& arg) {
  std::string text = arg;
  if (arg == "-") {
    std::stringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else if (arg.front() != '{' && std::filesystem::is_regular_file(arg)) {
    std::ifstream in(arg);
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  const std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return parse_graph_auto(text.substr(first));
  if (text.find('\n') == std::string::npos) return parse_graph_auto(text);
  const auto graphs = read_graph_lines(text);
  if (graphs.size() != 1) {
    throw ContractError("expected exactly one graph, found " + std::to_string(graphs.size()));
  }
  return graphs.front();
}

std::string poly_text(const Polynomial& p) {
  std::string out = "[";
  const auto& c = p.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i > 0) out += ", ";
    out += c[i].get_str();
  }
  return out + "]";
}

std::string graph_text(const Graph& g, const std::string& format) {
  return format == "json" ? to_edge_list_json(g) : to_graph6(g);
}

json certificate_json(const MatchingCertificate& c) {
  return {{"removed", vertex_set_to_json(c.removed)}, {"mult", c.mult}, {"residual_nice", c.residual_nice}};
}

void write_reports(const std::vector<PropertyReport>& reports, const std::string& path) {
  const std::string text = reports_to_json(reports).dump(2) + "\n";
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

void print_summary(const std::vector<PropertyReport>& reports) {
  const json s = reports_to_json(reports)["summary"];
  std::cerr << "reports: " << reports.size();
  for (const auto& [k, v] : s.items()) std::cerr << "  " << k << ": " << v.get<int>();
  std::cerr << "\n";
}

std::vector<std::string> split_props(const std::vector<std::string>& raw) {
  std::vector<std::string> out;
  for (const auto& item : raw) {
    std::stringstream ss(item);
    std::string part;
    while (std::getline(ss, part, ',')) {
      if (!part.empty()) out.push_back(part);
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact matching-polynomial root multiplicities and theta decompositions"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "graph6";
  int max_n = 0;
  app.add_option("--format", format, "Graph output format")->check(CLI::IsMember({"graph6", "json"}));
  app.add_option("--max-n", max_n, "Vertex cap for graph input")->check(CLI::Range(1, kMaxVertices));

  std::string graph_arg;
  std::string theta_arg;
  auto add_graph = [&](CLI::App* sub) { sub->add_option("graph", graph_arg, "graph6, JSON, file or -")->required(); };
  auto add_theta = [&](CLI::App* sub) { sub->add_option("--theta", theta_arg, "p/q or poly:[c0,...];interval:lo,hi")->required(); };

  auto* mu_cmd = app.add_subcommand("mu", "Print the matching polynomial, coefficients low to high");
  add_graph(mu_cmd);

  auto* mult_cmd = app.add_subcommand("mult", "Print mult(theta, G)");
  add_graph(mult_cmd);
  add_theta(mult_cmd);

  auto* classify_cmd = app.add_subcommand("classify", "Classify every vertex as essential, neutral or positive");
  add_graph(classify_cmd);
  add_theta(classify_cmd);

  auto* decompose_cmd = app.add_subcommand("decompose", "Print the theta decomposition as JSON");
  add_graph(decompose_cmd);
  add_theta(decompose_cmd);

  int r_value = 0;
  bool all_r = false;
  auto* dgraph_cmd = app.add_subcommand("dgraph", "Print D_theta(G), or D_{r,theta}(G) with --r");
  add_graph(dgraph_cmd);
  add_theta(dgraph_cmd);
  auto* r_opt = dgraph_cmd->add_option("--r", r_value, "Shift r")->check(CLI::Range(-2, 2));
  auto* all_opt = dgraph_cmd->add_flag("--all", all_r, "Print every D_{r,theta}(G)");
  r_opt->excludes(all_opt);

  auto* sgraph_cmd = app.add_subcommand("sgraph", "Print S_theta(G)");
  add_graph(sgraph_cmd);
  add_theta(sgraph_cmd);

  auto* nice_sets_cmd = app.add_subcommand("nice-sets", "List the maximal theta-nice sets");
  add_graph(nice_sets_cmd);
  add_theta(nice_sets_cmd);

  std::string set_arg;
  auto* nice_matching_cmd = app.add_subcommand("nice-matching", "Match a nice set into essential vertices");
  add_graph(nice_matching_cmd);
  add_theta(nice_matching_cmd);
  nice_matching_cmd->add_option("--set", set_arg, "Comma-separated vertices, e.g. 1,3,5")->required();

  std::string corpus_arg;
  std::vector<std::string> props_arg;
  std::string json_out;
  Caps caps;
  auto* verify_cmd = app.add_subcommand("verify", "Run the property suite over a corpus");
  verify_cmd->add_option("--corpus", corpus_arg, "File path or gen:n=..,p=..,seed=..,count=..");
  verify_cmd->add_option("--props", props_arg, "Property names (comma-separated or repeated)");
  verify_cmd->add_option("--json", json_out, "Write the JSON report here instead of stdout");
  verify_cmd->add_option("--oracle-cap", caps.oracle, "Max order for the enumeration oracle");
  verify_cmd->add_option("--subset-cap", caps.subsets, "Max order for all-subset enumeration");
  verify_cmd->add_option("--nice-extreme-cap", caps.nice_vs_extreme, "Max order for per-subset comparisons");
  verify_cmd->add_option("--path-cap", caps.paths, "Max order for path enumeration");
  verify_cmd->add_option("--heilmann-lieb-cap", caps.heilmann_lieb, "Max order for the path identity");
  bool list_props = false;
  verify_cmd->add_flag("--list", list_props, "List property names and exit");

  int depth = 3;
  auto* explore_cmd = app.add_subcommand("explore", "Iterate D_theta with theta fixed");
  explore_cmd->add_option("--corpus", corpus_arg, "File path or generator spec")->required();
  explore_cmd->add_option("--depth", depth, "Number of iterations")->check(CLI::Range(2, 16));
  explore_cmd->add_option("--json", json_out, "Write the JSON report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return 2;
  }

  if (max_n > 0) setenv("MATCHROOT_MAX_N", std::to_string(max_n).c_str(), 1);

  try {
    if (*verify_cmd) {
      if (list_props) {
        for (const auto& name : property_names()) std::cout << name << "\n";
        return 0;
      }
      if (corpus_arg.empty()) {
        std::cerr << "--corpus is required\n" << verify_cmd->help();
        return 2;
      }
      SuiteOptions opts;
      opts.properties = split_props(props_arg);
      opts.caps = caps;
      const auto reports = run_suite(CorpusSpec::parse(corpus_arg).load(), opts);
      write_reports(reports, json_out);
      print_summary(reports);
      return has_failures(reports) ? 1 : 0;
    }
    if (*explore_cmd) {
      const auto reports = explore_iterated_d(CorpusSpec::parse(corpus_arg).load(), depth);
      write_reports(reports, json_out);
      print_summary(reports);
      return 0;
    }

    const Graph g = load_graph(graph_arg);
    MatchPolyCache cache(g);
    if (*mu_cmd) {
      std::cout << poly_text(cache.poly()) << "\n";
      return 0;
    }

    ThetaContext ctx(cache, parse_theta_spec(theta_arg));
    if (*mult_cmd) {
      std::cout << ctx.mult() << "\n";
    } else if (*classify_cmd) {
      json classes = json::array();
      for (int v : g.vertices()) classes.push_back(std::string(to_string(vertex_class(ctx, v))));
      std::cout << json{{"mult", ctx.mult()}, {"classes", classes}}.dump(2) << "\n";
    } else if (*decompose_cmd) {
      std::cout << decomposition_to_json(decomposition(ctx)).dump(2) << "\n";
    } else if (*dgraph_cmd) {
      if (all_r) {
        const DGraphBundle b = d_graph_bundle(ctx);
        for (int r = -2; r <= 2; ++r) {
          if (format == "json") {
            std::cout << "{\"r\":" << r << ",\"graph\":" << graph_text(b.d(r), format) << "}\n";
          } else {
            std::cout << r << " " << graph_text(b.d(r), format) << "\n";
          }
        }
      } else if (*r_opt) {
        std::cout << graph_text(d_r_graph(ctx, r_value), format) << "\n";
      } else {
        std::cout << graph_text(d_graph(ctx), format) << "\n";
      }
    } else if (*sgraph_cmd) {
      std::cout << graph_text(s_graph(ctx), format) << "\n";
    } else if (*nice_sets_cmd) {
      json out = json::array();
      for (VertexSet x : maximal_nice_sets(ctx)) out.push_back(vertex_set_to_json(x));
      std::cout << out.dump() << "\n";
    } else if (*nice_matching_cmd) {
      const NiceMatchingResult r = nice_matching(ctx, parse_vertex_list(set_arg));
      json pairs = json::array();
      for (auto [x, y] : r.pairs) pairs.push_back(json::array({x, y}));
      json certs = json::array();
      for (const auto& c : r.certificates) certs.push_back(certificate_json(c));
      const json out = {{"mult", r.base_mult},
                        {"X", vertex_set_to_json(r.X)},
                        {"Y", vertex_set_to_json(r.Y)},
                        {"pairs", pairs},
                        {"y_independent", r.y_independent(g)},
                        {"certificates_hold", r.certificates_hold()},
                        {"certificates_exhaustive", r.exhaustive},
                        {"embeds_in_dgraph", embed_check(ctx, r)},
                        {"certificates", certs}};
      std::cout << out.dump(2) << "\n";
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
