#pragma once

#include <cstdint>
#include <json.hpp>
#include <string>
#include <string_view>
#include <vector>

#include "matchroot/graph.hpp"
#include "matchroot/exactpoly.hpp"

namespace matchroot {

enum class Status { Pass, Fail, PremiseSkipped, CapSkipped, Flagged };

std::string_view to_string(Status s);

struct PropertyReport {
  std::string graph6;
  nlohmann::json theta;   // null for properties of the graph alone
  std::string theta_role; // "root", "probe", or empty
  std::string property;
  Status status = Status::Pass;
  nlohmann::json witness; // offending item with expected and actual values
  nlohmann::json detail;  // counters
};

/// Hard size caps for the exponential checks. A check over its cap reports
/// cap-skipped.
struct Caps {
  int oracle = 10;
  int subsets = 10;
  int nice_vs_extreme = 8;
  int paths = 8;
  int heilmann_lieb = 7;
};

/// Either a file of graph6 (or edge-list JSON) lines ("-" for standard input), or a generator spec
/// `gen:n=8,p=0.4,seed=7,count=500`. `n` may be a range `lo-hi`; the flag
/// `exhaustive` lists every labelled graph instead (n <= 6).
struct CorpusSpec {
  bool generated = false;
  std::string path;
  int n_min = 0;
  int n_max = 0;
  Rational p{1, 2};
  std::uint64_t seed = 0;
  int count = 0;
  bool exhaustive = false;

  static CorpusSpec parse(std::string_view text);
  std::vector<Graph> load() const;
};

/// Each graph draws its order uniformly from [n_min, n_max], then visits the
/// pairs (0,1), (0,2), (1,2), (0,3), ... and keeps an edge iff the next
/// mt19937_64 output is below floor(p * 2^64).
std::vector<Graph> generate_random_graphs(int n_min, int n_max, const Rational& p,
                                          std::uint64_t seed, int count);

std::vector<Graph> all_labelled_graphs(int n_min, int n_max);

/// One graph per nonblank line; lines starting with '#' are skipped.
std::vector<Graph> read_graph_lines(std::string_view text);

/// Names of every property, in report order.
const std::vector<std::string>& property_names();

struct SuiteOptions {
  std::vector<std::string> properties;  // empty selects all
  Caps caps;
};

/// The least integer >= 3 that is not a root of p.
Rational probe_theta(const Polynomial& p);

std::vector<PropertyReport> run_on_graph(const Graph& g, const SuiteOptions& opts);
std::vector<PropertyReport> run_suite(const std::vector<Graph>& corpus, const SuiteOptions& opts);

/// Iterates D_theta with theta held fixed at each root of mu(G, x). Status
/// pass means G_depth = G_{depth-1}; fail marks a candidate for follow-up.
std::vector<PropertyReport> explore_iterated_d(const std::vector<Graph>& corpus, int depth = 3);

nlohmann::json report_to_json(const PropertyReport& r);

/// {"reports": [...], "summary": {status: count}}.
nlohmann::json reports_to_json(const std::vector<PropertyReport>& reports);

bool has_failures(const std::vector<PropertyReport>& reports);

}  // namespace matchroot
