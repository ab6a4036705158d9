#include <charconv>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "matchroot/errors.hpp"
#include "matchroot/textio.hpp"
#include "matchroot/verify.hpp"

namespace matchroot {

namespace {

constexpr std::string_view kGenPrefix = "gen:";

int parse_int_field(std::string_view value, std::size_t at) {
  int out = 0;
  const auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || end != value.data() + value.size()) {
    throw ParseError("corpus spec: expected an integer", at);
  }
  return out;
}

}  // namespace

CorpusSpec CorpusSpec::parse(std::string_view text) {
  CorpusSpec spec;
  if (text.substr(0, kGenPrefix.size()) != kGenPrefix) {
    if (text.empty()) throw ParseError("corpus spec: empty", 0);
    spec.path = std::string(text);
    return spec;
  }
  spec.generated = true;
  bool have_n = false;
  bool have_count = false;
  std::size_t pos = kGenPrefix.size();
  while (pos < text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view item = text.substr(pos, end - pos);
    const std::size_t eq = item.find('=');
    const std::string_view key = item.substr(0, eq);
    const std::string_view value = eq == std::string_view::npos ? std::string_view{} : item.substr(eq + 1);
    const std::size_t value_at = pos + eq + 1;
    if (key == "exhaustive" && eq == std::string_view::npos) {
      spec.exhaustive = true;
    } else if (eq == std::string_view::npos) {
      throw ParseError("corpus spec: expected key=value", pos);
    } else if (key == "n") {
      const std::size_t dash = value.find('-');
      if (dash == std::string_view::npos) {
        spec.n_min = spec.n_max = parse_int_field(value, value_at);
      } else {
        spec.n_min = parse_int_field(value.substr(0, dash), value_at);
        spec.n_max = parse_int_field(value.substr(dash + 1), value_at + dash + 1);
      }
      have_n = true;
    } else if (key == "p") {
      try {
        spec.p = parse_rational(value);
      } catch (const ParseError& e) {
        throw ParseError("corpus spec: " + e.reason(), value_at + e.offset());
      }
      if (spec.p < 0 || spec.p > 1) throw ParseError("corpus spec: p outside [0, 1]", value_at);
    } else if (key == "seed") {
      const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), spec.seed);
      if (ec != std::errc() || ptr != value.data() + value.size()) {
        throw ParseError("corpus spec: bad seed", value_at);
      }
    } else if (key == "count") {
      spec.count = parse_int_field(value, value_at);
      have_count = true;
    } else {
      throw ParseError("corpus spec: unknown key '" + std::string(key) + "'", pos);
    }
    pos = end + 1;
  }
  if (!have_n) throw ParseError("corpus spec: missing n", kGenPrefix.size());
  if (spec.n_min < 0 || spec.n_min > spec.n_max || spec.n_max > vertex_cap()) {
    throw ParseError("corpus spec: bad order range", kGenPrefix.size());
  }
  if (spec.exhaustive) {
    if (spec.n_max > 6) throw ParseError("corpus spec: exhaustive needs n <= 6", kGenPrefix.size());
  } else if (!have_count || spec.count < 0) {
    throw ParseError("corpus spec: missing count", kGenPrefix.size());
  }
  return spec;
}

std::vector<Graph> CorpusSpec::load() const {
  if (!generated && path == "-") {
    std::stringstream buf;
    buf << std::cin.rdbuf();
    return read_graph_lines(buf.str());
  }
  if (!generated) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open corpus file " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return read_graph_lines(buf.str());
  }
  if (exhaustive) return all_labelled_graphs(n_min, n_max);
  return generate_random_graphs(n_min, n_max, p, seed, count);
}

std::vector<Graph> generate_random_graphs(int n_min, int n_max, const Rational& p,
                                          std::uint64_t seed, int count) {
  Integer threshold = p.get_num();
  mpz_mul_2exp(threshold.get_mpz_t(), threshold.get_mpz_t(), 64);
  mpz_fdiv_q(threshold.get_mpz_t(), threshold.get_mpz_t(), p.get_den_mpz_t());
  const bool always = mpz_sizeinbase(threshold.get_mpz_t(), 2) > 64;
  const std::uint64_t limit = always ? 0 : static_cast<std::uint64_t>(mpz_get_ui(threshold.get_mpz_t()));

  std::mt19937_64 rng(seed);
  std::vector<Graph> out;
  out.reserve(static_cast<std::size_t>(count));
  const auto span = static_cast<std::uint64_t>(n_max - n_min + 1);
  for (int k = 0; k < count; ++k) {
    const int n = span == 1 ? n_min : n_min + static_cast<int>(rng() % span);
    Graph g(n);
    for (int j = 1; j < n; ++j) {
      for (int i = 0; i < j; ++i) {
        const std::uint64_t draw = rng();
        if (always || draw < limit) g.add_edge(i, j);
      }
    }
    out.push_back(g);
  }
  return out;
}

std::vector<Graph> all_labelled_graphs(int n_min, int n_max) {
  std::vector<Graph> out;
  for (int n = n_min; n <= n_max; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int j = 1; j < n; ++j) {
      for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
    }
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << pairs.size()); ++m) {
      Graph g(n);
      for (std::size_t e = 0; e < pairs.size(); ++e) {
        if ((m >> e) & 1U) g.add_edge(pairs[e].first, pairs[e].second);
      }
      out.push_back(g);
    }
  }
  return out;
}

std::vector<Graph> read_graph_lines(std::string_view text) {
  std::vector<Graph> out;
  std::size_t pos = 0;
  int line_no = 0;
  while (pos < text.size()) {
    ++line_no;
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
    if (!line.empty() && line.front() != '#') {
      try {
        out.push_back(parse_graph_auto(line));
      } catch (const ParseError& e) {
        throw ParseError("corpus line " + std::to_string(line_no) + ": " + e.reason(), pos + e.offset());
      }
    }
    pos = end + 1;
  }
  return out;
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::PremiseSkipped:
      return "premise-skipped";
    case Status::CapSkipped:
      return "cap-skipped";
    case Status::Flagged:
      return "flagged";
  }
  return "?";
}

nlohmann::json report_to_json(const PropertyReport& r) {
  nlohmann::json j;
  j["graph"] = r.graph6;
  j["theta"] = r.theta;
  if (!r.theta_role.empty()) j["theta_role"] = r.theta_role;
  j["property"] = r.property;
  j["status"] = std::string(to_string(r.status));
  if (!r.witness.is_null()) j["witness"] = r.witness;
  if (!r.detail.is_null()) j["detail"] = r.detail;
  return j;
}

nlohmann::json reports_to_json(const std::vector<PropertyReport>& reports) {
  nlohmann::json list = nlohmann::json::array();
  nlohmann::json summary = {{"pass", 0}, {"fail", 0}, {"premise-skipped", 0}, {"cap-skipped", 0},
                            {"flagged", 0}};
  for (const auto& r : reports) {
    list.push_back(report_to_json(r));
    summary[std::string(to_string(r.status))] = summary[std::string(to_string(r.status))].get<int>() + 1;
  }
  return {{"reports", std::move(list)}, {"summary", std::move(summary)}};
}

bool has_failures(const std::vector<PropertyReport>& reports) {
  for (const auto& r : reports) {
    if (r.status == Status::Fail) return true;
  }
  return false;
}

}  // namespace matchroot
