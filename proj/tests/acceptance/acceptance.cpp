// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "matchroot/errors.hpp"
#include "matchroot/textio.hpp"
#include "matchroot/tuttesets.hpp"
#include "matchroot/verify.hpp"

using namespace matchroot;

namespace {

const char* const kCorpus = "gen:n=2-8,p=2/5,seed=7,count=300";
const char* const kRandomLarge = "gen:n=8-10,p=1/2,seed=2024,count=500";

struct Tally {
  long checks = 0;
  long failures = 0;
  std::string first_failure;

  void check(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      if (failures == 0) first_failure = what;
      ++failures;
    }
  }
};

int g_failed = 0;

void report(int id, const std::string& title, const Tally& t, const std::string& extra = "") {
  const bool ok = t.failures == 0 && t.checks > 0;
  if (!ok) ++g_failed;
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " (" << t.checks << " checks";
  if (!extra.empty()) std::cout << ", " << extra;
  if (!ok) std::cout << ", " << t.failures << " failed, first: " << t.first_failure;
  std::cout << ")" << std::endl;
}

std::vector<Graph> atlas() {
  std::ifstream in(std::string(MATCHROOT_TEST_DATA) + "/atlas_n1_7.g6");
  std::stringstream buf;
  buf << in.rdbuf();
  return read_graph_lines(buf.str());
}

std::string where(const Graph& g, const AlgebraicNumber* t = nullptr) {
  std::string s = to_graph6(g);
  if (t != nullptr) s += " theta=" + theta_to_json(*t).dump();
  return s;
}

void criterion1() {
  Tally t;
  for (const Graph& g : atlas()) t.check(matching_polynomial(g) == matching_polynomial_oracle(g), where(g));
  const long atlas_checks = t.checks;
  for (const Graph& g : CorpusSpec::parse(kRandomLarge).load()) {
    t.check(matching_polynomial(g) == matching_polynomial_oracle(g), where(g));
  }
  report(1, "recurrence equals enumeration oracle", t,
         std::to_string(atlas_checks) + " atlas graphs + " + std::to_string(t.checks - atlas_checks) + " random");
}

void criterion2() {
  Tally t;
  std::ifstream in(std::string(MATCHROOT_TEST_DATA) + "/golden10.g6");
  std::string line;
  std::getline(in, line);
  const Graph g = parse_graph6(line);
  const auto theta = AlgebraicNumber::from_rational(1);
  MatchPolyCache cache(g);
  ThetaContext ctx(cache, theta);
  const int u = 0, v = 1, w = 3, z = 5;
  t.check(ctx.mult() == 2, "mult(1,G) = 2");
  const ThetaDecomposition d = decomposition(ctx);
  t.check(d.A == VertexSet::of({u, v}), "A = {u, v}");
  t.check(d.criticals.size() == 4, "four critical components");
  for (VertexSet c : d.criticals) t.check(c.size() == 2, "critical component of size 2");
  t.check(ctx.mult(g.vertices().without(w).without(z)) == 1, "mult(1, G - wz) = 1");
  t.check(!d_r_graph(ctx, -2).adjacent(w, z), "wz not in D_{-2}(G)");
  MatchPolyCache s_cache(s_graph(g, d));
  ThetaContext s_ctx(s_cache, theta);
  t.check(d_r_graph(s_ctx, -2).adjacent(w, z), "wz in D_{-2}(S(G))");
  t.check(d_graph(ctx) == d_graph(s_ctx), "D(G) = D(S(G))");
  report(2, "golden 10-vertex graph at theta = 1", t);
}

void criteria3to7(const std::vector<Graph>& corpus) {
  Tally triple, ops, closed, constructive, classes;
  long premise_expected = 0, premise_seen = 0;
  long pair_premise_expected = 0, pair_premise_seen = 0, pair_checked = 0;
  long instances = 0, nice_sets = 0, swap_misses = 0;

  for (const Graph& g : corpus) {
    MatchPolyCache cache(g);
    const VertexSet all = g.vertices();
    for (const AlgebraicNumber& theta : theta_candidates(cache)) {
      ++instances;
      const std::string at = where(g, &theta);
      ThetaContext ctx(cache, theta);
      const ThetaDecomposition d = decomposition(ctx);

      // 3
      const auto nice = maximal_nice_sets(ctx);
      triple.check(nice == maximal_extreme_sets_bruteforce(ctx), at + " nice vs extreme");
      triple.check(nice == maximal_tutte_sets_bruteforce(ctx), at + " nice vs Tutte");

      // 4
      std::array<Graph, 5> shifts;
      for (int r = -2; r <= 2; ++r) shifts[static_cast<std::size_t>(r + 2)] = d_r_graph(ctx, r);
      bool partition = true;
      for (int a = 0; a < g.order(); ++a) {
        for (int b = a + 1; b < g.order(); ++b) {
          int hits = 0;
          for (const Graph& h : shifts) hits += h.adjacent(a, b) ? 1 : 0;
          partition = partition && hits == 1;
        }
      }
      ops.check(partition, at + " five-way partition");
      ThetaContext neg(cache, theta.negate());
      for (int r = -2; r <= 2; ++r) {
        ops.check(shifts[static_cast<std::size_t>(r + 2)] == d_r_graph(neg, r), at + " symmetry r=" + std::to_string(r));
      }
      const Graph dg = d_graph(ctx);
      ops.check(complement(dg) == union_edges(shifts[3], shifts[4]), at + " complement");
      const Graph s = s_graph(g, d);
      MatchPolyCache s_cache(s);
      ThetaContext s_ctx(s_cache, theta);
      ops.check(d_graph(s_ctx) == dg, at + " D(S) = D(G)");
      const ThetaDecomposition ds = decomposition(s_ctx);
      ops.check(ds.same_structure(d), at + " decomposition of S");

      // 5
      for (int r = -2; r <= 2; ++r) {
        if (r <= 0 && d.base_mult < 2) ++premise_expected;
        try {
          closed.check(d_r_closed_form_on_s(ctx, d, r) == d_r_graph(s_ctx, r), at + " closed form r=" + std::to_string(r));
        } catch (const PremiseError&) {
          ++premise_seen;
        }
      }
      closed.check(d_graph_closed_form(ctx, d) == dg, at + " D closed form");
      const int s_mult = s_ctx.mult();
      for (int a = 0; a < g.order(); ++a) {
        for (int b = a + 1; b < g.order(); ++b) {
          if (d.A.contains(a) || d.A.contains(b)) continue;
          const VertexSet ca = d.component_of(a);
          const VertexSet cb = d.component_of(b);
          if (d.base_mult < 2 && ca != cb && d.in_critical(a) && d.in_critical(b)) ++pair_premise_expected;
          try {
            const PairPrediction p = predicted_pair_mult_in_s(ctx, d, s_mult, a, b);
            ++pair_checked;
            closed.check(p.value == s_ctx.mult(all.without(a).without(b)), at + " pair in S");
          } catch (const PremiseError&) {
            ++pair_premise_seen;
          }
          if (!d.in_critical(a) && !d.in_critical(b)) {
            ++pair_checked;
            const PairPrediction p = predicted_pair_mult_in_g(ctx, d, a, b);
            closed.check(p.value == ctx.mult(all.without(a).without(b)), at + " pair in G");
          }
        }
      }

      // 6
      for (VertexSet x : nice) {
        ++nice_sets;
        try {
          const NiceMatchingResult r = nice_matching(ctx, x);
          constructive.check(r.is_matching(g) && r.y_independent(g), at + " matching/independence");
          constructive.check(r.exhaustive && r.certificates_hold(), at + " certificates");
          const bool swap_ok = embed_check(g, dg, r);
          if (!swap_ok) ++swap_misses;
          constructive.check(swap_ok, at + " embed_check X=" + vertex_set_to_json(x).dump());
        } catch (const std::exception& e) {
          constructive.check(false, at + " " + e.what());
        }
      }
    }
  }

  // 6, Heilmann-Lieb on every pair of every graph with n <= 7.
  long hl_pairs = 0;
  std::vector<Graph> small = atlas();
  for (const Graph& g : corpus) {
    if (g.order() <= 7) small.push_back(g);
  }
  for (const Graph& g : small) {
    for (int a = 0; a < g.order(); ++a) {
      for (int b = a + 1; b < g.order(); ++b) {
        ++hl_pairs;
        constructive.check(heilmann_lieb_check(g, a, b), where(g) + " Heilmann-Lieb");
      }
    }
  }

  // 7
  SuiteOptions opts;
  opts.properties = {"interlacing",       "theta-stability",    "gallai-critical",         "special-positive",
                     "essential-neighbor", "neutral-neighbor",  "essential-path-endpoints", "all-positive-dichotomy"};
  long class_premise = 0, class_cap = 0;
  for (const PropertyReport& r : run_suite(corpus, opts)) {
    classes.check(r.status == Status::Pass || r.status == Status::PremiseSkipped,
                 r.graph6 + " " + r.property + " " + std::string(to_string(r.status)));
    if (r.status == Status::PremiseSkipped) ++class_premise;
    if (r.status == Status::CapSkipped) ++class_cap;
  }

  report(3, "maximal nice = extreme = Tutte families", triple, std::to_string(instances) + " (graph, root) instances");
  report(4, "operator identities", ops);
  closed.check(premise_seen == premise_expected, "premise-skipped closed forms " + std::to_string(premise_seen) +
                                                     " vs expected " + std::to_string(premise_expected));
  closed.check(pair_premise_seen == pair_premise_expected,
               "premise-skipped pair predictions " + std::to_string(pair_premise_seen) + " vs expected " +
                   std::to_string(pair_premise_expected));
  report(5, "closed forms and pair multiplicities", closed,
         "premise-skipped " + std::to_string(premise_seen) + "/" + std::to_string(premise_expected) +
             " closed forms, " + std::to_string(pair_premise_seen) + "/" + std::to_string(pair_premise_expected) +
             " pairs; " + std::to_string(pair_checked) + " pairs compared");
  report(6, "nice matchings, certificates, embedding, Heilmann-Lieb", constructive,
         std::to_string(nice_sets) + " maximal nice sets, " + std::to_string(swap_misses) + " swap-map misses, " +
             std::to_string(hl_pairs) + " Heilmann-Lieb pairs");
  report(7, "vertex classification properties", classes,
         std::to_string(class_premise) + " premise-skipped, " + std::to_string(class_cap) + " cap-skipped");
}

void criterion8() {
  Tally t;
  const char* spec = "gen:n=3-8,p=1/2,seed=31337,count=40";
  const std::string a = reports_to_json(run_suite(CorpusSpec::parse(spec).load(), SuiteOptions{})).dump(2);
  const std::string b = reports_to_json(run_suite(CorpusSpec::parse(spec).load(), SuiteOptions{})).dump(2);
  t.check(a == b, "two verify runs differ");
  t.check(a.size() > 1000, "report unexpectedly small");
  report(8, "verify JSON is byte-identical across runs", t, std::to_string(a.size()) + " bytes");
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  try {
    criterion1();
    criterion2();
    criteria3to7(CorpusSpec::parse(kCorpus).load());
    criterion8();
  } catch (const std::exception& e) {
    std::cout << "FAIL acceptance aborted: " << e.what() << std::endl;
    return 1;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << "corpus for criteria 3-7: " << kCorpus << "; elapsed " << secs << " s" << std::endl;
  return g_failed == 0 ? 0 : 1;
}
