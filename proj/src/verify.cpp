#include "crossdrop/verify.hpp"

#include <algorithm>
#include <map>
#include <thread>

#include "crossdrop/classify.hpp"
#include "crossdrop/corpus.hpp"
#include "crossdrop/cutsets.hpp"
#include "crossdrop/errors.hpp"

namespace crossdrop {

bool VerifyReport::passed() const { return failures() == 0; }

int VerifyReport::failures() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(),
                                        [](const CheckResult& c) { return !c.passed; }));
}

void VerifyReport::append(const VerifyReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

namespace {

std::string text(const LaurentPoly& p) { return p.to_string(); }
std::string text(const BigInt& n) { return n.str(); }
std::string text(int n) { return std::to_string(n); }
std::string text(bool b) { return b ? "true" : "false"; }
std::string text(const std::string& s) { return s; }
std::string text(const DegreeCoefficient& d) {
  return d.coefficient.str() + " at A^" + std::to_string(d.degree);
}
std::string text(const std::vector<std::vector<EdgeId>>& sets) {
  std::string out = "[";
  for (const auto& s : sets) {
    if (out.size() > 1) out += ' ';
    out += '{';
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    out += '}';
  }
  return out + "]";
}

class Recorder {
 public:
  Recorder(VerifyReport& report, std::string subject)
      : report_(report), subject_(std::move(subject)) {}

  template <class T>
  void equal(const std::string& name, const T& expected, const T& actual) {
    CheckResult r{name, subject_, expected == actual, "", ""};
    if (!r.passed) {
      r.expected = text(expected);
      r.actual = text(actual);
    }
    report_.checks.push_back(std::move(r));
  }

 private:
  VerifyReport& report_;
  std::string subject_;
};

int sign_power(int exponent) { return exponent % 2 == 0 ? 1 : -1; }

bool reduced_positive(const SignedGraph& g) {
  const BridgeInfo bi = bridges_components(g);
  return bi.components == 1 && bi.bridges.empty() && !g.has_loops() && g.all_positive() &&
         g.edge_count() > 0;
}

void flip_checks(const SignedGraph& g, EdgeId e, const VerifyOptions& options, Recorder& rec) {
  const FlipAnalysis flip = analyze_flip(g, e, options.q);
  rec.equal("flip_identity_contracted", flip.flipped, flip.via_contracted);
  rec.equal("flip_identity_deleted", flip.flipped, flip.via_deleted);
  if (!reduced_positive(g)) return;

  const int edges = g.edge_count();
  const int vertices = g.vertex_count();
  const EdgeVerdict verdict = classify_edge(g, e);
  const int span = flip.original.span();
  const int flipped_span = flip.flipped.span();
  if (verdict.split_status == SplitStatus::kKnownSplit) {
    rec.equal("split_span_drop", span - 4, flipped_span);
    rec.equal("split_verdict", std::string("EXACTLY_TWO"), to_string(verdict.verdict));
  } else {
    rec.equal("span_drop", true, flipped_span <= span - 8);
    rec.equal("span_drop_characterization", verdict.verdict == Verdict::kExactlyTwo,
              flipped_span == span - 8);
  }

  if (verdict.multiplicity == 1) {
    const PdsFamily pds = all_maximal_pds(g);
    const int k = pds.containing(e) != nullptr ? 1 : 0;
    const int top_degree = 3 * edges - 2 * vertices;
    rec.equal("flip_top_coefficient",
              DegreeCoefficient{top_degree, BigInt(sign_power(edges - vertices + 1) * k)},
              DegreeCoefficient{top_degree, flip.flipped.coeff(top_degree)});

    const int es = multiplicity_info(g).simplified_edge_count;
    const int es_contracted = multiplicity_info(g.contracted(e)).simplified_edge_count;
    const int bottom_degree = -edges - 2 * vertices + 8;
    rec.equal("flip_bottom_coefficient",
              DegreeCoefficient{bottom_degree,
                                BigInt(sign_power(vertices - 1) * (es_contracted + 2 - es))},
              DegreeCoefficient{bottom_degree, flip.flipped.coeff(bottom_degree)});
    rec.equal("simplified_edge_count", true, es_identity_check(g, e));
  }

  const GraphEdge& edge = g.edge(e);
  for (const GraphEdge& f : g.edges()) {
    if (f.id == e || !f.joins(edge.u, edge.v)) continue;
    const EdgeId pair[] = {e, f.id};
    const SignedGraph rest = g.without_edges(pair);
    if (!is_connected(rest)) continue;
    rec.equal("parallel_cancellation", q_polynomial(rest, options.q), flip.flipped);
  }
}

}  // namespace

VerifyReport verify_abstract(const SignedGraph& g, const std::string& name,
                             std::optional<EdgeId> flip_edge, const VerifyOptions& options,
                             const std::vector<std::string>& edge_names) {
  VerifyReport report;
  Recorder rec(report, name);
  const LaurentPoly q = q_polynomial(g, options.q);
  const bool connected = is_connected(g);
  const bool positive = g.all_positive();
  const bool loopless = !g.has_loops();
  const bool bridgeless = is_bridgeless(g);

  if (connected && positive) {
    rec.equal("tutte_specialization", q, q_via_tutte(g, options.max_subset_edges));
  }
  if (reduced_positive(g)) {
    const ExtremeCoefficients predicted = extreme_coeff_predictions(g);
    const ExtremeCoefficients observed = observed_extremes(q, predicted);
    rec.equal("extreme_max_degree", predicted.highest.degree, q.max_degree());
    rec.equal("extreme_min_degree", predicted.lowest.degree, q.min_degree());
    rec.equal("extreme_highest", predicted.highest, observed.highest);
    rec.equal("extreme_second_highest", predicted.second_highest, observed.second_highest);
    rec.equal("extreme_lowest", predicted.lowest, observed.lowest);
    rec.equal("extreme_second_lowest", predicted.second_lowest, observed.second_lowest);
  }
  if (connected && loopless && g.edge_count() > 0) {
    const LaurentPoly t = tutte_neg_eval(g, options.max_subset_edges);
    const TopCoefficients top = dl_extreme_coeffs(g);
    rec.equal("tutte_top_degree", top.m, t.max_degree());
    rec.equal("tutte_top_coefficient", top.a_m, t.coeff(top.m));
    rec.equal("tutte_top_next_coefficient", top.a_m_minus_1, t.coeff(top.m - 1));
    if (bridgeless) {
      const BottomCoefficients bottom = dual_extreme_coeffs(g);
      rec.equal("tutte_bottom_degree", bottom.n, t.min_degree());
      rec.equal("tutte_bottom_coefficient", bottom.a_n, t.coeff(bottom.n));
      rec.equal("tutte_bottom_next_coefficient", bottom.a_n_plus_1, t.coeff(bottom.n + 1));
    }
  }

  if (flip_edge) {
    const EdgeId e = *flip_edge;
    const std::string label =
        e < static_cast<EdgeId>(edge_names.size()) ? edge_names[e] : "e" + std::to_string(e);
    Recorder flip_rec(report, name + "/" + label);
    flip_checks(g, e, options, flip_rec);
  }
  return report;
}

VerifyReport verify_graph(const SignedPlaneGraph& g, std::optional<EdgeId> flip_edge,
                          const VerifyOptions& options) {
  std::vector<std::string> names;
  for (const PlaneEdge& e : g.edges()) {
    names.resize(std::max<std::size_t>(names.size(), e.id + 1));
    names[e.id] = e.name;
  }
  if (flip_edge) g.edge(*flip_edge);
  VerifyReport report = verify_abstract(g.abstract(), g.name(), flip_edge, options, names);

  VerifyReport plane;
  Recorder rec(plane, g.name());
  const LaurentPoly q = q_polynomial(g, options.q);
  rec.equal("bracket_matches_q", q, kauffman_bracket(build_medial(g), options.bracket));
  const SignedPlaneGraph d = dual(g);
  rec.equal("dual_invariance", q, q_polynomial(d, options.q));
  if (reduced_positive(g.abstract())) {
    // Dual edges keep their ids, so both families compare as id sets.
    rec.equal("cut_multiedge_duality", all_maximal_pds(g.abstract()).sets,
              maximal_multiple_edges(d.abstract()).groups);
    rec.equal("multiedge_cut_duality", maximal_multiple_edges(g.abstract()).groups,
              all_maximal_pds(d.abstract()).sets);
  }
  plane.append(report);
  return plane;
}

namespace {

struct Job {
  std::optional<SignedGraph> abstract;
  std::optional<SignedPlaneGraph> plane;
  std::string name;
};

VerifyReport run_job(const Job& job, const VerifyOptions& options) {
  VerifyReport report;
  if (job.plane) {
    const SignedPlaneGraph& g = *job.plane;
    report.append(verify_graph(g, std::nullopt, options));
    for (const PlaneEdge& e : g.edges()) {
      if (e.sign != Sign::kPositive || g.abstract().edge(e.id).is_loop()) continue;
      VerifyReport one = verify_graph(g, e.id, options);
      for (CheckResult& c : one.checks) {
        if (c.subject != g.name()) report.checks.push_back(std::move(c));
      }
    }
    return report;
  }
  const SignedGraph& g = *job.abstract;
  report.append(verify_abstract(g, job.name, std::nullopt, options));
  for (const GraphEdge& e : g.edges()) {
    VerifyReport one = verify_abstract(g, job.name, e.id, options);
    for (CheckResult& c : one.checks) {
      if (c.subject != job.name) report.checks.push_back(std::move(c));
    }
  }
  return report;
}

}  // namespace

SelftestSummary selftest(const SelftestOptions& options) {
  std::vector<Job> jobs;
  const std::vector<SignedGraph> enumerated =
      enumerate_test_graphs({options.max_vertices, options.max_edges, false});
  for (std::size_t i = 0; i < enumerated.size(); ++i)
    jobs.push_back({enumerated[i], std::nullopt, "enum" + std::to_string(i + 1)});
  int corpus = 0;
  for (CorpusGraph& c : curated_corpus()) {
    if (c.graph.edge_count() > options.verify.bracket.max_crossings) continue;
    jobs.push_back({std::nullopt, std::move(c.graph), c.name});
    ++corpus;
  }

  std::vector<VerifyReport> reports(jobs.size());
  const int threads = std::max(1, std::min<int>(options.threads, static_cast<int>(jobs.size())));
  auto work = [&](int t) {
    for (std::size_t i = t; i < jobs.size(); i += threads) reports[i] = run_job(jobs[i], options.verify);
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }

  SelftestSummary summary;
  summary.enumerated_graphs = static_cast<int>(enumerated.size());
  summary.corpus_graphs = corpus;
  std::map<std::string, CheckTally> tallies;
  for (const VerifyReport& r : reports) {
    for (const CheckResult& c : r.checks) {
      CheckTally& t = tallies[c.name];
      t.name = c.name;
      ++(c.passed ? t.passed : t.failed);
      if (!c.passed) summary.failures.push_back(c);
    }
  }
  for (auto& [name, t] : tallies) summary.tallies.push_back(t);
  return summary;
}

}  // namespace crossdrop
