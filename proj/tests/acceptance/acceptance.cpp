// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.
//
//   acceptance [corpus.g6]
//
// The optional argument replaces the bundled vertex-transitive corpus used by
// criterion 10.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "ks/automorphism.hpp"
#include "ks/catalog.hpp"
#include "ks/classify.hpp"
#include "ks/cliques.hpp"
#include "ks/coloring.hpp"
#include "ks/contextuality.hpp"
#include "ks/generators.hpp"
#include "ks/graph6.hpp"
#include "ks/inequality.hpp"
#include "ks/theta.hpp"

#ifndef KS_TEST_DATA_DIR
#define KS_TEST_DATA_DIR "tests/data"
#endif

using namespace ks;

namespace {

using Clock = std::chrono::steady_clock;

// Collects failed sub-checks for one criterion.
class Check {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  void note(const std::string& s) { notes_.push_back(s); }
  bool ok() const { return failures_.empty(); }
  const std::vector<std::string>& failures() const { return failures_; }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

int g_failed = 0;

void run(int id, const std::string& title, double limit_seconds, const std::function<void(Check&)>& body) {
  Check c;
  const auto t0 = Clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (limit_seconds > 0 && secs >= limit_seconds) {
    c.require(false, "runtime " + std::to_string(secs) + " s exceeds " + std::to_string(limit_seconds) + " s");
  }
  std::string detail;
  for (const auto& n : c.notes()) detail += (detail.empty() ? "" : "; ") + n;
  std::printf("[%s] criterion %d: %s (%.2f s%s%s)\n", c.ok() ? "PASS" : "FAIL", id, title.c_str(), secs,
              detail.empty() ? "" : "; ", detail.c_str());
  for (const auto& f : c.failures()) std::printf("       - %s\n", f.c_str());
  std::fflush(stdout);
  if (!c.ok()) ++g_failed;
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", x);
  return buf;
}

std::vector<int> rays_outside(const ContextSet& cs, std::initializer_list<int> drop) {
  std::vector<int> keep;
  for (int r = 0; r < static_cast<int>(cs.ray_count()); ++r) {
    bool hit = false;
    for (int c : drop) hit |= std::count(cs.contexts[c].begin(), cs.contexts[c].end(), r) > 0;
    if (!hit) keep.push_back(r);
  }
  return keep;
}

ContextSet drop_context(const ContextSet& cs, int drop) {
  std::vector<NamedBasis> bases;
  for (int c = 0; c < static_cast<int>(cs.context_count()); ++c) {
    if (c == drop) continue;
    NamedBasis b{cs.context_names[c], {}};
    for (int r : cs.contexts[c]) b.vectors.push_back(cs.rays[r]);
    bases.push_back(std::move(b));
  }
  return build_context_set(cs.dimension, bases);
}

// Shared checks for the graphs of criteria 4 and 5.
void check_report(Check& c, const ClassificationReport& r, int alpha, int omega, int chi, double theta,
                  const Rational& alpha_star, int cliques, const std::string& tag) {
  c.require(r.alpha == alpha, tag + " alpha = " + std::to_string(r.alpha));
  c.require(r.omega == omega, tag + " omega = " + std::to_string(r.omega));
  c.require(r.chi == chi, tag + " chi = " + std::to_string(r.chi));
  c.require(std::abs(r.theta - theta) <= 1e-4, tag + " theta = " + fmt(r.theta));
  c.require(r.alpha_star && *r.alpha_star == alpha_star, tag + " alpha* mismatch");
  c.require(r.vertex_transitive, tag + " not vertex-transitive");
  c.require(r.max_clique_count == cliques, tag + " clique count = " + std::to_string(r.max_clique_count));
  c.require(std::all_of(r.per_vertex_clique_counts.begin(), r.per_vertex_clique_counts.end(),
                        [](int k) { return k == 2; }),
            tag + " per-vertex clique incidence is not 2");
  c.require(r.fully_contextual, tag + " not fully contextual");
  c.require(r.parity_proof, tag + " parity false");
  c.require(r.symmetric_parity, tag + " symmetric parity false");
}

}  // namespace

int main(int argc, char** argv) {
  const std::string corpus_path = argc > 1 ? argv[1] : std::string(KS_TEST_DATA_DIR) + "/vt_corpus.g6";

  run(1, "built-in set: 7 orthogonal bases in d=6, 21 rays, each in two bases with ij labels", 1.0, [](Check& c) {
    const auto cs = builtin_seven_context();
    const auto rep = validate_context_set(cs);
    c.require(rep.dimension == 6 && rep.context_count == 7, "expected 7 contexts in d = 6");
    c.require(rep.ray_count == 21, "ray count " + std::to_string(rep.ray_count));
    c.require(rep.pairwise_sharing, "some ray is not in exactly two contexts");
    int pairs = 0;
    for (const auto& ctx : cs.contexts) {
      c.require(ctx.size() == 6, "context of wrong size");
      for (std::size_t i = 0; i < ctx.size(); ++i) {
        for (std::size_t j = i + 1; j < ctx.size(); ++j, ++pairs) {
          c.require(inner_product(cs.rays[ctx[i]], cs.rays[ctx[j]]).is_zero(), "non-orthogonal pair");
        }
      }
    }
    for (std::size_t i = 0; i < cs.ray_count(); ++i) {
      for (std::size_t j = i + 1; j < cs.ray_count(); ++j) {
        c.require(!ray_equal(cs.rays[i], cs.rays[j]), "duplicate rays");
      }
    }
    const auto labels = ray_labels(cs);
    const auto inc = ray_incidence(cs);
    for (std::size_t r = 0; r < cs.ray_count(); ++r) {
      const std::string want = std::to_string(inc[r][0] + 1) + std::to_string(inc[r][1] + 1);
      c.require(labels[r] == want, "label " + labels[r] + " != " + want);
    }
    c.note(std::to_string(pairs) + " orthogonal pairs checked exactly");
  });

  run(2, "KS non-colorability; dropping any context breaks parity", 1.0, [](Check& c) {
    const auto cs = builtin_seven_context();
    c.require(!ks_colorable(cs).has_value(), "built-in set is colorable");
    c.require(context_parity(cs).parity_proof, "parity predicate false on the built-in set");
    for (int k = 0; k < 7; ++k) {
      const auto parity = context_parity(drop_context(cs, k));
      c.require(parity.clique_count == 6 && !parity.parity_proof,
                "dropping context " + std::to_string(k + 1) + " keeps parity");
    }
  });

  run(3, "orthogonality graph: 21 vertices, 105 edges, J(7,2); 21 induced J(5,2)", 10.0, [](Check& c) {
    const auto cs = builtin_seven_context();
    const Graph g = orthogonality_graph(cs).graph;
    c.require(g.n() == 21, "vertex count");
    c.require(g.edge_count() == 105, "edge count " + std::to_string(g.edge_count()));
    c.require(is_isomorphic(g, johnson_graph(7, 2)), "not isomorphic to J(7,2)");
    const Graph j52 = johnson_graph(5, 2);
    int copies = 0;
    for (int a = 0; a < 7; ++a) {
      for (int b = a + 1; b < 7; ++b) {
        const auto keep = rays_outside(cs, {a, b});
        if (keep.size() == 10 && is_isomorphic(induced_subgraph(g, keep), j52)) ++copies;
      }
    }
    c.require(copies == 21, "induced J(5,2) copies: " + std::to_string(copies));
    c.note(std::to_string(copies) + " induced J(5,2)");
  });

  run(4, "built-in graph invariants and FC/parity classification", 60.0, [](Check& c) {
    const Graph g = orthogonality_graph(builtin_seven_context()).graph;
    const auto r = classify(g);
    check_report(c, r, 3, 6, 7, 3.5, Rational(7, 2), 7, "seven-context");
    c.require(oracle::alpha(g) == 3, "brute-force alpha differs");
    c.note("theta = " + fmt(r.theta));
  });

  run(5, "J(5,2) invariants; PFCVT", 10.0, [](Check& c) {
    const Graph g = johnson_graph(5, 2);
    const auto r = classify(g);
    check_report(c, r, 2, 4, 5, 2.5, Rational(5, 2), 5, "J(5,2)");
    c.require(oracle::alpha(g) == 2 && oracle::omega(g) == 4 && oracle::chi(g) == 5, "brute-force oracle differs");
    c.note("theta = " + fmt(r.theta));
  });

  run(6, "theta calibration: C5, complete graphs, theta(G) theta(co-G) = n on VT graphs", 0, [](Check& c) {
    const double c5 = lovasz_theta(cycle_graph(5)).value;
    c.require(std::abs(c5 - std::sqrt(5.0)) <= 1e-4, "theta(C5) = " + fmt(c5));
    for (int d = 2; d <= 8; ++d) {
      const double t = lovasz_theta(complete_graph(d)).value;
      c.require(std::abs(t - 1.0) <= 1e-6, "theta(K" + std::to_string(d) + ") = " + fmt(t));
    }
    const std::vector<std::pair<std::string, Graph>> vt{
        {"C5", cycle_graph(5)},
        {"C7", cycle_graph(7)},
        {"Petersen", petersen_graph()},
        {"J(5,2)", johnson_graph(5, 2)},
        {"J(6,2)", johnson_graph(6, 2)},
        {"C13(1,5)", circulant(13, std::vector<int>{1, 5, 8, 12})},
        {"seven-context", orthogonality_graph(builtin_seven_context()).graph},
    };
    double worst = 0;
    for (const auto& [name, g] : vt) {
      c.require(is_vertex_transitive(g), name + " is not vertex-transitive");
      const double prod = lovasz_theta(g).value * lovasz_theta(complement(g)).value;
      const double err = std::abs(prod - g.n()) / g.n();
      worst = std::max(worst, err);
      c.require(err <= 1e-3, name + ": product " + fmt(prod));
    }
    c.note(std::to_string(vt.size()) + " VT graphs, worst relative error " + fmt(worst));
  });

  run(7, "inequality: classical 5, exact quantum 7, numeric 7 on 100 states", 60.0, [](Check& c) {
    const auto cs = builtin_seven_context();
    const auto cm = classical_max(cs);
    c.require(cm.max == 5, "classical max " + std::to_string(cm.max));
    c.require(cm.assignments == (std::uint64_t{1} << 21), "not exhaustive");
    for (const auto& p : context_products(cs)) c.require(p == ExactMatrix::scalar(6, -1), "context product != -I");
    const auto q = quantum_value_exact(cs);
    c.require(q.state_independent && q.value && *q.value == 7, "exact quantum value != 7");
    double worst = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      worst = std::max(worst, std::abs(quantum_value_numeric(cs, seed) - 7.0));
    }
    c.require(worst <= 1e-9, "numeric deviation " + fmt(worst));
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1e", worst);
    c.note(std::string("max |S - 7| = ") + buf);
  });

  run(8, "dimension bound (k, 5k) for k = 1..3; three-clique infeasibility for n <= 64", 0, [](Check& c) {
    for (int k = 1; k <= 3; ++k) {
      const auto b = johnson_dim_bound(k);
      c.require(b.min_extra_rows == k && b.min_dimension == 5 * k, "k = " + std::to_string(k));
      c.require(std::count(b.excluded_dimensions.begin(), b.excluded_dimensions.end(), 4 * k) == 1,
                "d = " + std::to_string(4 * k) + " not excluded");
    }
    int cases = 0;
    for (int n = 4; n <= 64; ++n) {
      for (int w = 2; 2 * w <= n; ++w, ++cases) {
        c.require(!no_three_clique_symmetric_parity(n, w).feasible,
                  "feasible at n = " + std::to_string(n) + ", omega = " + std::to_string(w));
      }
    }
    c.note(std::to_string(cases) + " (n, omega) pairs");
  });

  run(9, "graph6 round trip on 1000 random graphs with n <= 31", 0, [](Check& c) {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> size(0, 31);
    std::uniform_real_distribution<double> density(0.0, 1.0);
    int mismatches = 0;
    for (int i = 0; i < 1000; ++i) {
      const Graph g = oracle::random_graph(size(rng), density(rng), rng);
      const std::string s = to_graph6(g);
      const Graph back = from_graph6(s);
      if (!(back == g) || to_graph6(back) != s) ++mismatches;
    }
    c.require(mismatches == 0, std::to_string(mismatches) + " mismatches");
  });

  run(10, "corpus scan >= 50 graphs/min on n <= 31; reproduces criteria 4-5", 0, [&](Check& c) {
    // Full census needs an external database of all VT graphs; this is the
    // desk-scale substitute.
    std::ifstream in(corpus_path);
    c.require(static_cast<bool>(in), "cannot open " + corpus_path);
    std::vector<Graph> graphs;
    for (auto& rec : read_graph6_stream(in)) {
      c.require(rec.graph.has_value(), "parse error: " + rec.error);
      if (rec.graph) graphs.push_back(*rec.graph);
    }
    const auto t0 = Clock::now();
    const auto scan = corpus_scan(graphs, {.workers = 1});
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    const double per_minute = graphs.size() / std::max(secs, 1e-9) * 60.0;
    c.require(per_minute >= 50.0, "rate " + std::to_string(per_minute) + " graphs/min");
    int max_n = 0;
    bool saw21 = false, saw10 = false;
    for (const auto& e : scan.entries) {
      c.require(!e.report.has_value() || e.report->n <= 31, "graph above 31 vertices");
      if (!e.report) {
        c.require(false, "graph " + std::to_string(e.index) + ": " + e.error);
        continue;
      }
      const auto& r = *e.report;
      max_n = std::max(max_n, r.n);
      if (r.n == 21 && r.omega == 6 && r.max_clique_count == 7) {
        saw21 = true;
        check_report(c, r, 3, 6, 7, 3.5, Rational(7, 2), 7, "corpus n=21");
      }
      if (r.n == 10 && r.omega == 4 && r.alpha == 2) {
        saw10 = true;
        check_report(c, r, 2, 4, 5, 2.5, Rational(5, 2), 5, "corpus n=10");
      }
    }
    c.note(std::to_string(graphs.size()) + " graphs, " + std::to_string(static_cast<int>(per_minute)) +
           " graphs/min (single worker)");
    c.note(std::string("criteria 4-5 graphs present: ") + (saw21 ? "n=21 " : "") + (saw10 ? "n=10" : "none"));
    c.note("full census: not evaluated (external database)");
  });

  std::printf("%s: %d of 10 criteria failed\n", g_failed ? "FAIL" : "PASS", g_failed);
  return g_failed ? 1 : 0;
}
