#include "ks/classify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "ks/automorphism.hpp"
#include "ks/cliques.hpp"
#include "ks/coloring.hpp"
#include "ks/error.hpp"
#include "ks/theta.hpp"

namespace ks {

ClassificationReport classify(const Graph& g, const ClassifyOptions& options) {
  if (g.n() == 0) throw DomainError("classify: empty graph");
  if (!is_connected(g)) throw DomainError("classify: graph is disconnected");

  ClassificationReport r;
  r.n = g.n();
  r.alpha = independence_number(g);
  const ParityCheck parity = is_parity_proof(g);
  r.omega = parity.clique_size;
  r.max_clique_count = parity.clique_count;
  r.per_vertex_clique_counts = parity.per_vertex;
  r.parity_proof = parity.parity_proof;
  r.chi = chromatic_number(g);

  const ThetaResult theta = lovasz_theta(g, ThetaOptions{options.tol});
  r.theta = theta.value;
  r.theta_gap = theta.duality_gap;

  r.vertex_transitive = is_vertex_transitive(g);
  if (r.vertex_transitive) {
    r.alpha_star = Rational(r.n, r.omega);
    const double alpha_star = r.alpha_star->convert_to<double>();
    r.fully_contextual = r.alpha < r.theta - options.slack && std::abs(r.theta - alpha_star) <= options.slack;
  }
  r.symmetric_parity = r.parity_proof && r.vertex_transitive;
  return r;
}

std::vector<CensusRow> census_table(std::span<const ScanEntry> entries) {
  std::map<int, CensusRow> rows;
  for (const auto& e : entries) {
    if (!e.report || !e.report->fully_contextual || !e.report->vertex_transitive) continue;
    CensusRow& row = rows[e.report->n];
    row.n = e.report->n;
    ++row.fcvt;
    if (e.report->parity_proof) ++row.pfcvt_by_clique_count[e.report->max_clique_count];
  }
  std::vector<CensusRow> out;
  for (auto& [n, row] : rows) out.push_back(std::move(row));
  return out;
}

CorpusScan corpus_scan(std::span<const Graph> graphs, const ClassifyOptions& options) {
  CorpusScan scan;
  scan.entries.resize(graphs.size());

  auto work = [&](std::size_t i) {
    ScanEntry& e = scan.entries[i];
    e.index = i;
    try {
      e.report = classify(graphs[i], options);
    } catch (const std::exception& ex) {
      e.error = ex.what();
    }
  };

  const std::size_t workers =
      std::clamp<std::size_t>(static_cast<std::size_t>(std::max(options.workers, 1)), 1, std::max<std::size_t>(graphs.size(), 1));
  if (workers == 1) {
    for (std::size_t i = 0; i < graphs.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < graphs.size(); i = next++) work(i);
      });
    }
    for (auto& t : pool) t.join();
  }
  scan.table = census_table(scan.entries);
  return scan;
}

}  // namespace ks
