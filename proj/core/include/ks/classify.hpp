#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ks/contextuality.hpp"
#include "ks/eisenstein.hpp"
#include "ks/graph.hpp"

namespace ks {

struct ClassifyOptions {
  double tol = 1e-6;
  double slack = kThetaSlack;
  int workers = 1;  // corpus_scan only
};

/// All invariants and predicate flags for one graph.
struct ClassificationReport {
  int n = 0;
  int alpha = 0;
  int omega = 0;
  int chi = 0;
  double theta = 0;
  double theta_gap = 0;
  // n / omega; present only for vertex-transitive graphs.
  std::optional<Rational> alpha_star;
  bool vertex_transitive = false;
  bool fully_contextual = false;
  int max_clique_count = 0;
  std::vector<int> per_vertex_clique_counts;
  bool parity_proof = false;
  bool symmetric_parity = false;
};

/// Throws DomainError on a disconnected or empty graph.
ClassificationReport classify(const Graph& g, const ClassifyOptions& options = {});

struct ScanEntry {
  std::size_t index = 0;
  std::optional<ClassificationReport> report;
  std::string error;
};

/// One row of the census table: vertex count, number of fully contextual
/// vertex-transitive graphs, and the parity subset keyed by the number of
/// maximum cliques.
struct CensusRow {
  int n = 0;
  int fcvt = 0;
  std::map<int, int> pfcvt_by_clique_count;
};

struct CorpusScan {
  std::vector<ScanEntry> entries;  // input order
  std::vector<CensusRow> table;    // ascending n, rows with fcvt > 0 only
};

/// Classifies every graph, recording per-graph failures (including
/// disconnected inputs) without stopping. With workers > 1 graphs are
/// handed out to threads; results are stored by input index.
CorpusScan corpus_scan(std::span<const Graph> graphs, const ClassifyOptions& options = {});

std::vector<CensusRow> census_table(std::span<const ScanEntry> entries);

}  // namespace ks
