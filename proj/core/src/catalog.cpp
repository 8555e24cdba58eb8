#include "ks/catalog.hpp"

#include "ks/contextuality.hpp"
#include "ks/error.hpp"
#include "ks/generators.hpp"

namespace ks {
namespace {

const EisensteinScalar w = EisensteinScalar::omega();
const EisensteinScalar w2 = EisensteinScalar::omega_squared();

}  // namespace

ContextSet builtin_seven_context() {
  const std::vector<NamedBasis> bases = {
      {"B1", {{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0},
              {0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1}}},
      {"B2", {{1, 0, 0, 0, 0, 0}, {0, 0, 1, 1, 1, 1}, {0, 1, 0, 1, w, w2},
              {0, 1, 1, 0, w2, w}, {0, 1, w, w2, 0, 1}, {0, 1, w2, w, 1, 0}}},
      {"B3", {{0, 1, 0, 0, 0, 0}, {0, 0, 1, 1, 1, 1}, {1, 0, 0, 1, w2, w},
              {1, 0, 1, 0, w, w2}, {1, 0, w2, w, 0, 1}, {1, 0, w, w2, 1, 0}}},
      {"B4", {{0, 0, 1, 0, 0, 0}, {0, 1, 0, 1, w, w2}, {1, 0, 0, 1, w2, w},
              {1, 1, 0, 0, 1, 1}, {w, w2, 0, 1, 0, 1}, {w2, w, 0, 1, 1, 0}}},
      {"B5", {{0, 0, 0, 1, 0, 0}, {0, 1, 1, 0, w2, w}, {1, 0, 1, 0, w, w2},
              {1, 1, 0, 0, 1, 1}, {w2, w, 1, 0, 0, 1}, {w, w2, 1, 0, 1, 0}}},
      {"B6", {{0, 0, 0, 0, 1, 0}, {0, 1, w, w2, 0, 1}, {1, 0, w2, w, 0, 1},
              {w, w2, 0, 1, 0, 1}, {w2, w, 1, 0, 0, 1}, {1, 1, 1, 1, 0, 0}}},
      {"B7", {{0, 0, 0, 0, 0, 1}, {0, 1, w2, w, 1, 0}, {1, 0, w, w2, 1, 0},
              {w2, w, 0, 1, 1, 0}, {w, w2, 1, 0, 1, 0}, {1, 1, 1, 1, 0, 0}}},
  };
  ContextSet cs = build_context_set(6, bases);

  const ContextSetReport report = validate_context_set(cs);
  if (report.ray_count != 21 || report.context_count != 7 || !report.pairwise_sharing) {
    throw std::logic_error("built-in seven-context set failed its integrity check");
  }
  const auto labels = ray_labels(cs);
  std::size_t r = 0;
  for (int i = 1; i <= 7; ++i) {
    for (int j = i + 1; j <= 7; ++j, ++r) {
      if (labels[r] != std::to_string(i) + std::to_string(j)) {
        throw std::logic_error("built-in seven-context set: ray " + std::to_string(r) + " is labelled " +
                               labels[r]);
      }
    }
  }
  return cs;
}

std::optional<Graph> builtin_graph(std::string_view name) {
  if (name == "seven-context") return orthogonality_graph(builtin_seven_context()).graph;
  if (name == "j52") return johnson_graph(5, 2);
  if (name == "j72") return johnson_graph(7, 2);
  if (name == "pentagon") return cycle_graph(5);
  if (name == "petersen") return petersen_graph();
  if (name == "k6") return complete_graph(6);
  return std::nullopt;
}

std::vector<std::string> builtin_graph_names() {
  return {"seven-context", "j52", "j72", "pentagon", "petersen", "k6"};
}

}  // namespace ks
