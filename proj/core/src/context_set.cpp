#include "ks/context_set.hpp"

#include <algorithm>

#include "ks/error.hpp"

namespace ks {

ContextSet build_context_set(int dimension, const std::vector<NamedBasis>& bases) {
  if (dimension < 1) throw InputError("context set dimension must be positive");
  ContextSet cs;
  cs.dimension = dimension;
  for (const auto& basis : bases) {
    std::vector<int> context;
    for (const auto& v : basis.vectors) {
      if (static_cast<int>(v.dimension()) != dimension) {
        throw InputError("basis " + basis.name + ": vector " + v.to_string() + " has dimension " +
                         std::to_string(v.dimension()) + ", expected " + std::to_string(dimension));
      }
      auto it = std::find_if(cs.rays.begin(), cs.rays.end(), [&](const Ket& r) { return ray_equal(r, v); });
      if (it == cs.rays.end()) {
        cs.rays.push_back(v);
        context.push_back(static_cast<int>(cs.rays.size()) - 1);
      } else {
        context.push_back(static_cast<int>(it - cs.rays.begin()));
      }
    }
    cs.contexts.push_back(std::move(context));
    cs.context_names.push_back(basis.name);
  }
  validate_context_set(cs);
  return cs;
}

std::vector<std::vector<int>> ray_incidence(const ContextSet& cs) {
  std::vector<std::vector<int>> out(cs.rays.size());
  for (std::size_t c = 0; c < cs.contexts.size(); ++c) {
    for (int r : cs.contexts[c]) {
      if (r < 0 || static_cast<std::size_t>(r) >= cs.rays.size()) {
        throw InputError("context " + std::to_string(c) + " references missing ray " + std::to_string(r));
      }
      if (out[r].empty() || out[r].back() != static_cast<int>(c)) out[r].push_back(static_cast<int>(c));
    }
  }
  return out;
}

ContextSetReport validate_context_set(const ContextSet& cs) {
  if (cs.context_names.size() != cs.contexts.size()) throw InputError("context names do not match contexts");
  for (const auto& r : cs.rays) {
    if (static_cast<int>(r.dimension()) != cs.dimension) {
      throw InputError("ray " + r.to_string() + " has wrong dimension");
    }
  }
  for (std::size_t i = 0; i < cs.rays.size(); ++i) {
    for (std::size_t j = i + 1; j < cs.rays.size(); ++j) {
      if (ray_equal(cs.rays[i], cs.rays[j])) {
        throw InputError("rays " + std::to_string(i) + " and " + std::to_string(j) + " are equal");
      }
    }
  }
  const auto incidence = ray_incidence(cs);
  for (std::size_t c = 0; c < cs.contexts.size(); ++c) {
    const auto& ctx = cs.contexts[c];
    const std::string& name = cs.context_names[c];
    if (static_cast<int>(ctx.size()) != cs.dimension) {
      throw InputError("context " + name + " has " + std::to_string(ctx.size()) + " vectors, expected " +
                       std::to_string(cs.dimension));
    }
    for (std::size_t a = 0; a < ctx.size(); ++a) {
      for (std::size_t b = a + 1; b < ctx.size(); ++b) {
        if (ctx[a] == ctx[b]) throw InputError("context " + name + " repeats a ray");
        const auto ip = inner_product(cs.rays[ctx[a]], cs.rays[ctx[b]]);
        if (!ip.is_zero()) {
          throw InputError("context " + name + ": vectors " + cs.rays[ctx[a]].to_string() + " and " +
                           cs.rays[ctx[b]].to_string() + " are not orthogonal (inner product " + ip.to_string() +
                           ")");
        }
      }
    }
  }
  ContextSetReport report;
  report.dimension = cs.dimension;
  report.ray_count = cs.rays.size();
  report.context_count = cs.contexts.size();
  for (const auto& inc : incidence) report.multiplicity.push_back(static_cast<int>(inc.size()));
  report.pairwise_sharing = !incidence.empty() &&
                            std::all_of(incidence.begin(), incidence.end(), [](const auto& v) { return v.size() == 2; });
  return report;
}

std::vector<std::string> ray_labels(const ContextSet& cs) {
  const auto incidence = ray_incidence(cs);
  const bool pairs = cs.contexts.size() <= 9 && !incidence.empty() &&
                     std::all_of(incidence.begin(), incidence.end(), [](const auto& v) { return v.size() == 2; });
  std::vector<std::string> out;
  out.reserve(incidence.size());
  for (std::size_t r = 0; r < incidence.size(); ++r) {
    if (pairs) {
      out.push_back(std::to_string(incidence[r][0] + 1) + std::to_string(incidence[r][1] + 1));
    } else {
      out.push_back("v" + std::to_string(r));
    }
  }
  return out;
}

}  // namespace ks
