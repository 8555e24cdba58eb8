#include "ks/ket.hpp"

#include <algorithm>

#include "ks/error.hpp"

namespace ks {

Ket::Ket(std::vector<EisensteinScalar> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw InputError("ket has dimension zero");
  if (std::all_of(entries_.begin(), entries_.end(), [](const auto& x) { return x.is_zero(); })) {
    throw InputError("ket is the zero vector");
  }
}

Rational Ket::norm_squared() const {
  Rational total = 0;
  for (const auto& x : entries_) total += x.norm();
  return total;
}

std::string Ket::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ',';
    out += entries_[i].to_string();
  }
  out += ')';
  return out;
}

EisensteinScalar inner_product(const Ket& u, const Ket& v) {
  if (u.dimension() != v.dimension()) {
    throw InputError("inner_product: dimension mismatch (" + std::to_string(u.dimension()) + " vs " +
                     std::to_string(v.dimension()) + ")");
  }
  EisensteinScalar total;
  for (std::size_t i = 0; i < u.dimension(); ++i) total += u[i].conj() * v[i];
  return total;
}

bool ray_equal(const Ket& u, const Ket& v) {
  if (u.dimension() != v.dimension()) throw InputError("ray_equal: dimension mismatch");
  // Pivot on the first nonzero entry of u; u ~ v iff u_i v_p == v_i u_p for all i.
  std::size_t p = 0;
  while (u[p].is_zero()) ++p;
  if (v[p].is_zero()) return false;
  for (std::size_t i = 0; i < u.dimension(); ++i) {
    if (!(u[i] * v[p] == v[i] * u[p])) return false;
  }
  return true;
}

}  // namespace ks
