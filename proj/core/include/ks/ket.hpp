#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ks/eisenstein.hpp"

namespace ks {

/// Unnormalized nonzero column vector with entries in Q(w).
class Ket {
 public:
  // Throws InputError if the vector is empty or all entries are zero.
  explicit Ket(std::vector<EisensteinScalar> entries);
  Ket(std::initializer_list<EisensteinScalar> entries)
      : Ket(std::vector<EisensteinScalar>(entries)) {}

  std::size_t dimension() const { return entries_.size(); }
  const EisensteinScalar& operator[](std::size_t i) const { return entries_[i]; }
  std::span<const EisensteinScalar> entries() const { return entries_; }

  // <v|v>, a positive rational.
  Rational norm_squared() const;

  std::string to_string() const;

  friend bool operator==(const Ket&, const Ket&) = default;

 private:
  std::vector<EisensteinScalar> entries_;
};

/// Hermitian product sum_i conj(u_i) v_i. Throws InputError on dimension mismatch.
EisensteinScalar inner_product(const Ket& u, const Ket& v);

/// True iff u = c v for some nonzero c in Q(w), decided by cross-multiplication.
bool ray_equal(const Ket& u, const Ket& v);

}  // namespace ks
