#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ks/eisenstein.hpp"
#include "ks/ket.hpp"

namespace ks {

/// Dense square matrix over Q(w), row-major.
class ExactMatrix {
 public:
  explicit ExactMatrix(std::size_t dim);

  static ExactMatrix identity(std::size_t dim);
  static ExactMatrix diagonal(std::span<const EisensteinScalar> diag);
  static ExactMatrix scalar(std::size_t dim, const EisensteinScalar& c);

  std::size_t dimension() const { return dim_; }
  EisensteinScalar& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  const EisensteinScalar& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }

  ExactMatrix adjoint() const;
  bool is_hermitian() const;
  EisensteinScalar trace() const;

  // True iff the matrix equals c*I; c is written to *factor when non-null.
  bool is_scalar_multiple_of_identity(EisensteinScalar* factor = nullptr) const;

  ExactMatrix& operator+=(const ExactMatrix& o);
  ExactMatrix& operator-=(const ExactMatrix& o);
  ExactMatrix& operator*=(const EisensteinScalar& c);

  friend ExactMatrix operator+(ExactMatrix x, const ExactMatrix& y) { return x += y; }
  friend ExactMatrix operator-(ExactMatrix x, const ExactMatrix& y) { return x -= y; }
  friend ExactMatrix operator*(ExactMatrix x, const EisensteinScalar& c) { return x *= c; }
  // Throws InputError on dimension mismatch.
  friend ExactMatrix operator*(const ExactMatrix& x, const ExactMatrix& y);
  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

  std::string to_string() const;

 private:
  std::size_t dim_;
  std::vector<EisensteinScalar> data_;
};

/// Dichotomic observable 2|v><v|/<v|v> - I of the ray spanned by v.
/// Hermitian with square equal to the identity.
ExactMatrix observable_from_ray(const Ket& v);

/// Left-to-right product of a nonempty list of equally sized square matrices.
/// Throws InputError for an empty list or mismatched dimensions.
ExactMatrix matrix_product(std::span<const ExactMatrix> ms);

}  // namespace ks
