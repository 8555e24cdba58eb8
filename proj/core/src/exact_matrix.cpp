#include "ks/exact_matrix.hpp"

#include "ks/error.hpp"

namespace ks {

ExactMatrix::ExactMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

ExactMatrix ExactMatrix::identity(std::size_t dim) { return scalar(dim, 1); }

ExactMatrix ExactMatrix::scalar(std::size_t dim, const EisensteinScalar& c) {
  ExactMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = c;
  return m;
}

ExactMatrix ExactMatrix::diagonal(std::span<const EisensteinScalar> diag) {
  ExactMatrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ExactMatrix ExactMatrix::adjoint() const {
  ExactMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) out(c, r) = (*this)(r, c).conj();
  }
  return out;
}

bool ExactMatrix::is_hermitian() const { return *this == adjoint(); }

EisensteinScalar ExactMatrix::trace() const {
  EisensteinScalar t;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

bool ExactMatrix::is_scalar_multiple_of_identity(EisensteinScalar* factor) const {
  if (dim_ == 0) return false;
  const EisensteinScalar& c = (*this)(0, 0);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t col = 0; col < dim_; ++col) {
      const auto& x = (*this)(r, col);
      if (r == col ? !(x == c) : !x.is_zero()) return false;
    }
  }
  if (factor) *factor = c;
  return true;
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& o) {
  if (o.dim_ != dim_) throw InputError("matrix sum: dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& o) {
  if (o.dim_ != dim_) throw InputError("matrix difference: dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

ExactMatrix& ExactMatrix::operator*=(const EisensteinScalar& c) {
  for (auto& x : data_) x *= c;
  return *this;
}

ExactMatrix operator*(const ExactMatrix& x, const ExactMatrix& y) {
  if (x.dim_ != y.dim_) throw InputError("matrix product: dimension mismatch");
  const std::size_t d = x.dim_;
  ExactMatrix out(d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t k = 0; k < d; ++k) {
      const auto& xrk = x(r, k);
      if (xrk.is_zero()) continue;
      for (std::size_t c = 0; c < d; ++c) {
        if (!y(k, c).is_zero()) out(r, c) += xrk * y(k, c);
      }
    }
  }
  return out;
}

std::string ExactMatrix::to_string() const {
  std::string out;
  for (std::size_t r = 0; r < dim_; ++r) {
    out += '[';
    for (std::size_t c = 0; c < dim_; ++c) {
      if (c) out += ", ";
      out += (*this)(r, c).to_string();
    }
    out += "]\n";
  }
  return out;
}

ExactMatrix observable_from_ray(const Ket& v) {
  const std::size_t d = v.dimension();
  const EisensteinScalar scale = EisensteinScalar(Rational(2) / v.norm_squared());
  ExactMatrix out(d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      out(r, c) = scale * v[r] * v[c].conj();
      if (r == c) out(r, c) -= 1;
    }
  }
  return out;
}

ExactMatrix matrix_product(std::span<const ExactMatrix> ms) {
  if (ms.empty()) throw InputError("matrix_product: empty list");
  ExactMatrix acc = ms.front();
  for (std::size_t i = 1; i < ms.size(); ++i) acc = acc * ms[i];
  return acc;
}

}  // namespace ks
