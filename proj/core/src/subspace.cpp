#include "mgdual/subspace.hpp"

#include "mgdual/error.hpp"

namespace mgdual {

Subspace::Subspace(BasisPtr ambient) : ambient_(std::move(ambient)) {
  if (!ambient_) throw Error(Errc::AmbientMismatch, "null coordinate system");
  basis_ = Matrix(0, ambient_->size());
}

Subspace::Subspace(BasisPtr ambient, Matrix canonical, std::vector<std::size_t> pivots)
    : ambient_(std::move(ambient)), basis_(std::move(canonical)), pivots_(std::move(pivots)) {}

Subspace Subspace::span(BasisPtr ambient, Matrix generators) {
  if (!ambient) throw Error(Errc::AmbientMismatch, "null coordinate system");
  if (generators.rows() == 0) return Subspace(std::move(ambient));
  if (generators.cols() != ambient->size())
    throw Error(Errc::DimensionMismatch, "generator width does not match the ambient dimension");
  auto pivots = rref_in_place(generators);
  return Subspace(std::move(ambient), std::move(generators), std::move(pivots));
}

Subspace Subspace::full(BasisPtr ambient) {
  const std::size_t n = ambient->size();
  std::vector<std::size_t> pivots(n);
  for (std::size_t i = 0; i < n; ++i) pivots[i] = i;
  return Subspace(std::move(ambient), Matrix::identity(n), std::move(pivots));
}

bool Subspace::contains_vector(std::span<const Rational> v) const {
  if (v.size() != ambient_dim()) throw Error(Errc::DimensionMismatch, "vector width");
  std::vector<Rational> w(v.begin(), v.end());
  Rational t;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Rational f = w[pivots_[i]];
    if (sgn(f) == 0) continue;
    auto row = basis_.row(i);
    for (std::size_t j = pivots_[i]; j < w.size(); ++j) {
      if (sgn(row[j]) == 0) continue;
      t = f * row[j];
      w[j] -= t;
    }
  }
  for (const auto& x : w)
    if (sgn(x) != 0) return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  if (!ambient_->same_coordinates(other.ambient()))
    throw Error(Errc::AmbientMismatch, "subspaces live in different coordinate systems");
  if (other.dim() > dim()) return false;
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains_vector(other.basis().row(i))) return false;
  return true;
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.ambient_->same_coordinates(*b.ambient_) && a.basis_ == b.basis_;
}

Subspace kernel(const Matrix& m, BasisPtr domain) {
  if (!domain) domain = MonomialBasis::anonymous(m.cols());
  if (domain->size() != m.cols()) throw Error(Errc::DimensionMismatch, "kernel domain size");
  return Subspace::span(std::move(domain), kernel_basis(m));
}

namespace {
void require_same_ambient(const Subspace& u, const Subspace& v) {
  if (!u.ambient().same_coordinates(v.ambient()))
    throw Error(Errc::AmbientMismatch, "subspaces live in different coordinate systems");
}
}  // namespace

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
  require_same_ambient(u, v);
  if (u.is_zero()) return v;
  if (v.is_zero()) return u;
  Matrix stacked = u.basis();
  stacked.append_rows(v.basis());
  return Subspace::span(u.ambient_ptr(), std::move(stacked));
}

Subspace subspace_intersect(const Subspace& u, const Subspace& v) {
  require_same_ambient(u, v);
  if (u.is_zero() || v.is_full()) return u;
  if (v.is_zero() || u.is_full()) return v;
  const std::size_t n = u.ambient_dim();
  Matrix z(u.dim() + v.dim(), 2 * n);
  for (std::size_t i = 0; i < u.dim(); ++i)
    for (std::size_t j = 0; j < n; ++j) {
      z(i, j) = u.basis()(i, j);
      z(i, n + j) = u.basis()(i, j);
    }
  for (std::size_t i = 0; i < v.dim(); ++i)
    for (std::size_t j = 0; j < n; ++j) z(u.dim() + i, j) = v.basis()(i, j);
  rref_in_place(z);

  Matrix meet(0, n);
  for (std::size_t i = 0; i < z.rows(); ++i) {
    auto row = z.row(i);
    bool left_zero = true;
    for (std::size_t j = 0; j < n && left_zero; ++j) left_zero = sgn(row[j]) == 0;
    if (left_zero) meet.append_row(row.subspan(n, n));
  }
  return Subspace::span(u.ambient_ptr(), std::move(meet));
}

Matrix annihilator(const Subspace& v) {
  if (v.is_zero()) return Matrix::identity(v.ambient_dim());
  return kernel_basis(v.basis());
}

Subspace preimage(const Matrix& map, const Subspace& v, BasisPtr domain) {
  if (map.rows() != v.ambient_dim())
    throw Error(Errc::DimensionMismatch, "map codomain does not match the target subspace");
  if (!domain) domain = MonomialBasis::anonymous(map.cols());
  if (domain->size() != map.cols()) throw Error(Errc::DimensionMismatch, "preimage domain size");
  if (v.is_full()) return Subspace::full(std::move(domain));
  Matrix q = annihilator(v);
  return kernel(q * map, std::move(domain));
}

}  // namespace mgdual
