#pragma once

#include <span>
#include <vector>

#include "mgdual/grading.hpp"
#include "mgdual/matrix.hpp"

namespace mgdual {

/// A linear subspace of Q^n in canonical form: the rows of basis() are the
/// RREF basis, so equal subspaces have identical matrices.
class Subspace {
public:
  /// The zero subspace of the given coordinate system.
  explicit Subspace(BasisPtr ambient);

  /// Row span of generators (any rank).
  static Subspace span(BasisPtr ambient, Matrix generators);
  static Subspace full(BasisPtr ambient);

  std::size_t dim() const noexcept { return basis_.rows(); }
  std::size_t ambient_dim() const noexcept { return ambient_->size(); }
  const Matrix& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  const MonomialBasis& ambient() const noexcept { return *ambient_; }
  const BasisPtr& ambient_ptr() const noexcept { return ambient_; }

  bool is_zero() const noexcept { return dim() == 0; }
  bool is_full() const noexcept { return dim() == ambient_dim(); }

  bool contains_vector(std::span<const Rational> v) const;
  /// other is a subspace of *this.
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b);

private:
  Subspace(BasisPtr ambient, Matrix canonical, std::vector<std::size_t> pivots);

  BasisPtr ambient_;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Canonical basis of the right null space of m, in anonymous coordinates
/// unless a domain coordinate system is supplied.
Subspace kernel(const Matrix& m, BasisPtr domain = nullptr);

Subspace subspace_sum(const Subspace& u, const Subspace& v);
/// Zassenhaus: row-reduce [[U, U], [V, 0]]; rows with zero left half span U cap V.
Subspace subspace_intersect(const Subspace& u, const Subspace& v);

/// Rows spanning {y : y . v = 0 for all v in V}.
Matrix annihilator(const Subspace& v);

/// {x in domain : map * x in V}, computed as kernel(Q * map) with Q = annihilator(V).
Subspace preimage(const Matrix& map, const Subspace& v, BasisPtr domain = nullptr);

}  // namespace mgdual
