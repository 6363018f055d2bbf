#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "mgdual/grading.hpp"
#include "mgdual/ideal.hpp"
#include "mgdual/polynomial.hpp"
#include "mgdual/subspace.hpp"

namespace mgdual {

/// A homogeneous element sum c_alpha * d_alpha[0] of D_0^m. The degree is
/// carried explicitly so the zero functional still knows where it lives.
class Functional {
public:
  using Terms = std::map<ExponentVector, Rational, GrlexGreater>;

  Functional(MultiDegree degree, std::size_t nvars) : degree_(std::move(degree)), nvars_(nvars) {}

  /// d_alpha.
  static Functional basis(const Grading& g, const ExponentVector& alpha);
  /// Builds from terms; throws NotHomogeneous if the terms disagree on degree.
  static Functional from_terms(const Grading& g, const MultiDegree& degree, const Terms& terms);
  /// Row of coordinates in the given monomial basis (which must not be anonymous).
  static Functional from_row(const Grading& g, const MonomialBasis& basis,
                             std::span<const Rational> row);

  const MultiDegree& degree() const noexcept { return degree_; }
  std::size_t nvars() const noexcept { return nvars_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Rational coefficient(const ExponentVector& alpha) const;

  /// Caller guarantees alpha has this functional's degree.
  void add_term(const ExponentVector& alpha, const Rational& c);

  std::vector<Rational> to_row(const MonomialBasis& basis) const;

  Functional& operator+=(const Functional& other);
  Functional& operator*=(const Rational& c);
  friend Functional operator+(Functional a, const Functional& b) { return a += b; }
  friend Functional operator*(const Rational& c, Functional a) { return a *= c; }

  friend bool operator==(const Functional& a, const Functional& b) {
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

  /// "1 * d[0,1] + 1 * d[2,0]"; "0" for the zero functional.
  std::string to_string() const;

private:
  MultiDegree degree_;
  std::size_t nvars_ = 0;
  Terms terms_;
};

/// d_alpha[y](g): the scaled mixed partial of g at y, i.e. the coefficient of
/// (x - y)^alpha in the Taylor expansion of g about y.
Rational eval_functional_at(const ExponentVector& alpha, std::span<const Rational> y,
                            const Polynomial& g);

/// Pairing at the origin: sum_alpha c_alpha * coeff(g, x^alpha).
Rational eval_functional(const Functional& d, const Polynomial& g);

/// Anti-differentiation Phi_i: d_alpha -> d_{alpha - e_i}, dropping alpha_i == 0.
/// The variable index is 0-based.
Functional phi_i(const Grading& g, const Functional& d, std::size_t i);

/// Phi_g(d)(f) = d(g f); degree drops by deg g.
Functional phi_g(const Grading& grading, const Functional& d, const Polynomial& g);

/// Right inverse of Phi_g on d_beta: phi_g(psi_g(beta, g), g) == d_beta.
/// Coefficients are solved from the lex-largest exponent down, pivoting on the
/// lex-smallest term of g.
Functional psi_g(const Grading& grading, const ExponentVector& beta, const Polynomial& g);

/// Basis functionals (rows of the canonical basis) of a dual subspace.
std::vector<Functional> basis_functionals(const Grading& g, const Subspace& s);

/// How C_0^m(I) is obtained from the memoized lower degrees.
enum class ClosednessRoute {
  /// Intersect preimages Phi_i^{-1}(D_0^{m - deg x_i}(I)) in the monomial basis of D_0^m.
  Preimage,
  /// Parametrize (Phi_1 d, ..., Phi_N d) by coordinates in the lower dual spaces and
  /// keep the tuples that integrate to some d; the stacked Phi map is injective off degree 0.
  Integration,
  /// Whichever of the two has fewer unknowns.
  Auto,
};

/// Memo of D_0^m(I) per degree for one ideal. Confined to one task at a time.
class DualTable {
public:
  explicit DualTable(GradedIdeal ideal, ClosednessRoute route = ClosednessRoute::Auto);

  const GradedIdeal& ideal() const noexcept { return ideal_; }
  const Grading& grading() const noexcept { return ideal_.grading(); }
  ClosednessRoute route() const noexcept { return route_; }

  /// Cached monomial basis of R_m (coordinates of D_0^m).
  const BasisPtr& basis(const MultiDegree& m);

  const Subspace* find(const MultiDegree& m) const;
  void store(const MultiDegree& m, Subspace s);
  std::size_t size() const noexcept { return memo_.size(); }
  std::vector<MultiDegree> degrees() const;

private:
  GradedIdeal ideal_;
  ClosednessRoute route_;
  std::map<MultiDegree, Subspace> memo_;
  std::map<MultiDegree, BasisPtr> bases_;
};

/// C_0^m(I); every D_0^{m - deg x_i}(I) with m - deg x_i in omega must already be memoized.
Subspace closedness_subspace(DualTable& table, const MultiDegree& m);
Subspace closedness_subspace(DualTable& table, const MultiDegree& m, ClosednessRoute route);

/// D_0^m(I), computed along sort_lattice_points(m) and memoized.
const Subspace& dual_space(DualTable& table, const MultiDegree& m);

/// D_0 along an explicit order (which must start at 0 and place every
/// s - deg x_i before s); returns the space at the last degree.
const Subspace& dual_space_along(DualTable& table, std::span<const MultiDegree> order);

std::size_t hilbert(DualTable& table, const MultiDegree& m);

using HilbertTable = std::map<MultiDegree, std::size_t>;

HilbertTable hilbert_table(DualTable& table, std::span<const MultiDegree> region);
/// Over the order ideal lattice_points_below(max).
HilbertTable hilbert_table(DualTable& table, const MultiDegree& max);

}  // namespace mgdual
