#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mgdual/grading.hpp"
#include "mgdual/rational.hpp"

namespace mgdual {

/// Sparse polynomial over Q in N variables. Terms are kept in the canonical
/// GrlexGreater order and zero coefficients are never stored.
class Polynomial {
public:
  using Terms = std::map<ExponentVector, Rational, GrlexGreater>;

  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t i);
  static Polynomial monomial(const ExponentVector& alpha, const Rational& c);

  std::size_t nvars() const noexcept { return nvars_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  Rational coefficient(const ExponentVector& alpha) const;
  /// Adds c*x^alpha, dropping the term if it cancels.
  void add_term(const ExponentVector& alpha, const Rational& c);

  /// Common degree of all terms, or nullopt when the polynomial is zero or
  /// not homogeneous.
  std::optional<MultiDegree> homogeneous_degree(const Grading& g) const;
  bool is_homogeneous(const Grading& g) const;
  /// Degrees of all terms, in term order (duplicates kept).
  std::vector<MultiDegree> term_degrees(const Grading& g) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);
  Polynomial operator-() const;
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial pow(unsigned e) const;
  /// x^beta * (*this).
  Polynomial shifted(const ExponentVector& beta) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  /// Renders like "29/16*x1^3 - 2*x1*x2"; the output reparses to the same polynomial.
  std::string to_string(const std::vector<std::string>& names) const;

private:
  void check_vars(const Polynomial& other) const;

  std::size_t nvars_ = 0;
  Terms terms_;
};

}  // namespace mgdual
