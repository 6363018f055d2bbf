#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace mgdual {

using Int = std::int64_t;
using IntMatrix = std::vector<std::vector<Int>>;

/// A degree m in Z^k.
class MultiDegree {
public:
  MultiDegree() = default;
  explicit MultiDegree(std::size_t k) : coords_(k, 0) {}
  explicit MultiDegree(std::vector<Int> coords) : coords_(std::move(coords)) {}
  MultiDegree(std::initializer_list<Int> coords) : coords_(coords) {}

  std::size_t size() const noexcept { return coords_.size(); }
  Int operator[](std::size_t i) const { return coords_[i]; }
  Int& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Int>& coords() const noexcept { return coords_; }
  bool is_zero() const noexcept;

  MultiDegree& operator+=(const MultiDegree& other);
  MultiDegree& operator-=(const MultiDegree& other);
  friend MultiDegree operator+(MultiDegree a, const MultiDegree& b) { return a += b; }
  friend MultiDegree operator-(MultiDegree a, const MultiDegree& b) { return a -= b; }

  friend bool operator==(const MultiDegree&, const MultiDegree&) = default;
  friend auto operator<=>(const MultiDegree&, const MultiDegree&) = default;

  /// "(a,b)" for k >= 2, "a" for k == 1.
  std::string to_string() const;

private:
  std::vector<Int> coords_;
};

/// Monomial exponent alpha in Z_{>=0}^N.
class ExponentVector {
public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t n) : exps_(n, 0) {}
  /// Negative entries raise IndexOutOfRange.
  explicit ExponentVector(std::vector<int> exps);
  ExponentVector(std::initializer_list<int> exps);

  static ExponentVector unit(std::size_t n, std::size_t i);

  std::size_t size() const noexcept { return exps_.size(); }
  int operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<int>& exps() const noexcept { return exps_; }
  int total() const noexcept;
  bool is_zero() const noexcept;

  /// True when every entry of *this is <= the matching entry of other.
  bool divides(const ExponentVector& other) const noexcept;

  ExponentVector operator+(const ExponentVector& other) const;
  /// Entry-wise difference; nullopt when some entry would go negative.
  std::optional<ExponentVector> minus(const ExponentVector& other) const;
  /// alpha - e_i, or nullopt when alpha_i == 0.
  std::optional<ExponentVector> decrement(std::size_t i) const;
  ExponentVector increment(std::size_t i) const;

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;

  std::string to_string() const;

private:
  std::vector<int> exps_;
};

struct ExponentHash {
  std::size_t operator()(const ExponentVector& e) const noexcept;
};

struct MultiDegreeHash {
  std::size_t operator()(const MultiDegree& m) const noexcept;
};

/// Canonical monomial order: larger total degree first, ties broken by
/// lexicographically larger exponent first.
struct GrlexGreater {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const noexcept;
};

/// Lexicographic comparison with x_1 > x_2 > ... > x_N.
bool lex_less(const ExponentVector& a, const ExponentVector& b) noexcept;

/// Ordered monomial basis of one graded piece R_m; doubles as the coordinate
/// system of D_0^m. An "anonymous" basis just counts n coordinates.
class MonomialBasis {
public:
  MonomialBasis(MultiDegree degree, std::vector<ExponentVector> monomials);
  static std::shared_ptr<const MonomialBasis> anonymous(std::size_t n);

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }
  const MultiDegree& degree() const noexcept { return degree_; }
  std::span<const ExponentVector> monomials() const noexcept { return monomials_; }
  const ExponentVector& operator[](std::size_t i) const { return monomials_[i]; }
  std::optional<std::size_t> index_of(const ExponentVector& alpha) const;
  bool is_anonymous() const noexcept { return monomials_.empty() && size_ > 0; }

  bool same_coordinates(const MonomialBasis& other) const noexcept;

private:
  MonomialBasis() = default;

  MultiDegree degree_;
  std::vector<ExponentVector> monomials_;
  std::unordered_map<ExponentVector, std::size_t, ExponentHash> index_;
  std::size_t size_ = 0;
};

using BasisPtr = std::shared_ptr<const MonomialBasis>;

enum class TieBreak { GradedLex, ReverseGradedLex };

/// A Z^k-grading of Q[x_1..x_N] given by a degree matrix A (column i is
/// deg x_i) and the inward facet normals B of the weight cone {y : By >= 0}.
/// Construct through validate_grading().
class Grading {
public:
  std::size_t rank() const noexcept { return A_.size(); }
  std::size_t nvars() const noexcept { return names_.size(); }
  const IntMatrix& degree_matrix() const noexcept { return A_; }
  const IntMatrix& cone_matrix() const noexcept { return B_; }
  const std::vector<std::string>& var_names() const noexcept { return names_; }

  MultiDegree zero() const { return MultiDegree(rank()); }
  MultiDegree var_degree(std::size_t i) const;
  MultiDegree degree_of(const ExponentVector& alpha) const;

  /// B*m >= 0.
  bool in_weight_semigroup(const MultiDegree& m) const;
  /// a <=_omega b, i.e. b - a lies in the weight semigroup.
  bool precedes(const MultiDegree& a, const MultiDegree& b) const;

  /// Integer functional (sum of the rows of B); strictly positive on omega \ {0}.
  const std::vector<Int>& level_functional() const noexcept { return level_; }
  Int level(const MultiDegree& m) const;
  /// max_i level(deg x_i).
  Int max_variable_level() const;

  /// All alpha with A*alpha = m, in the canonical (GrlexGreater) order.
  std::vector<ExponentVector> monomials_of_degree(const MultiDegree& m) const;
  BasisPtr monomial_basis(const MultiDegree& m) const;

  /// Integer points s with B*m >= B*s >= 0, lexicographically ascending.
  std::vector<MultiDegree> lattice_points_below(const MultiDegree& m) const;

  /// Linear extension of <=_omega on lattice_points_below(m), built by
  /// repeated sweeps: s is placed once every s - deg x_i is placed or outside omega.
  std::vector<MultiDegree> sort_lattice_points(const MultiDegree& m,
                                               TieBreak tie = TieBreak::GradedLex) const;

  /// Points s of omega with level(s) <= bound.
  std::vector<MultiDegree> level_set(Int bound) const;

  void check_degree(const MultiDegree& m) const;
  void check_exponent(const ExponentVector& alpha) const;

  friend bool operator==(const Grading& a, const Grading& b) {
    return a.A_ == b.A_ && a.B_ == b.B_ && a.names_ == b.names_;
  }

private:
  friend Grading validate_grading(IntMatrix, std::optional<IntMatrix>, std::vector<std::string>);
  Grading(IntMatrix A, IntMatrix B, std::vector<std::string> names);

  IntMatrix A_;
  IntMatrix B_;
  std::vector<std::string> names_;
  std::vector<Int> level_;
};

/// Validates a degree matrix (and optional user cone matrix) and returns the grading.
/// When B is omitted it is computed as the primitive facet normals of cone(A).
/// Empty names default to x1..xN.
Grading validate_grading(IntMatrix A, std::optional<IntMatrix> B = std::nullopt,
                         std::vector<std::string> names = {});

/// Lattice points of the polyhedron {s : H*s >= h}, lexicographically ascending.
/// The polyhedron must be bounded; the integer box is read off its vertices.
std::vector<MultiDegree> bounded_lattice_points(const IntMatrix& H, const std::vector<Int>& h,
                                                std::size_t k);

}  // namespace mgdual
