#include "mgdual/grading.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "mgdual/error.hpp"
#include "mgdual/matrix.hpp"

namespace mgdual {

// ---------------------------------------------------------------------------
// MultiDegree / ExponentVector

bool MultiDegree::is_zero() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](Int c) { return c == 0; });
}

MultiDegree& MultiDegree::operator+=(const MultiDegree& other) {
  if (other.size() != size()) throw Error(Errc::DimensionMismatch, "degree length mismatch");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

MultiDegree& MultiDegree::operator-=(const MultiDegree& other) {
  if (other.size() != size()) throw Error(Errc::DimensionMismatch, "degree length mismatch");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

std::string MultiDegree::to_string() const {
  std::ostringstream os;
  if (coords_.size() == 1) {
    os << coords_[0];
    return os.str();
  }
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) os << (i ? "," : "") << coords_[i];
  os << ')';
  return os.str();
}

ExponentVector::ExponentVector(std::vector<int> exps) : exps_(std::move(exps)) {
  for (int e : exps_)
    if (e < 0) throw Error(Errc::IndexOutOfRange, "negative exponent");
}

ExponentVector::ExponentVector(std::initializer_list<int> exps)
    : ExponentVector(std::vector<int>(exps)) {}

ExponentVector ExponentVector::unit(std::size_t n, std::size_t i) {
  ExponentVector e(n);
  e.exps_.at(i) = 1;
  return e;
}

int ExponentVector::total() const noexcept { return std::accumulate(exps_.begin(), exps_.end(), 0); }

bool ExponentVector::is_zero() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

bool ExponentVector::divides(const ExponentVector& other) const noexcept {
  if (other.size() != size()) return false;
  for (std::size_t i = 0; i < size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

ExponentVector ExponentVector::operator+(const ExponentVector& other) const {
  if (other.size() != size()) throw Error(Errc::DimensionMismatch, "exponent length mismatch");
  ExponentVector r = *this;
  for (std::size_t i = 0; i < size(); ++i) r.exps_[i] += other.exps_[i];
  return r;
}

std::optional<ExponentVector> ExponentVector::minus(const ExponentVector& other) const {
  if (other.size() != size()) throw Error(Errc::DimensionMismatch, "exponent length mismatch");
  ExponentVector r = *this;
  for (std::size_t i = 0; i < size(); ++i) {
    r.exps_[i] -= other.exps_[i];
    if (r.exps_[i] < 0) return std::nullopt;
  }
  return r;
}

std::optional<ExponentVector> ExponentVector::decrement(std::size_t i) const {
  if (exps_.at(i) == 0) return std::nullopt;
  ExponentVector r = *this;
  --r.exps_[i];
  return r;
}

ExponentVector ExponentVector::increment(std::size_t i) const {
  ExponentVector r = *this;
  ++r.exps_.at(i);
  return r;
}

std::string ExponentVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < exps_.size(); ++i) os << (i ? "," : "") << exps_[i];
  os << ')';
  return os.str();
}

std::size_t ExponentHash::operator()(const ExponentVector& e) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int x : e.exps()) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::size_t MultiDegreeHash::operator()(const MultiDegree& m) const noexcept {
  std::size_t h = 0x84222325cbf29ce4ULL;
  for (Int x : m.coords()) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

bool lex_less(const ExponentVector& a, const ExponentVector& b) noexcept {
  return a.exps() < b.exps();
}

bool GrlexGreater::operator()(const ExponentVector& a, const ExponentVector& b) const noexcept {
  const int ta = a.total();
  const int tb = b.total();
  if (ta != tb) return ta > tb;
  return lex_less(b, a);
}

// ---------------------------------------------------------------------------
// MonomialBasis

MonomialBasis::MonomialBasis(MultiDegree degree, std::vector<ExponentVector> monomials)
    : degree_(std::move(degree)), monomials_(std::move(monomials)), size_(monomials_.size()) {
  index_.reserve(monomials_.size());
  for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
}

std::shared_ptr<const MonomialBasis> MonomialBasis::anonymous(std::size_t n) {
  auto b = std::shared_ptr<MonomialBasis>(new MonomialBasis());
  b->size_ = n;
  return b;
}

std::optional<std::size_t> MonomialBasis::index_of(const ExponentVector& alpha) const {
  auto it = index_.find(alpha);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool MonomialBasis::same_coordinates(const MonomialBasis& other) const noexcept {
  if (this == &other) return true;
  return size_ == other.size_ && monomials_ == other.monomials_;
}

// ---------------------------------------------------------------------------
// Grading

namespace {

Int dot(const std::vector<Int>& row, const MultiDegree& m) {
  Int s = 0;
  for (std::size_t j = 0; j < row.size(); ++j) s += row[j] * m[j];
  return s;
}

Int floor_of(const Rational& q) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r.get_si();
}

Int ceil_of(const Rational& q) {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r.get_si();
}

// Solves the square system rows*s = rhs; nullopt when singular.
std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> a,
                                                  std::vector<Rational> rhs) {
  const std::size_t n = rhs.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a[p][c]) == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(rhs[p], rhs[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || sgn(a[r][c]) == 0) continue;
      Rational f = a[r][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
      rhs[r] -= f * rhs[c];
    }
  }
  for (std::size_t c = 0; c < n; ++c) rhs[c] /= a[c][c];
  return rhs;
}

template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n) return;
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

Int gcd_all(const std::vector<Int>& v) {
  Int g = 0;
  for (Int x : v) g = std::gcd(g, x < 0 ? -x : x);
  return g;
}

std::size_t integer_rank(const IntMatrix& m, std::size_t cols) {
  Matrix q(m.size(), cols);
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) q(r, c) = Rational(static_cast<long>(m[r][c]));
  return rank(q);
}

}  // namespace

std::vector<MultiDegree> bounded_lattice_points(const IntMatrix& H, const std::vector<Int>& h,
                                                std::size_t k) {
  if (H.size() != h.size()) throw Error(Errc::DimensionMismatch, "half-space rows/rhs mismatch");
  for (const auto& row : H)
    if (row.size() != k) throw Error(Errc::DimensionMismatch, "half-space row length");
  if (k == 0) return {MultiDegree()};

  std::vector<Rational> lo(k), hi(k);
  bool any_vertex = false;
  for_each_subset(H.size(), k, [&](const std::vector<std::size_t>& rows) {
    std::vector<std::vector<Rational>> a(k, std::vector<Rational>(k));
    std::vector<Rational> rhs(k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) a[i][j] = Rational(static_cast<long>(H[rows[i]][j]));
      rhs[i] = Rational(static_cast<long>(h[rows[i]]));
    }
    auto sol = solve_square(std::move(a), std::move(rhs));
    if (!sol) return;
    for (std::size_t r = 0; r < H.size(); ++r) {
      Rational lhs = 0;
      for (std::size_t j = 0; j < k; ++j) lhs += Rational(static_cast<long>(H[r][j])) * (*sol)[j];
      if (lhs < h[r]) return;
    }
    for (std::size_t j = 0; j < k; ++j) {
      if (!any_vertex || (*sol)[j] < lo[j]) lo[j] = (*sol)[j];
      if (!any_vertex || (*sol)[j] > hi[j]) hi[j] = (*sol)[j];
    }
    any_vertex = true;
  });
  if (!any_vertex) return {};

  std::vector<Int> lower(k), upper(k);
  for (std::size_t j = 0; j < k; ++j) {
    lower[j] = ceil_of(lo[j]);
    upper[j] = floor_of(hi[j]);
    if (lower[j] > upper[j]) return {};
  }

  std::vector<MultiDegree> out;
  MultiDegree s(lower);
  while (true) {
    bool ok = true;
    for (std::size_t r = 0; r < H.size() && ok; ++r) ok = dot(H[r], s) >= h[r];
    if (ok) out.push_back(s);
    std::size_t j = k;
    while (j > 0) {
      --j;
      if (s[j] < upper[j]) {
        ++s[j];
        for (std::size_t t = j + 1; t < k; ++t) s[t] = lower[t];
        break;
      }
      if (j == 0) return out;
    }
  }
}

Grading::Grading(IntMatrix A, IntMatrix B, std::vector<std::string> names)
    : A_(std::move(A)), B_(std::move(B)), names_(std::move(names)), level_(A_.size(), 0) {
  for (const auto& row : B_)
    for (std::size_t j = 0; j < row.size(); ++j) level_[j] += row[j];
}

MultiDegree Grading::var_degree(std::size_t i) const {
  if (i >= nvars()) throw Error(Errc::IndexOutOfRange, "variable index");
  MultiDegree d(rank());
  for (std::size_t r = 0; r < rank(); ++r) d[r] = A_[r][i];
  return d;
}

void Grading::check_degree(const MultiDegree& m) const {
  if (m.size() != rank())
    throw Error(Errc::DimensionMismatch,
                "degree " + m.to_string() + " has length " + std::to_string(m.size()) +
                    ", grading rank is " + std::to_string(rank()));
}

void Grading::check_exponent(const ExponentVector& alpha) const {
  if (alpha.size() != nvars())
    throw Error(Errc::DimensionMismatch, "exponent vector length " + std::to_string(alpha.size()) +
                                             " but ring has " + std::to_string(nvars()) +
                                             " variables");
}

MultiDegree Grading::degree_of(const ExponentVector& alpha) const {
  check_exponent(alpha);
  MultiDegree d(rank());
  for (std::size_t r = 0; r < rank(); ++r)
    for (std::size_t i = 0; i < nvars(); ++i) d[r] += A_[r][i] * alpha[i];
  return d;
}

bool Grading::in_weight_semigroup(const MultiDegree& m) const {
  check_degree(m);
  for (const auto& row : B_)
    if (dot(row, m) < 0) return false;
  return true;
}

bool Grading::precedes(const MultiDegree& a, const MultiDegree& b) const {
  return in_weight_semigroup(b - a);
}

Int Grading::level(const MultiDegree& m) const {
  check_degree(m);
  return dot(level_, m);
}

Int Grading::max_variable_level() const {
  Int w = 0;
  for (std::size_t i = 0; i < nvars(); ++i) w = std::max(w, level(var_degree(i)));
  return w;
}

std::vector<ExponentVector> Grading::monomials_of_degree(const MultiDegree& m) const {
  check_degree(m);
  std::vector<ExponentVector> out;
  if (!in_weight_semigroup(m)) return out;

  const std::size_t n = nvars();
  std::vector<MultiDegree> cols;
  std::vector<Int> col_level;
  for (std::size_t i = 0; i < n; ++i) {
    cols.push_back(var_degree(i));
    col_level.push_back(level(cols.back()));
  }

  std::vector<int> alpha(n, 0);
  // Depth-first over variables; the remaining degree must stay in omega.
  auto dfs = [&](auto&& self, std::size_t i, const MultiDegree& rest) -> void {
    if (i + 1 == n) {
      // Last variable: rest must be an exact multiple of its degree.
      const Int lv = col_level[i];
      const Int lr = dot(level_, rest);
      if (lr % lv != 0) return;
      const Int e = lr / lv;
      MultiDegree r = rest;
      for (std::size_t j = 0; j < r.size(); ++j) r[j] -= e * cols[i][j];
      if (!r.is_zero()) return;
      alpha[i] = static_cast<int>(e);
      out.emplace_back(alpha);
      alpha[i] = 0;
      return;
    }
    const Int max_e = dot(level_, rest) / col_level[i];
    MultiDegree r = rest;
    for (Int e = 0; e <= max_e; ++e) {
      if (e > 0) r -= cols[i];
      if (!in_weight_semigroup(r)) continue;
      alpha[i] = static_cast<int>(e);
      self(self, i + 1, r);
    }
    alpha[i] = 0;
  };
  dfs(dfs, 0, m);
  std::sort(out.begin(), out.end(), GrlexGreater{});
  return out;
}

BasisPtr Grading::monomial_basis(const MultiDegree& m) const {
  return std::make_shared<const MonomialBasis>(m, monomials_of_degree(m));
}

std::vector<MultiDegree> Grading::lattice_points_below(const MultiDegree& m) const {
  check_degree(m);
  if (!in_weight_semigroup(m))
    throw Error(Errc::NotInSemigroup, "degree " + m.to_string() + " is outside the weight cone");
  // B*s >= 0 and -B*s >= -B*m.
  IntMatrix H;
  std::vector<Int> h;
  for (const auto& row : B_) {
    H.push_back(row);
    h.push_back(0);
  }
  for (const auto& row : B_) {
    std::vector<Int> neg(row.size());
    for (std::size_t j = 0; j < row.size(); ++j) neg[j] = -row[j];
    H.push_back(neg);
    h.push_back(-dot(row, m));
  }
  return bounded_lattice_points(H, h, rank());
}

std::vector<MultiDegree> Grading::level_set(Int bound) const {
  IntMatrix H = B_;
  std::vector<Int> h(B_.size(), 0);
  std::vector<Int> neg(level_.size());
  for (std::size_t j = 0; j < level_.size(); ++j) neg[j] = -level_[j];
  H.push_back(neg);
  h.push_back(-bound);
  return bounded_lattice_points(H, h, rank());
}

std::vector<MultiDegree> Grading::sort_lattice_points(const MultiDegree& m, TieBreak tie) const {
  std::vector<MultiDegree> points = lattice_points_below(m);
  const MultiDegree origin = zero();
  std::vector<MultiDegree> unsorted;
  for (auto& s : points)
    if (!s.is_zero()) unsorted.push_back(std::move(s));
  std::stable_sort(unsorted.begin(), unsorted.end(),
                   [&](const MultiDegree& a, const MultiDegree& b) {
                     const Int la = level(a), lb = level(b);
                     if (la != lb) return la < lb;
                     return tie == TieBreak::GradedLex ? a < b : b < a;
                   });

  std::vector<MultiDegree> sorted{origin};
  std::set<MultiDegree> placed{origin};
  std::vector<MultiDegree> cols;
  for (std::size_t i = 0; i < nvars(); ++i) cols.push_back(var_degree(i));

  while (!unsorted.empty()) {
    std::vector<MultiDegree> remaining;
    for (auto& s : unsorted) {
      bool ready = true;
      for (const auto& c : cols) {
        MultiDegree below = s - c;
        if (in_weight_semigroup(below) && !placed.contains(below)) {
          ready = false;
          break;
        }
      }
      if (ready) {
        placed.insert(s);
        sorted.push_back(std::move(s));
      } else {
        remaining.push_back(std::move(s));
      }
    }
    if (remaining.size() == unsorted.size())
      throw Error(Errc::NotPointed, "lattice-point sweep made no progress");
    unsorted = std::move(remaining);
  }
  return sorted;
}

// ---------------------------------------------------------------------------
// validate_grading

Grading validate_grading(IntMatrix A, std::optional<IntMatrix> B, std::vector<std::string> names) {
  if (A.empty() || A.front().empty())
    throw Error(Errc::DimensionMismatch, "degree matrix must be nonempty");
  const std::size_t k = A.size();
  const std::size_t n = A.front().size();
  for (const auto& row : A)
    if (row.size() != n) throw Error(Errc::DimensionMismatch, "degree matrix rows differ in length");

  if (names.empty())
    for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  if (names.size() != n)
    throw Error(Errc::DimensionMismatch, std::to_string(names.size()) + " variable names for " +
                                             std::to_string(n) + " degree columns");
  {
    std::set<std::string> seen(names.begin(), names.end());
    if (seen.size() != names.size())
      throw Error(Errc::DimensionMismatch, "variable names must be unique");
  }

  std::vector<std::vector<Int>> cols(n, std::vector<Int>(k));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t r = 0; r < k; ++r) cols[i][r] = A[r][i];
  for (std::size_t i = 0; i < n; ++i)
    if (gcd_all(cols[i]) == 0)
      throw Error(Errc::NotPointed, "variable " + names[i] + " has degree 0, so R_0 is infinite");

  auto nonneg_on_columns = [&](const std::vector<Int>& b) {
    for (const auto& c : cols) {
      Int s = 0;
      for (std::size_t r = 0; r < k; ++r) s += b[r] * c[r];
      if (s < 0) return false;
    }
    return true;
  };

  IntMatrix cone;
  if (B) {
    for (const auto& row : *B) {
      if (row.size() != k)
        throw Error(Errc::DimensionMismatch, "cone matrix rows must have length " + std::to_string(k));
      if (!nonneg_on_columns(row))
        throw Error(Errc::InvalidB, "some variable degree violates a cone inequality");
    }
    if (B->empty() || integer_rank(*B, k) != k)
      throw Error(Errc::InvalidB, "cone matrix does not describe a pointed cone (rank < k)");
    cone = std::move(*B);
  } else {
    // Facet normals of cone(A): normals of hyperplanes through k-1 independent
    // columns that have every column on one side.
    std::vector<std::vector<Int>> distinct;
    for (const auto& c : cols)
      if (std::find(distinct.begin(), distinct.end(), c) == distinct.end()) distinct.push_back(c);
    std::set<std::vector<Int>> normals;
    for_each_subset(distinct.size(), k - 1, [&](const std::vector<std::size_t>& pick) {
      Matrix sub(k - 1, k);
      for (std::size_t r = 0; r < k - 1; ++r)
        for (std::size_t c = 0; c < k; ++c) sub(r, c) = Rational(static_cast<long>(distinct[pick[r]][c]));
      Matrix ker = kernel_basis(sub);
      if (ker.rows() != 1) return;
      mpz_class lcm = 1;
      for (std::size_t c = 0; c < k; ++c) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), ker(0, c).get_den_mpz_t());
      std::vector<Int> b(k);
      for (std::size_t c = 0; c < k; ++c) {
        Rational v = ker(0, c) * lcm;
        b[c] = mpz_class(v.get_num()).get_si();
      }
      const Int g = gcd_all(b);
      for (auto& x : b) x /= g;
      if (nonneg_on_columns(b)) normals.insert(b);
      for (auto& x : b) x = -x;
      if (nonneg_on_columns(b)) normals.insert(b);
    });
    cone.assign(normals.rbegin(), normals.rend());
    if (cone.empty() || integer_rank(cone, k) != k)
      throw Error(Errc::NotPointed,
                  "weight cone is not pointed and full-dimensional (R_0 is not the constants); "
                  "supply a cone matrix if the cone is lower-dimensional");
    // Opposite normals mean the cone lies in a hyperplane; rank alone does not catch every case.
    for (const auto& b : cone) {
      std::vector<Int> neg(b.size());
      for (std::size_t c = 0; c < k; ++c) neg[c] = -b[c];
      if (normals.contains(neg))
        throw Error(Errc::NotPointed, "weight cone lies in a hyperplane; supply a cone matrix");
    }
  }
  return Grading(std::move(A), std::move(cone), std::move(names));
}

}  // namespace mgdual
