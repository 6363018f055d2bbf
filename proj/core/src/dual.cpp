#include "mgdual/dual.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <unordered_map>

#include "mgdual/error.hpp"

namespace mgdual {

// ---------------------------------------------------------------------------
// Functional

Functional Functional::basis(const Grading& g, const ExponentVector& alpha) {
  Functional d(g.degree_of(alpha), g.nvars());
  d.terms_.emplace(alpha, 1);
  return d;
}

Functional Functional::from_terms(const Grading& g, const MultiDegree& degree, const Terms& terms) {
  g.check_degree(degree);
  Functional d(degree, g.nvars());
  for (const auto& [alpha, c] : terms) {
    if (g.degree_of(alpha) != degree)
      throw Error(Errc::NotHomogeneous, "term d" + alpha.to_string() + " is not of degree " +
                                            degree.to_string());
    d.add_term(alpha, c);
  }
  return d;
}

Functional Functional::from_row(const Grading& g, const MonomialBasis& basis,
                                std::span<const Rational> row) {
  if (row.size() != basis.size()) throw Error(Errc::DimensionMismatch, "row width");
  Functional d(basis.degree(), g.nvars());
  for (std::size_t j = 0; j < row.size(); ++j)
    if (sgn(row[j]) != 0) d.terms_.emplace(basis[j], row[j]);
  return d;
}

Rational Functional::coefficient(const ExponentVector& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Functional::add_term(const ExponentVector& alpha, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(alpha, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

std::vector<Rational> Functional::to_row(const MonomialBasis& basis) const {
  std::vector<Rational> row(basis.size());
  for (const auto& [alpha, c] : terms_) {
    auto idx = basis.index_of(alpha);
    if (!idx) throw Error(Errc::AmbientMismatch, "d" + alpha.to_string() + " is not in the basis");
    row[*idx] = c;
  }
  return row;
}

Functional& Functional::operator+=(const Functional& other) {
  if (other.degree_ != degree_) throw Error(Errc::NotHomogeneous, "adding functionals of different degrees");
  for (const auto& [alpha, c] : other.terms_) add_term(alpha, c);
  return *this;
}

Functional& Functional::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [alpha, coef] : terms_) coef *= c;
  return *this;
}

std::string Functional::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [alpha, c] : terms_) {
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    os << Rational(abs(c)).get_str() << " * d[";
    for (std::size_t i = 0; i < alpha.size(); ++i) os << (i ? "," : "") << alpha[i];
    os << ']';
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Evaluation and the Phi / Psi operators

Rational eval_functional_at(const ExponentVector& alpha, std::span<const Rational> y,
                            const Polynomial& g) {
  if (alpha.size() != g.nvars() || y.size() != g.nvars())
    throw Error(Errc::DimensionMismatch, "evaluation point / exponent length");
  Rational total = 0;
  for (const auto& [beta, c] : g.terms()) {
    if (!alpha.divides(beta)) continue;
    Rational term = c;
    for (std::size_t i = 0; i < beta.size(); ++i) {
      mpz_class binom;
      mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(beta[i]),
                   static_cast<unsigned long>(alpha[i]));
      term *= binom;
      const int gap = beta[i] - alpha[i];
      if (gap > 0) {
        Rational p = 1;
        for (int e = 0; e < gap; ++e) p *= y[i];
        term *= p;
      }
    }
    total += term;
  }
  return total;
}

Rational eval_functional(const Functional& d, const Polynomial& g) {
  if (d.nvars() != g.nvars()) throw Error(Errc::DimensionMismatch, "functional/polynomial ring");
  Rational total = 0;
  // Walk the smaller side.
  if (d.terms().size() <= g.terms().size()) {
    for (const auto& [alpha, c] : d.terms()) {
      auto it = g.terms().find(alpha);
      if (it != g.terms().end()) total += c * it->second;
    }
  } else {
    for (const auto& [alpha, c] : g.terms()) {
      auto it = d.terms().find(alpha);
      if (it != d.terms().end()) total += c * it->second;
    }
  }
  return total;
}

Functional phi_i(const Grading& g, const Functional& d, std::size_t i) {
  if (i >= g.nvars())
    throw Error(Errc::IndexOutOfRange, "variable index " + std::to_string(i) + " >= " +
                                           std::to_string(g.nvars()));
  Functional out(d.degree() - g.var_degree(i), g.nvars());
  for (const auto& [alpha, c] : d.terms())
    if (auto lower = alpha.decrement(i)) out.add_term(*lower, c);
  return out;
}

Functional phi_g(const Grading& grading, const Functional& d, const Polynomial& g) {
  if (g.is_zero()) return Functional(d.degree(), grading.nvars());
  auto deg_g = g.homogeneous_degree(grading);
  if (!deg_g) throw Error(Errc::NotHomogeneous, "Phi_g needs a homogeneous g");
  Functional out(d.degree() - *deg_g, grading.nvars());
  for (const auto& [alpha, c] : d.terms())
    for (const auto& [gamma, gc] : g.terms())
      if (auto rest = alpha.minus(gamma)) out.add_term(*rest, c * gc);
  return out;
}

Functional psi_g(const Grading& grading, const ExponentVector& beta, const Polynomial& g) {
  grading.check_exponent(beta);
  if (g.is_zero()) throw Error(Errc::ZeroPolynomial, "Psi_g is undefined for g = 0");
  auto deg_g = g.homogeneous_degree(grading);
  if (!deg_g) throw Error(Errc::NotHomogeneous, "Psi_g needs a homogeneous g");

  // alpha_0: lex-smallest exponent of g.
  const ExponentVector* pivot = nullptr;
  for (const auto& [gamma, c] : g.terms())
    if (!pivot || lex_less(gamma, *pivot)) pivot = &gamma;
  const Rational pivot_coef = g.coefficient(*pivot);

  const MultiDegree target = grading.degree_of(beta) + *deg_g;
  std::vector<ExponentVector> support = grading.monomials_of_degree(target);
  std::sort(support.begin(), support.end(),
            [](const ExponentVector& a, const ExponentVector& b) { return lex_less(b, a); });

  // c_alpha for alpha = delta + alpha_0 solves
  //   sum_gamma g_gamma c_{delta + gamma} = [delta == beta];
  // every other index delta + gamma is lex-larger, hence already known.
  std::unordered_map<ExponentVector, Rational, ExponentHash> coef;
  Functional out(target, grading.nvars());
  for (const auto& alpha : support) {
    auto delta = alpha.minus(*pivot);
    if (!delta) continue;
    Rational value = (*delta == beta) ? Rational(1) : Rational(0);
    for (const auto& [gamma, gc] : g.terms()) {
      if (gamma == *pivot) continue;
      auto it = coef.find(*delta + gamma);
      if (it != coef.end()) value -= gc * it->second;
    }
    if (sgn(value) == 0) continue;
    value /= pivot_coef;
    out.add_term(alpha, value);
    coef.emplace(alpha, std::move(value));
  }
  return out;
}

std::vector<Functional> basis_functionals(const Grading& g, const Subspace& s) {
  std::vector<Functional> out;
  out.reserve(s.dim());
  for (std::size_t r = 0; r < s.dim(); ++r) out.push_back(Functional::from_row(g, s.ambient(), s.basis().row(r)));
  return out;
}

// ---------------------------------------------------------------------------
// DualTable

DualTable::DualTable(GradedIdeal ideal, ClosednessRoute route)
    : ideal_(std::move(ideal)), route_(route) {}

const BasisPtr& DualTable::basis(const MultiDegree& m) {
  auto it = bases_.find(m);
  if (it == bases_.end()) it = bases_.emplace(m, grading().monomial_basis(m)).first;
  return it->second;
}

const Subspace* DualTable::find(const MultiDegree& m) const {
  auto it = memo_.find(m);
  return it == memo_.end() ? nullptr : &it->second;
}

void DualTable::store(const MultiDegree& m, Subspace s) { memo_.insert_or_assign(m, std::move(s)); }

std::vector<MultiDegree> DualTable::degrees() const {
  std::vector<MultiDegree> out;
  for (const auto& [m, s] : memo_) out.push_back(m);
  return out;
}

// ---------------------------------------------------------------------------
// Closedness subspace

namespace {

struct LowerSpace {
  std::size_t var;
  MultiDegree degree;
  BasisPtr basis;
  const Subspace* space;
};

// D_0^{m - deg x_i}(I) for every i whose shifted degree carries monomials.
std::vector<LowerSpace> lower_spaces(DualTable& table, const MultiDegree& m) {
  const Grading& g = table.grading();
  std::vector<LowerSpace> out;
  for (std::size_t i = 0; i < g.nvars(); ++i) {
    MultiDegree t = m - g.var_degree(i);
    if (!g.in_weight_semigroup(t)) continue;
    const BasisPtr& tb = table.basis(t);
    if (tb->empty()) continue;
    const Subspace* v = table.find(t);
    if (!v)
      throw Error(Errc::MissingPrerequisite,
                  "D_0^" + t.to_string() + " is needed before degree " + m.to_string());
    out.push_back({i, std::move(t), tb, v});
  }
  return out;
}

Subspace closedness_by_preimage(const BasisPtr& bm, const std::vector<LowerSpace>& lower) {
  Subspace c = Subspace::full(bm);
  const std::size_t n = bm->size();
  for (const auto& low : lower) {
    if (low.space->is_full()) continue;
    Matrix phi(low.basis->size(), n);
    for (std::size_t a = 0; a < n; ++a)
      if (auto below = (*bm)[a].decrement(low.var)) phi(*low.basis->index_of(*below), a) = 1;
    c = subspace_intersect(c, preimage(phi, *low.space, bm));
    if (c.is_zero()) break;
  }
  return c;
}

// Kernel basis of a growing set of sparse linear equations, tested one at a
// time: an equation is redundant exactly when it vanishes on the current kernel.
class StreamingKernel {
public:
  explicit StreamingKernel(std::size_t width) : kernel_(Matrix::identity(width)) {}

  std::size_t dim() const noexcept { return kernel_.rows(); }
  const Matrix& basis() const noexcept { return kernel_; }

  void impose(const std::vector<std::pair<std::size_t, Rational>>& eq) {
    const std::size_t k = kernel_.rows();
    if (k == 0 || eq.empty()) return;
    residual_.resize(k);
    std::size_t first = k;
    for (std::size_t r = 0; r < k; ++r) {
      Rational& acc = residual_[r];
      acc = 0;
      for (const auto& [col, val] : eq) {
        const Rational& kv = kernel_(r, col);
        if (sgn(kv) == 0) continue;
        scratch_ = val * kv;
        acc += scratch_;
      }
      if (first == k && sgn(acc) != 0) first = r;
    }
    if (first == k) return;

    Matrix next(0, kernel_.cols());
    std::vector<Rational> row(kernel_.cols());
    for (std::size_t r = 0; r < k; ++r) {
      if (r == first) continue;
      auto src = kernel_.row(r);
      std::copy(src.begin(), src.end(), row.begin());
      if (sgn(residual_[r]) != 0) {
        const Rational f = residual_[r] / residual_[first];
        auto piv = kernel_.row(first);
        for (std::size_t j = 0; j < row.size(); ++j)
          if (sgn(piv[j]) != 0) row[j] -= f * piv[j];
      }
      next.append_row(row);
    }
    rref_in_place(next);
    kernel_ = std::move(next);
  }

private:
  Matrix kernel_;
  std::vector<Rational> residual_;
  Rational scratch_;
};

Subspace closedness_by_integration(const BasisPtr& bm, const std::vector<LowerSpace>& lower,
                                   std::size_t nvars) {
  const std::size_t n = bm->size();
  std::vector<std::size_t> block_of(nvars, SIZE_MAX);
  std::vector<std::size_t> offset(lower.size());
  std::size_t width = 0;
  for (std::size_t b = 0; b < lower.size(); ++b) {
    block_of[lower[b].var] = b;
    offset[b] = width;
    width += lower[b].space->dim();
  }
  if (width == 0) return Subspace(bm);

  StreamingKernel solver(width);
  std::vector<std::pair<std::size_t, std::size_t>> hits;  // (block, index in lower basis)
  std::vector<std::pair<std::size_t, Rational>> eq;
  auto push_block = [&](std::size_t b, std::size_t idx, bool negate) {
    const Matrix& basis = lower[b].space->basis();
    for (std::size_t p = 0; p < basis.rows(); ++p) {
      const Rational& v = basis(p, idx);
      if (sgn(v) == 0) continue;
      eq.emplace_back(offset[b] + p, negate ? Rational(-v) : v);
    }
  };

  // First block hit by each monomial, used to read off the integrated functional.
  std::vector<std::pair<std::size_t, std::size_t>> reader(n);
  for (std::size_t a = 0; a < n && solver.dim() > 0; ++a) {
    const ExponentVector& alpha = (*bm)[a];
    hits.clear();
    for (std::size_t i = 0; i < nvars; ++i) {
      if (alpha[i] == 0) continue;
      const std::size_t b = block_of[i];
      hits.emplace_back(b, *lower[b].basis->index_of(*alpha.decrement(i)));
    }
    reader[a] = hits.front();
    for (std::size_t h = 1; h < hits.size(); ++h) {
      eq.clear();
      push_block(hits[h - 1].first, hits[h - 1].second, false);
      push_block(hits[h].first, hits[h].second, true);
      solver.impose(eq);
    }
  }
  if (solver.dim() == 0) return Subspace(bm);
  // The loop may stop early only when the kernel is already zero, so every reader is set here.

  const Matrix& kernel = solver.basis();
  Matrix c(kernel.rows(), n);
  std::vector<std::vector<Rational>> images(lower.size());
  for (std::size_t r = 0; r < kernel.rows(); ++r) {
    for (std::size_t b = 0; b < lower.size(); ++b) {
      const Matrix& basis = lower[b].space->basis();
      auto& img = images[b];
      img.assign(lower[b].basis->size(), Rational(0));
      for (std::size_t p = 0; p < basis.rows(); ++p) {
        const Rational& coef = kernel(r, offset[b] + p);
        if (sgn(coef) == 0) continue;
        auto row = basis.row(p);
        for (std::size_t j = 0; j < row.size(); ++j)
          if (sgn(row[j]) != 0) img[j] += coef * row[j];
      }
    }
    for (std::size_t a = 0; a < n; ++a) c(r, a) = images[reader[a].first][reader[a].second];
  }
  return Subspace::span(bm, std::move(c));
}

}  // namespace

Subspace closedness_subspace(DualTable& table, const MultiDegree& m) {
  return closedness_subspace(table, m, table.route());
}

Subspace closedness_subspace(DualTable& table, const MultiDegree& m, ClosednessRoute route) {
  const Grading& g = table.grading();
  g.check_degree(m);
  const BasisPtr& bm = table.basis(m);
  if (bm->empty()) return Subspace(bm);
  if (m.is_zero()) return Subspace::full(bm);

  const std::vector<LowerSpace> lower = lower_spaces(table, m);
  if (route == ClosednessRoute::Auto) {
    std::size_t unknowns = 0;
    for (const auto& low : lower) unknowns += low.space->dim();
    route = bm->size() <= unknowns ? ClosednessRoute::Preimage : ClosednessRoute::Integration;
  }
  if (route == ClosednessRoute::Preimage) return closedness_by_preimage(bm, lower);
  return closedness_by_integration(bm, lower, g.nvars());
}

// ---------------------------------------------------------------------------
// Procedure DualSpace

namespace {

Subspace impose_generators(const GradedIdeal& ideal, const MultiDegree& m, Subspace closed) {
  std::vector<const Polynomial*> gens;
  for (std::size_t j = 0; j < ideal.size(); ++j)
    if (ideal.degrees()[j] == m) gens.push_back(&ideal.generators()[j]);
  if (gens.empty() || closed.is_zero()) return closed;

  const MonomialBasis& basis = closed.ambient();
  Matrix values(gens.size(), closed.dim());
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (const auto& [alpha, coef] : gens[j]->terms()) {
      const std::size_t idx = *basis.index_of(alpha);
      for (std::size_t r = 0; r < closed.dim(); ++r) {
        const Rational& v = closed.basis()(r, idx);
        if (sgn(v) != 0) values(j, r) += v * coef;
      }
    }
  Matrix combos = kernel_basis(values);
  if (combos.rows() == 0) return Subspace(closed.ambient_ptr());
  return Subspace::span(closed.ambient_ptr(), combos * closed.basis());
}

void compute_degree(DualTable& table, const MultiDegree& s) {
  Subspace closed = closedness_subspace(table, s);
  table.store(s, impose_generators(table.ideal(), s, std::move(closed)));
}

}  // namespace

const Subspace& dual_space(DualTable& table, const MultiDegree& m) {
  const Grading& g = table.grading();
  g.check_degree(m);
  if (const Subspace* hit = table.find(m)) return *hit;
  if (!g.in_weight_semigroup(m))
    throw Error(Errc::NotInSemigroup, "degree " + m.to_string() + " is outside the weight cone");
  for (const MultiDegree& s : g.sort_lattice_points(m))
    if (!table.find(s)) compute_degree(table, s);
  return *table.find(m);
}

const Subspace& dual_space_along(DualTable& table, std::span<const MultiDegree> order) {
  const Grading& g = table.grading();
  if (order.empty() || !order.front().is_zero())
    throw Error(Errc::MissingPrerequisite, "a linear extension must start at degree 0");
  std::set<MultiDegree> seen;
  for (const MultiDegree& s : order) {
    g.check_degree(s);
    if (!g.in_weight_semigroup(s))
      throw Error(Errc::NotInSemigroup, "degree " + s.to_string() + " is outside the weight cone");
    for (std::size_t i = 0; i < g.nvars(); ++i) {
      MultiDegree t = s - g.var_degree(i);
      if (g.in_weight_semigroup(t) && !seen.contains(t) && !table.find(t))
        throw Error(Errc::MissingPrerequisite,
                    "order places " + s.to_string() + " before " + t.to_string());
    }
    seen.insert(s);
    if (!table.find(s)) compute_degree(table, s);
  }
  return *table.find(order.back());
}

std::size_t hilbert(DualTable& table, const MultiDegree& m) { return dual_space(table, m).dim(); }

HilbertTable hilbert_table(DualTable& table, std::span<const MultiDegree> region) {
  HilbertTable out;
  for (const MultiDegree& m : region) out[m] = hilbert(table, m);
  return out;
}

HilbertTable hilbert_table(DualTable& table, const MultiDegree& max) {
  dual_space(table, max);
  const auto region = table.grading().lattice_points_below(max);
  return hilbert_table(table, region);
}

}  // namespace mgdual
