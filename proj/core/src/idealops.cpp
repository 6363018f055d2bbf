#include "mgdual/idealops.hpp"

#include <map>
#include <set>

#include "mgdual/error.hpp"

namespace mgdual {

struct DualPresentation::Cache {
  explicit Cache(ClosednessRoute r) : route(r) {}

  ClosednessRoute route;
  std::map<std::string, DualTable> leaves;
  std::map<std::string, std::map<MultiDegree, Subspace>> nodes;
  std::map<MultiDegree, BasisPtr> bases;

  const BasisPtr& basis(const Grading& g, const MultiDegree& m) {
    auto it = bases.find(m);
    if (it == bases.end()) it = bases.emplace(m, g.monomial_basis(m)).first;
    return it->second;
  }
};

DualPresentation::DualPresentation(Recipe recipe, ClosednessRoute route)
    : cache_(std::make_shared<Cache>(route)), recipe_(std::move(recipe)) {}

DualPresentation::DualPresentation(GradedIdeal ideal, ClosednessRoute route)
    : DualPresentation(leaf(std::move(ideal)), route) {}

DualPresentation::DualPresentation(std::shared_ptr<Cache> cache, Recipe recipe)
    : cache_(std::move(cache)), recipe_(std::move(recipe)) {}

DualPresentation DualPresentation::with_recipe(Recipe recipe) const {
  if (!(recipe->grading == grading()))
    throw Error(Errc::GradingMismatch, "recipe uses a different grading");
  return DualPresentation(cache_, std::move(recipe));
}

DualTable& DualPresentation::table_for(const GradedIdeal& ideal) {
  auto it = cache_->leaves.find(ideal.canonical_key());
  if (it == cache_->leaves.end())
    it = cache_->leaves.try_emplace(ideal.canonical_key(), ideal, cache_->route).first;
  return it->second;
}

namespace {

// Image of V (a subspace of D_0^{m + deg g}) under Phi_g, in the coordinates of D_0^m.
Matrix phi_image_rows(const Subspace& v, const Polynomial& g, const MonomialBasis& target) {
  const MonomialBasis& source = v.ambient();
  Matrix rows(v.dim(), target.size());
  for (std::size_t r = 0; r < v.dim(); ++r) {
    auto row = v.basis().row(r);
    for (std::size_t a = 0; a < row.size(); ++a) {
      if (sgn(row[a]) == 0) continue;
      for (const auto& [gamma, c] : g.terms())
        if (auto rest = source[a].minus(gamma)) rows(r, *target.index_of(*rest)) += row[a] * c;
    }
  }
  return rows;
}

}  // namespace

const Subspace& DualPresentation::dual_at(const MultiDegree& m) { return dual_at(recipe_, m); }

const Subspace& DualPresentation::dual_at(const Recipe& node, const MultiDegree& m) {
  const Grading& g = node->grading;
  g.check_degree(m);
  if (!(g == grading())) throw Error(Errc::GradingMismatch, "node uses a different grading");
  if (!g.in_weight_semigroup(m))
    throw Error(Errc::NotInSemigroup, "degree " + m.to_string() + " is outside the weight cone");
  if (node->kind == RecipeKind::Leaf) return dual_space(table_for(*node->ideal), m);

  auto& memo = cache_->nodes[node->key];
  if (auto it = memo.find(m); it != memo.end()) return it->second;

  const BasisPtr& bm = cache_->basis(g, m);
  Subspace result(bm);
  switch (node->kind) {
    case RecipeKind::Sum:
      result = subspace_intersect(dual_at(node->children[0], m), dual_at(node->children[1], m));
      break;
    case RecipeKind::Intersect:
      result = subspace_sum(dual_at(node->children[0], m), dual_at(node->children[1], m));
      break;
    case RecipeKind::QuotientByPoly: {
      const Subspace& above = dual_at(node->children[0], m + node->divisor_degree);
      result = Subspace::span(bm, phi_image_rows(above, *node->divisor, *bm));
      break;
    }
    case RecipeKind::QuotientByIdeal: {
      // I : 0 is the whole ring, whose dual is zero in every degree.
      const GradedIdeal& j = *node->ideal;
      Matrix rows(0, bm->size());
      for (std::size_t i = 0; i < j.size(); ++i) {
        const Subspace& above = dual_at(node->children[0], m + j.degrees()[i]);
        rows.append_rows(phi_image_rows(above, j.generators()[i], *bm));
      }
      result = Subspace::span(bm, std::move(rows));
      break;
    }
    case RecipeKind::Leaf:
      break;
  }
  return memo.emplace(m, std::move(result)).first->second;
}

const Subspace& dual_at(DualPresentation& p, const MultiDegree& m) { return p.dual_at(m); }

std::size_t hilbert(DualPresentation& p, const MultiDegree& m) { return p.dual_at(m).dim(); }

HilbertTable hilbert_table(DualPresentation& p, std::span<const MultiDegree> region) {
  HilbertTable out;
  for (const MultiDegree& m : region) out[m] = hilbert(p, m);
  return out;
}

HilbertTable hilbert_table(DualPresentation& p, const MultiDegree& max) {
  const auto region = p.grading().sort_lattice_points(max);
  return hilbert_table(p, region);
}

// ---------------------------------------------------------------------------

namespace {

void collect_demands(const Recipe& node, const MultiDegree& m,
                     std::set<std::pair<std::string, MultiDegree>>& seen,
                     std::vector<LeafDemand>& out) {
  if (!seen.emplace(node->key, m).second) return;
  switch (node->kind) {
    case RecipeKind::Leaf:
      out.push_back({&*node->ideal, m});
      return;
    case RecipeKind::Sum:
    case RecipeKind::Intersect:
      for (const auto& c : node->children) collect_demands(c, m, seen, out);
      return;
    case RecipeKind::QuotientByPoly:
      collect_demands(node->children[0], m + node->divisor_degree, seen, out);
      return;
    case RecipeKind::QuotientByIdeal:
      for (const auto& d : node->ideal->degrees()) collect_demands(node->children[0], m + d, seen, out);
      return;
  }
}

}  // namespace

std::vector<LeafDemand> leaf_requirements(const DualPresentation& p, const MultiDegree& m) {
  p.grading().check_degree(m);
  std::set<std::pair<std::string, MultiDegree>> seen;
  std::vector<LeafDemand> out;
  collect_demands(p.recipe(), m, seen, out);
  return out;
}

// ---------------------------------------------------------------------------

MembershipResult membership(const Polynomial& g, DualPresentation& p) {
  const Grading& grading = p.grading();
  if (g.nvars() != grading.nvars()) throw Error(Errc::DimensionMismatch, "polynomial ring");
  if (g.is_zero()) throw Error(Errc::ZeroPolynomial, "membership of the zero polynomial");
  auto m = g.homogeneous_degree(grading);
  if (!m) throw Error(Errc::NotHomogeneous, g.to_string(grading.var_names()) + " is not homogeneous");

  const Subspace& d = p.dual_at(*m);
  const MonomialBasis& basis = d.ambient();
  MembershipResult out;
  for (std::size_t r = 0; r < d.dim(); ++r) {
    Rational value = 0;
    for (const auto& [alpha, c] : g.terms()) value += d.basis()(r, *basis.index_of(alpha)) * c;
    if (sgn(value) != 0) {
      out.witness = Functional::from_row(grading, basis, d.basis().row(r));
      out.witness_value = value;
      return out;
    }
  }
  out.member = true;
  return out;
}

MembershipResult membership(const Polynomial& g, const GradedIdeal& ideal) {
  DualPresentation p(ideal);
  return membership(g, p);
}

bool containment(const GradedIdeal& i, const GradedIdeal& j) {
  if (!(i.grading() == j.grading())) throw Error(Errc::GradingMismatch, "ideals use different gradings");
  DualTable ti(i), tj(j);
  std::set<MultiDegree> degrees(i.degrees().begin(), i.degrees().end());
  degrees.insert(j.degrees().begin(), j.degrees().end());
  for (const MultiDegree& m : degrees)
    if (!dual_space(ti, m).contains(dual_space(tj, m))) return false;
  return true;
}

// ---------------------------------------------------------------------------

SaturationResult saturate(const DualPresentation& p, const GradedIdeal& j,
                          std::span<const MultiDegree> window) {
  if (window.empty()) throw Error(Errc::WindowEmpty, "saturation window is empty");
  if (!(j.grading() == p.grading())) throw Error(Errc::GradingMismatch, "divisor uses a different grading");
  for (const MultiDegree& m : window) {
    p.grading().check_degree(m);
    if (!p.grading().in_weight_semigroup(m))
      throw Error(Errc::NotInSemigroup, "window degree " + m.to_string() + " is outside the weight cone");
  }

  std::vector<DualPresentation> steps{p};
  std::vector<HilbertTable> chain{hilbert_table(steps.back(), window)};
  // Each step can only lower Hilbert values, so the loop ends.
  for (unsigned q = 1;; ++q) {
    steps.push_back(p.with_recipe(quotient_by_ideal(steps.back().recipe(), j)));
    chain.push_back(hilbert_table(steps.back(), window));
    if (q >= 2 && chain[q] == chain[q - 1])
      return SaturationResult{steps[q - 1], q - 1, std::move(chain), true};
  }
}

SaturationResult saturate(const DualPresentation& p, const GradedIdeal& j, const MultiDegree& max) {
  const auto window = p.grading().lattice_points_below(max);
  return saturate(p, j, window);
}

// ---------------------------------------------------------------------------

MultiplicityResult multiplicity(const GradedIdeal& ideal, const MultiDegree& bound) {
  const Grading& g = ideal.grading();
  g.check_degree(bound);
  if (!g.in_weight_semigroup(bound))
    throw Error(Errc::NotInSemigroup, "bound " + bound.to_string() + " is outside the weight cone");

  DualTable table(ideal);
  dual_space(table, bound);
  const auto region = g.lattice_points_below(bound);
  const std::set<MultiDegree> inside(region.begin(), region.end());

  MultiplicityResult out;
  for (const MultiDegree& s : region) out.multiplicity += table.find(s)->dim();

  // Largest L whose whole sublevel set lies in the region.
  Int top = 0;
  for (;;) {
    bool covered = true;
    for (const MultiDegree& s : g.level_set(top + 1))
      if (!inside.contains(s)) {
        covered = false;
        break;
      }
    if (!covered) break;
    ++top;
  }

  const Int width = g.max_variable_level();
  const auto levels = g.level_set(top);
  for (Int l = 0; l <= top && !out.complete; ++l) {
    bool band_zero = true;
    for (const MultiDegree& s : levels) {
      const Int ls = g.level(s);
      if (ls > l - width && ls <= l && table.find(s)->dim() != 0) {
        band_zero = false;
        break;
      }
    }
    if (band_zero) {
      out.complete = true;
      out.certified_level = l;
    }
  }
  return out;
}

std::vector<Polynomial> elements_of_degree(DualPresentation& p, const MultiDegree& m) {
  const Subspace& d = p.dual_at(m);
  const MonomialBasis& basis = d.ambient();
  const std::size_t nvars = p.grading().nvars();
  Matrix kernel = d.is_zero() ? Matrix::identity(basis.size()) : kernel_basis(d.basis());
  std::vector<Polynomial> out;
  for (std::size_t r = 0; r < kernel.rows(); ++r) {
    Polynomial f(nvars);
    for (std::size_t a = 0; a < basis.size(); ++a) f.add_term(basis[a], kernel(r, a));
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace mgdual
