#include "mgdual/oracle.hpp"

#include "mgdual/error.hpp"

namespace mgdual {

namespace {

void check_in_omega(const Grading& g, const MultiDegree& m) {
  g.check_degree(m);
  if (!g.in_weight_semigroup(m))
    throw Error(Errc::NotInSemigroup, "degree " + m.to_string() + " is outside the weight cone");
}

// Matrix of multiplication by f from R_m into R_{m + deg f}; column j is f * x^{alpha_j}.
Matrix multiplication_map(const Polynomial& f, const MonomialBasis& from, const MonomialBasis& to) {
  Matrix map(to.size(), from.size());
  for (std::size_t j = 0; j < from.size(); ++j)
    for (const auto& [gamma, c] : f.terms()) map(*to.index_of(from[j] + gamma), j) = c;
  return map;
}

Subspace piece(const Recipe& r, const MultiDegree& m) {
  const Grading& g = r->grading;
  switch (r->kind) {
    case RecipeKind::Leaf:
      return oracle_piece(*r->ideal, m);
    case RecipeKind::Sum:
      return subspace_sum(piece(r->children[0], m), piece(r->children[1], m));
    case RecipeKind::Intersect:
      return subspace_intersect(piece(r->children[0], m), piece(r->children[1], m));
    case RecipeKind::QuotientByPoly: {
      BasisPtr here = g.monomial_basis(m);
      Subspace above = piece(r->children[0], m + r->divisor_degree);
      return preimage(multiplication_map(*r->divisor, *here, above.ambient()), above, here);
    }
    case RecipeKind::QuotientByIdeal: {
      BasisPtr here = g.monomial_basis(m);
      Subspace out = Subspace::full(here);
      const GradedIdeal& j = *r->ideal;
      for (std::size_t i = 0; i < j.size(); ++i) {
        Subspace above = piece(r->children[0], m + j.degrees()[i]);
        out = subspace_intersect(out, preimage(multiplication_map(j.generators()[i], *here, above.ambient()),
                                               above, here));
      }
      return out;
    }
  }
  throw Error(Errc::IndexOutOfRange, "unknown recipe node");
}

std::vector<Rational> coefficient_row(const Polynomial& f, const MonomialBasis& basis) {
  std::vector<Rational> row(basis.size());
  for (const auto& [alpha, c] : f.terms()) row[*basis.index_of(alpha)] = c;
  return row;
}

MultiDegree degree_for_membership(const Polynomial& g, const Grading& grading) {
  if (g.nvars() != grading.nvars()) throw Error(Errc::DimensionMismatch, "polynomial ring");
  if (g.is_zero()) return grading.zero();
  auto m = g.homogeneous_degree(grading);
  if (!m) throw Error(Errc::NotHomogeneous, g.to_string(grading.var_names()) + " is not homogeneous");
  return *m;
}

}  // namespace

Subspace oracle_piece(const GradedIdeal& ideal, const MultiDegree& m) {
  const Grading& g = ideal.grading();
  check_in_omega(g, m);
  BasisPtr basis = g.monomial_basis(m);
  Matrix rows(0, basis->size());
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    const MultiDegree rest = m - ideal.degrees()[i];
    if (!g.in_weight_semigroup(rest)) continue;
    for (const ExponentVector& beta : g.monomials_of_degree(rest))
      rows.append_row(coefficient_row(ideal.generators()[i].shifted(beta), *basis));
  }
  return Subspace::span(basis, std::move(rows));
}

Subspace oracle_piece(const Recipe& recipe, const MultiDegree& m) {
  check_in_omega(recipe->grading, m);
  return piece(recipe, m);
}

std::size_t oracle_hilbert(const GradedIdeal& ideal, const MultiDegree& m) {
  Subspace p = oracle_piece(ideal, m);
  return p.ambient_dim() - p.dim();
}

std::size_t oracle_hilbert(const Recipe& recipe, const MultiDegree& m) {
  Subspace p = oracle_piece(recipe, m);
  return p.ambient_dim() - p.dim();
}

bool oracle_membership(const Polynomial& g, const GradedIdeal& ideal) {
  if (g.is_zero()) return true;
  const MultiDegree m = degree_for_membership(g, ideal.grading());
  Subspace p = oracle_piece(ideal, m);
  return p.contains_vector(coefficient_row(g, p.ambient()));
}

bool oracle_membership(const Polynomial& g, const Recipe& recipe) {
  if (g.is_zero()) return true;
  const MultiDegree m = degree_for_membership(g, recipe->grading);
  Subspace p = oracle_piece(recipe, m);
  return p.contains_vector(coefficient_row(g, p.ambient()));
}

}  // namespace mgdual
