#include "mgdual/recipe.hpp"

#include "mgdual/error.hpp"

namespace mgdual {

namespace {

void check_same(const Grading& a, const Grading& b) {
  if (!(a == b)) throw Error(Errc::GradingMismatch, "operands use different gradings");
}

std::string ideal_text(const GradedIdeal& i) {
  if (i.is_zero()) return "<0>";
  std::string s = "<";
  for (std::size_t j = 0; j < i.size(); ++j) {
    if (j) s += ", ";
    s += i.generators()[j].to_string(i.grading().var_names());
  }
  return s + ">";
}

}  // namespace

Recipe leaf(GradedIdeal ideal) {
  auto node = std::make_shared<RecipeNode>(RecipeNode{RecipeKind::Leaf, ideal.grading(), std::nullopt,
                                                      std::nullopt, MultiDegree{}, {}, {}});
  node->key = "L[" + ideal.canonical_key() + "]";
  node->ideal = std::move(ideal);
  return node;
}

Recipe ideal_sum(Recipe a, Recipe b) {
  check_same(a->grading, b->grading);
  auto node = std::make_shared<RecipeNode>(
      RecipeNode{RecipeKind::Sum, a->grading, std::nullopt, std::nullopt, MultiDegree{}, {}, {}});
  node->key = "S(" + a->key + "," + b->key + ")";
  node->children = {std::move(a), std::move(b)};
  return node;
}

Recipe ideal_intersect(Recipe a, Recipe b) {
  check_same(a->grading, b->grading);
  auto node = std::make_shared<RecipeNode>(
      RecipeNode{RecipeKind::Intersect, a->grading, std::nullopt, std::nullopt, MultiDegree{}, {}, {}});
  node->key = "I(" + a->key + "," + b->key + ")";
  node->children = {std::move(a), std::move(b)};
  return node;
}

Recipe quotient_by_poly(Recipe r, Polynomial g) {
  const Grading& grading = r->grading;
  if (g.nvars() != grading.nvars()) throw Error(Errc::DimensionMismatch, "divisor ring");
  if (g.is_zero()) throw Error(Errc::ZeroPolynomial, "quotient by the zero polynomial");
  auto d = g.homogeneous_degree(grading);
  if (!d) throw Error(Errc::NotHomogeneous, "divisor " + g.to_string(grading.var_names()) +
                                                " is not homogeneous");
  auto node = std::make_shared<RecipeNode>(
      RecipeNode{RecipeKind::QuotientByPoly, grading, std::nullopt, std::nullopt, *d, {}, {}});
  node->key = "QP(" + r->key + "," + g.to_string(grading.var_names()) + ")";
  node->divisor = std::move(g);
  node->children = {std::move(r)};
  return node;
}

Recipe quotient_by_ideal(Recipe r, GradedIdeal j) {
  check_same(r->grading, j.grading());
  auto node = std::make_shared<RecipeNode>(
      RecipeNode{RecipeKind::QuotientByIdeal, r->grading, std::nullopt, std::nullopt, MultiDegree{}, {}, {}});
  node->key = "QI(" + r->key + "," + j.canonical_key() + ")";
  node->ideal = std::move(j);
  node->children = {std::move(r)};
  return node;
}

Recipe quotient_by_power(Recipe r, const GradedIdeal& j, unsigned p) {
  for (unsigned i = 0; i < p; ++i) r = quotient_by_ideal(std::move(r), j);
  return r;
}

std::string describe(const Recipe& r) {
  switch (r->kind) {
    case RecipeKind::Leaf:
      return ideal_text(*r->ideal);
    case RecipeKind::Sum:
      return "(" + describe(r->children[0]) + " + " + describe(r->children[1]) + ")";
    case RecipeKind::Intersect:
      return "(" + describe(r->children[0]) + " cap " + describe(r->children[1]) + ")";
    case RecipeKind::QuotientByPoly:
      return "(" + describe(r->children[0]) + " : " + r->divisor->to_string(r->grading.var_names()) + ")";
    case RecipeKind::QuotientByIdeal:
      return "(" + describe(r->children[0]) + " : " + ideal_text(*r->ideal) + ")";
  }
  return {};
}

}  // namespace mgdual
