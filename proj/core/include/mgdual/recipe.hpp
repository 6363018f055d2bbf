#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mgdual/grading.hpp"
#include "mgdual/ideal.hpp"
#include "mgdual/polynomial.hpp"

namespace mgdual {

enum class RecipeKind {
  Leaf,             // a generated ideal
  Sum,              // I + J
  Intersect,        // I cap J
  QuotientByPoly,   // I : g
  QuotientByIdeal,  // I : J
};

struct RecipeNode;
using Recipe = std::shared_ptr<const RecipeNode>;

/// Symbolic description of an ideal built from generated ideals. Nodes are
/// immutable and may be shared between recipes.
struct RecipeNode {
  RecipeKind kind;
  Grading grading;
  std::optional<GradedIdeal> ideal;  // Leaf: the ideal; QuotientByIdeal: the divisor J
  std::optional<Polynomial> divisor;  // QuotientByPoly
  MultiDegree divisor_degree;         // QuotientByPoly: deg g
  std::vector<Recipe> children;
  std::string key;  // structural identity, used for memo sharing
};

Recipe leaf(GradedIdeal ideal);
/// Throws GradingMismatch when the operands use different gradings.
Recipe ideal_sum(Recipe a, Recipe b);
Recipe ideal_intersect(Recipe a, Recipe b);
/// I : g. g must be nonzero and homogeneous.
Recipe quotient_by_poly(Recipe r, Polynomial g);
/// I : J, evaluated as the sum over generators of I : g_i.
Recipe quotient_by_ideal(Recipe r, GradedIdeal j);
/// I : J^p as p nested quotients by J (p = 0 returns r).
Recipe quotient_by_power(Recipe r, const GradedIdeal& j, unsigned p);

/// Short human-readable form, e.g. "((I : J) : J)"; leaves print their generators.
std::string describe(const Recipe& r);

}  // namespace mgdual
