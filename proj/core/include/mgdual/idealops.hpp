#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "mgdual/dual.hpp"
#include "mgdual/recipe.hpp"

namespace mgdual {

/// A recipe together with the degreewise dual data computed for it. Copies
/// (and presentations derived with with_recipe) share one cache, so common
/// subrecipes and leaf ideals are evaluated once.
class DualPresentation {
public:
  explicit DualPresentation(Recipe recipe, ClosednessRoute route = ClosednessRoute::Auto);
  explicit DualPresentation(GradedIdeal ideal, ClosednessRoute route = ClosednessRoute::Auto);

  /// Another recipe over the same cache.
  DualPresentation with_recipe(Recipe recipe) const;

  const Recipe& recipe() const noexcept { return recipe_; }
  const Grading& grading() const noexcept { return recipe_->grading; }

  /// D_0^m of the recipe's ideal (canonical basis over monomials_of_degree(m)).
  const Subspace& dual_at(const MultiDegree& m);
  /// Same for any node of this presentation's cache.
  const Subspace& dual_at(const Recipe& node, const MultiDegree& m);

  /// Leaf DualTable (created on first use).
  DualTable& table_for(const GradedIdeal& ideal);

private:
  struct Cache;
  DualPresentation(std::shared_ptr<Cache> cache, Recipe recipe);

  std::shared_ptr<Cache> cache_;
  Recipe recipe_;
};

const Subspace& dual_at(DualPresentation& p, const MultiDegree& m);
std::size_t hilbert(DualPresentation& p, const MultiDegree& m);
HilbertTable hilbert_table(DualPresentation& p, std::span<const MultiDegree> region);
HilbertTable hilbert_table(DualPresentation& p, const MultiDegree& max);

/// Degree up to which a leaf ideal must be solved to answer a query.
struct LeafDemand {
  const GradedIdeal* ideal;
  MultiDegree degree;
};
/// Every (leaf, degree) pair that dual_at(p, m) touches, without computing anything.
std::vector<LeafDemand> leaf_requirements(const DualPresentation& p, const MultiDegree& m);

struct MembershipResult {
  bool member = false;
  /// A dual basis functional with witness(g) != 0 when g is not a member.
  std::optional<Functional> witness;
  Rational witness_value;
};

/// Throws NotHomogeneous / ZeroPolynomial for invalid g.
MembershipResult membership(const Polynomial& g, DualPresentation& p);
MembershipResult membership(const Polynomial& g, const GradedIdeal& ideal);

/// I subset of J, tested as D_0^m(I) containing D_0^m(J) at the generator degrees of I and J.
bool containment(const GradedIdeal& i, const GradedIdeal& j);

struct SaturationResult {
  /// Presentation of I : J^p at the stabilizing p.
  DualPresentation result;
  unsigned stabilized_at = 0;
  /// Hilbert values of I : J^q on the window, for q = 0 .. stabilized_at + 1.
  std::vector<HilbertTable> chain;
  /// Equality was observed on the window only; this never certifies global saturation.
  bool window_stabilized = true;
};

/// Iterates I : J^p until two consecutive Hilbert tables agree on the window.
SaturationResult saturate(const DualPresentation& p, const GradedIdeal& j,
                          std::span<const MultiDegree> window);
/// Window = lattice_points_below(max).
SaturationResult saturate(const DualPresentation& p, const GradedIdeal& j, const MultiDegree& max);

struct MultiplicityResult {
  std::size_t multiplicity = 0;
  /// True when the summed degrees provably carry the whole dual space.
  bool complete = false;
  /// Level L of the certifying vanishing band, when complete.
  std::optional<Int> certified_level;
};

/// Sum of hilbert(I, s) over lattice_points_below(bound). Complete when some
/// level L has every s with level(s) <= L inside the region and every s with
/// L - max_variable_level < level(s) <= L carrying a zero dual space; then
/// all higher degrees vanish as well.
MultiplicityResult multiplicity(const GradedIdeal& ideal, const MultiDegree& bound);

/// Basis of {g in R_m : every functional of D_0^m annihilates g}.
std::vector<Polynomial> elements_of_degree(DualPresentation& p, const MultiDegree& m);

}  // namespace mgdual
