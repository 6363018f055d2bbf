#pragma once

// Ideals and random generators shared by the unit and acceptance tests.

#include <mgdual/ideal.hpp>
#include <mgdual/parser.hpp>

#include <algorithm>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace fixtures {

using namespace mgdual;

inline Polynomial poly(const Grading& g, const std::string& text) { return parse_polynomial(text, g.var_names()); }

inline GradedIdeal ideal(const Grading& g, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> ps;
  for (const char* s : gens) ps.push_back(poly(g, s));
  return GradedIdeal(g, std::move(ps));
}

// deg x1 = 1, deg x2 = 2.
inline Grading go_grading() { return validate_grading({{1, 2}}); }
inline GradedIdeal go_ideal() { return ideal(go_grading(), {"29/16*x1^3 - 2*x1*x2", "x2 - x1^2"}); }
inline GradedIdeal go_j() { return ideal(go_grading(), {"x2 - x1^2", "x2^2"}); }

inline Grading hirzebruch_grading() { return validate_grading({{1, 0, 1, 0}, {-2, 1, 0, 1}}); }
inline GradedIdeal hirzebruch_line() { return ideal(hirzebruch_grading(), {"x3 - x1*x2^2"}); }
inline GradedIdeal hirzebruch_curve() {
  return ideal(hirzebruch_grading(), {"x1^2*x2^6 + x1^2*x2^3*x4^3 - x3^2*x4^2"});
}

inline Grading standard_grading(std::size_t n) { return validate_grading({std::vector<Int>(n, 1)}); }

/// Generic positive rational: numerator 1..40, denominator 1..9.
inline Rational generic_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(1, 40), den(1, 9);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline std::string paren(const Rational& q) { return "(" + q.get_str() + ")"; }

/// Homogenized one-site phosphorylation system and the ideal <t>.
inline std::pair<GradedIdeal, GradedIdeal> phosphorylation(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Grading g = validate_grading({{1, 1, 1, 1, 1, 1, 1}}, std::nullopt,
                                     {"xE", "xF", "xS0", "xS1", "xX1", "xY1", "t"});
  auto r = [&] { return paren(generic_rational(rng)); };
  const std::string cE = r(), cF = r(), cS0 = r(), cS1 = r(), cX1 = r(), cY1 = r();
  const std::string k01 = r(), k10 = r(), k12 = r(), k34 = r(), k43 = r(), k45 = r();
  std::vector<Polynomial> f = {
      poly(g, "xE + xX1 - (" + cE + " + " + cX1 + ")*t"),
      poly(g, "xF + xY1 - (" + cF + " + " + cY1 + ")*t"),
      poly(g, "xS0 + xS1 - xE - xF - (" + cS0 + " + " + cS1 + " - " + cE + " - " + cF + ")*t"),
      poly(g, "-" + k01 + "*xS0*xE + " + k10 + "*xX1*t + " + k45 + "*xY1*t"),
      poly(g, "-" + k34 + "*xS1*xF + " + k12 + "*xX1*t + " + k43 + "*xY1*t"),
      poly(g, k01 + "*xS0*xE - (" + k10 + " + " + k12 + ")*xX1*t"),
      poly(g, k34 + "*xS1*xF - (" + k43 + " + " + k45 + ")*xY1*t"),
  };
  return {GradedIdeal(g, std::move(f)), ideal(g, {"t"})};
}

/// Two-parameter system in P^1 x P^2 (deg sigma = deg tau = (1,0), deg u = deg v = deg w = (0,1)),
/// homogenized to bidegree (1,4) and sliced by a generic (0,1) linear form; paired with <u*v>.
inline std::pair<GradedIdeal, GradedIdeal> parameter_geography(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Grading g = validate_grading({{1, 1, 0, 0, 0}, {0, 0, 1, 1, 1}}, std::nullopt,
                                     {"sigma", "tau", "u", "v", "w"});
  std::vector<std::string> th(9);
  for (int i = 1; i <= 8; ++i) th[i] = paren(generic_rational(rng));
  auto T = [&](int i) { return th[i]; };
  const std::string p1 =
      T(1) + "*v^2 + u*v + " + T(2) + "*u^2 + (" + T(1) + "*" + T(3) + " - " + T(1) + "*" + T(3) + "*sigma - " + T(1) +
      " + " + T(7) + ")*u*v^2 + (" + T(4) + " - " + T(4) + "*sigma - 1 + " + T(2) + "*" + T(8) + ")*u^2*v + (" + T(2) +
      "*" + T(5) + " - " + T(2) + "*" + T(5) + "*sigma - " + T(2) + ")*u^3 + " + T(1) + "*" + T(6) + "*v^3 - (" + T(1) +
      "*" + T(3) + " + " + T(7) + ")*u^2*v^2 - (" + T(4) + " + " + T(2) + "*" + T(8) + ")*u^3*v - " + T(2) + "*" +
      T(5) + "*u^4 - " + T(1) + "*" + T(6) + "*u*v^3";
  const std::string p2 =
      T(1) + "*v^2 + u*v + " + T(2) + "*u^2 + (" + T(1) + "*" + T(6) + " - " + T(1) + "*" + T(6) + " - " + T(1) +
      ")*v^3 + (" + T(7) + " - " + T(7) + "*sigma - 1 + " + T(1) + "*" + T(3) + ")*u*v^2 + (" + T(2) + "*" + T(8) +
      " - " + T(2) + "*" + T(8) + "*sigma - " + T(2) + " + " + T(4) + ")*u^2*v + " + T(2) + "*" + T(5) + "*u^3 - (" +
      T(1) + "*" + T(3) + " + " + T(7) + ")*u*v^3 - (" + T(4) + " + " + T(2) + "*" + T(8) + ")*u^2*v^2 - " + T(2) +
      "*" + T(5) + "*u^3*v - " + T(1) + "*" + T(6) + "*v^4";
  // Multiply each term by tau^(1 - deg_sigma) * w^(4 - deg_uv).
  auto homogenize = [&](const Polynomial& f) {
    Polynomial h(5);
    for (const auto& [a, c] : f.terms()) {
      std::vector<int> e = a.exps();
      e[1] = 1 - e[0];
      e[4] = 4 - e[2] - e[3];
      h.add_term(ExponentVector(e), c);
    }
    return h;
  };
  const Polynomial slice = poly(g, paren(generic_rational(rng)) + "*u - " + paren(generic_rational(rng)) + "*v + " +
                                       paren(generic_rational(rng)) + "*w");
  GradedIdeal i(g, {homogenize(poly(g, p1)), homogenize(poly(g, p2)), slice});
  return {std::move(i), ideal(g, {"u*v"})};
}

/// Random pointed grading with k <= 2 and n variables.
inline Grading random_grading(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> pick_k(1, 2), small(1, 3), signed_small(-2, 2);
  for (;;) {
    const std::size_t k = static_cast<std::size_t>(pick_k(rng));
    IntMatrix a(k, std::vector<Int>(n));
    for (std::size_t i = 0; i < n; ++i) {
      a[0][i] = small(rng) - (k == 2 ? 1 : 0);  // 0..2 when k == 2
      if (k == 2) a[1][i] = signed_small(rng);
    }
    try {
      return validate_grading(a);
    } catch (const Error&) {
      continue;
    }
  }
}

/// Random homogeneous polynomial of degree m with up to `terms` monomials
/// (zero when R_m is empty).
inline Polynomial random_homogeneous(std::mt19937_64& rng, const Grading& g, const MultiDegree& m, int terms) {
  Polynomial p(g.nvars());
  if (!g.in_weight_semigroup(m)) return p;
  const auto mons = g.monomials_of_degree(m);
  if (mons.empty()) return p;
  std::uniform_int_distribution<std::size_t> pick(0, mons.size() - 1);
  std::uniform_int_distribution<int> coef(-5, 5);
  for (int t = 0; t < terms; ++t) p.add_term(mons[pick(rng)], coef(rng));
  return p;
}

/// Random nonzero degree of R with small level, drawn as the degree of a random monomial.
inline MultiDegree random_degree(std::mt19937_64& rng, const Grading& g, int max_total) {
  std::uniform_int_distribution<int> e(0, max_total);
  for (;;) {
    std::vector<int> exps(g.nvars());
    int total = 0;
    for (auto& x : exps) {
      x = e(rng);
      total += x;
    }
    if (total == 0 || total > max_total) continue;
    return g.degree_of(ExponentVector(exps));
  }
}

/// Random ideal with 1..max_gens nonzero generators of small degree.
inline GradedIdeal random_ideal(std::mt19937_64& rng, const Grading& g, int max_gens, int max_total = 3) {
  std::uniform_int_distribution<int> count(1, max_gens), terms(1, 3);
  std::vector<Polynomial> gens;
  const int want = count(rng);
  while (static_cast<int>(gens.size()) < want) {
    Polynomial p = random_homogeneous(rng, g, random_degree(rng, g, max_total), terms(rng));
    if (!p.is_zero()) gens.push_back(std::move(p));
  }
  return GradedIdeal(g, std::move(gens));
}

/// Uniformly shuffled topological order of lattice_points_below(m) with respect to
/// the covering relations s - deg x_i -> s.
inline std::vector<MultiDegree> random_linear_extension(std::mt19937_64& rng, const Grading& g,
                                                        const MultiDegree& m) {
  std::vector<MultiDegree> pending = g.lattice_points_below(m);
  std::vector<MultiDegree> order;
  std::vector<MultiDegree> placed;
  auto is_placed = [&](const MultiDegree& s) { return std::find(placed.begin(), placed.end(), s) != placed.end(); };
  while (!pending.empty()) {
    std::vector<std::size_t> ready;
    for (std::size_t p = 0; p < pending.size(); ++p) {
      bool ok = true;
      for (std::size_t i = 0; i < g.nvars() && ok; ++i) {
        const MultiDegree below = pending[p] - g.var_degree(i);
        if (g.in_weight_semigroup(below) && !is_placed(below)) ok = false;
      }
      if (ok) ready.push_back(p);
    }
    std::uniform_int_distribution<std::size_t> pick(0, ready.size() - 1);
    const std::size_t chosen = ready[pick(rng)];
    placed.push_back(pending[chosen]);
    order.push_back(pending[chosen]);
    pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(chosen));
  }
  return order;
}

}  // namespace fixtures
