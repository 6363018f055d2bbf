#include <doctest.h>

#include <mgdual/error.hpp>
#include <mgdual/grading.hpp>

#include <set>

#include "errc.hpp"
#include "fixtures.hpp"

using namespace mgdual;
using fixtures::code_of;
using fixtures::go_grading;
using fixtures::hirzebruch_grading;

namespace {


// All alpha with |alpha| <= bound and A*alpha = m, by plain counting.
std::set<ExponentVector> brute_monomials(const Grading& g, const MultiDegree& m, int bound) {
  std::set<ExponentVector> out;
  std::vector<int> e(g.nvars(), 0);
  for (;;) {
    ExponentVector a(e);
    if (g.degree_of(a) == m) out.insert(a);
    std::size_t i = 0;
    while (i < e.size()) {
      ++e[i];
      int total = 0;
      for (int x : e) total += x;
      if (total <= bound) break;
      e[i] = 0;
      ++i;
    }
    if (i == e.size()) return out;
  }
}

}  // namespace

TEST_CASE("validate_grading computes the cone for a weighted line") {
  Grading g = go_grading();
  CHECK(g.rank() == 1);
  CHECK(g.nvars() == 2);
  CHECK(g.cone_matrix() == IntMatrix{{1}});
  CHECK(g.var_names() == std::vector<std::string>{"x1", "x2"});
}

TEST_CASE("validate_grading on the Hirzebruch grading matches semigroup membership") {
  Grading g = hirzebruch_grading();
  // The cone is generated by (1,-2) and (0,1).
  CHECK(g.in_weight_semigroup(MultiDegree{1, -2}));
  CHECK(g.in_weight_semigroup(MultiDegree{0, 1}));
  CHECK_FALSE(g.in_weight_semigroup(MultiDegree{-1, 0}));
  CHECK_FALSE(g.in_weight_semigroup(MultiDegree{0, -1}));
  CHECK_FALSE(g.in_weight_semigroup(MultiDegree{1, -3}));

  // Cross-check against degrees actually reached by monomials of total degree <= 6.
  std::set<MultiDegree> reached;
  for (int total = 0; total <= 6; ++total)
    for (int a = 0; a <= total; ++a)
      for (int b = 0; a + b <= total; ++b)
        for (int c = 0; a + b + c <= total; ++c) {
          const int d = total - a - b - c;
          reached.insert(g.degree_of(ExponentVector{a, b, c, d}));
        }
  for (const auto& m : reached) CHECK(g.in_weight_semigroup(m));
  // Every B-point with small coordinates is reached (the semigroup is saturated).
  for (Int i = 0; i <= 2; ++i)
    for (Int j = -2 * i; j <= 2; ++j) CHECK(reached.contains(MultiDegree{i, j}));
}

TEST_CASE("validate_grading rejects non-pointed gradings") {
  CHECK(code_of([] { validate_grading({{1, -1}}); }) == Errc::NotPointed);
  CHECK(code_of([] { validate_grading({{1, 0}}); }) == Errc::NotPointed);
  CHECK(code_of([] { validate_grading({{1, 1}, {2, 2}}); }) == Errc::NotPointed);
}

TEST_CASE("validate_grading checks a supplied cone matrix") {
  CHECK_NOTHROW(validate_grading({{1, 2}}, IntMatrix{{1}}));
  CHECK(code_of([] { validate_grading({{1, 2}}, IntMatrix{{-1}}); }) == Errc::InvalidB);
  CHECK(code_of([] { validate_grading({{1, 0}, {0, 1}}, IntMatrix{{1, 0}}); }) == Errc::InvalidB);
  CHECK(code_of([] { validate_grading({{1, 0}, {0, 1}}, IntMatrix{{1}}); }) == Errc::DimensionMismatch);
  CHECK(code_of([] { validate_grading({{1, 2}, {1}}); }) == Errc::DimensionMismatch);
  CHECK(code_of([] { validate_grading({{1, 2}}, std::nullopt, {"a", "a"}); }) == Errc::DimensionMismatch);
}

TEST_CASE("degree_of") {
  Grading h = hirzebruch_grading();
  CHECK(h.degree_of(ExponentVector{1, 2, 0, 0}) == MultiDegree{1, 0});
  CHECK(h.degree_of(ExponentVector{0, 0, 0, 0}) == MultiDegree{0, 0});
  CHECK(go_grading().degree_of(ExponentVector{0, 1}) == MultiDegree{2});
  CHECK(code_of([&] { h.degree_of(ExponentVector{1, 2}); }) == Errc::DimensionMismatch);
}

TEST_CASE("monomials_of_degree in canonical order") {
  Grading h = hirzebruch_grading();
  CHECK(h.monomials_of_degree(MultiDegree{1, 0}) ==
        std::vector<ExponentVector>{{1, 2, 0, 0}, {1, 1, 0, 1}, {1, 0, 0, 2}, {0, 0, 1, 0}});
  CHECK(h.monomials_of_degree(MultiDegree{0, 0}) == std::vector<ExponentVector>{{0, 0, 0, 0}});
  CHECK(h.monomials_of_degree(MultiDegree{-1, 0}).empty());
  CHECK(go_grading().monomials_of_degree(MultiDegree{4}) == std::vector<ExponentVector>{{4, 0}, {2, 1}, {0, 2}});
}

TEST_CASE("monomials_of_degree agrees with brute force on random gradings") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> nvars(1, 4);
  for (int trial = 0; trial < 40; ++trial) {
    Grading g = fixtures::random_grading(rng, nvars(rng));
    const MultiDegree m = fixtures::random_degree(rng, g, 4);
    // Any alpha of degree m has level(m) >= |alpha| * min level, so this bound dominates.
    Int min_level = g.level(g.var_degree(0));
    for (std::size_t i = 1; i < g.nvars(); ++i) min_level = std::min(min_level, g.level(g.var_degree(i)));
    const int bound = static_cast<int>(g.level(m) / min_level);
    auto fast = g.monomials_of_degree(m);
    std::set<ExponentVector> slow = brute_monomials(g, m, bound);
    CHECK(std::set<ExponentVector>(fast.begin(), fast.end()) == slow);
    CHECK(fast.size() == slow.size());
    for (std::size_t i = 1; i < fast.size(); ++i) CHECK(GrlexGreater{}(fast[i - 1], fast[i]));
  }
}

TEST_CASE("lattice_points_below") {
  Grading h = hirzebruch_grading();
  auto pts = h.lattice_points_below(MultiDegree{1, 1});
  CHECK(std::set<MultiDegree>(pts.begin(), pts.end()) ==
        std::set<MultiDegree>{{0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, -2}, {1, -1}, {1, 0}, {1, 1}});
  CHECK(h.lattice_points_below(MultiDegree{0, 0}) == std::vector<MultiDegree>{{0, 0}});
  CHECK(go_grading().lattice_points_below(MultiDegree{3}) == std::vector<MultiDegree>{{0}, {1}, {2}, {3}});
  CHECK(code_of([&] { h.lattice_points_below(MultiDegree{-1, 0}); }) == Errc::NotInSemigroup);
  // Columns of the Hirzebruch table: j runs from -2i to 12 - 2i.
  auto big = h.lattice_points_below(MultiDegree{4, 4});
  CHECK(big.size() == 5 * 13);
}

TEST_CASE("lattice_points_below is closed downward") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    Grading g = fixtures::random_grading(rng, 3);
    const MultiDegree m = fixtures::random_degree(rng, g, 4);
    auto pts = g.lattice_points_below(m);
    std::set<MultiDegree> set(pts.begin(), pts.end());
    for (const auto& s : pts)
      for (std::size_t i = 0; i < g.nvars(); ++i) {
        const MultiDegree t = s - g.var_degree(i);
        if (g.in_weight_semigroup(t)) CHECK(set.contains(t));
      }
  }
}

TEST_CASE("sort_lattice_points gives linear extensions") {
  Grading h = hirzebruch_grading();
  auto order = h.sort_lattice_points(MultiDegree{1, 1});
  REQUIRE(order.size() == 8);
  CHECK(order.front() == MultiDegree{0, 0});
  CHECK(order.back() == MultiDegree{1, 1});
  CHECK(go_grading().sort_lattice_points(MultiDegree{3}) == std::vector<MultiDegree>{{0}, {1}, {2}, {3}});
  CHECK(h.sort_lattice_points(MultiDegree{0, 0}) == std::vector<MultiDegree>{{0, 0}});

  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    Grading g = fixtures::random_grading(rng, 3);
    const MultiDegree m = fixtures::random_degree(rng, g, 4);
    for (TieBreak tie : {TieBreak::GradedLex, TieBreak::ReverseGradedLex}) {
      auto l = g.sort_lattice_points(m, tie);
      CHECK(l.front() == g.zero());
      for (std::size_t a = 0; a < l.size(); ++a)
        for (std::size_t b = a + 1; b < l.size(); ++b) CHECK_FALSE(g.precedes(l[b], l[a]));
    }
  }
}

TEST_CASE("degrees of monomials lie in the weight semigroup") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> e(0, 6);
  for (int trial = 0; trial < 10; ++trial) {
    Grading g = fixtures::random_grading(rng, 4);
    for (int i = 0; i < 100; ++i) {
      ExponentVector a{e(rng), e(rng), e(rng), e(rng)};
      CHECK(g.in_weight_semigroup(g.degree_of(a)));
      if (!a.is_zero()) CHECK(g.level(g.degree_of(a)) > 0);
    }
  }
}

TEST_CASE("exponent vectors") {
  CHECK(code_of([] { ExponentVector{1, -1}; }) == Errc::IndexOutOfRange);
  ExponentVector a{2, 1};
  CHECK(a.minus(ExponentVector{1, 1}) == ExponentVector{1, 0});
  CHECK_FALSE(a.minus(ExponentVector{0, 2}).has_value());
  CHECK_FALSE(ExponentVector{0, 1}.decrement(0).has_value());
  CHECK(a.to_string() == "(2,1)");
  CHECK(MultiDegree{3}.to_string() == "3");
  CHECK(MultiDegree{1, -2}.to_string() == "(1,-2)");
}
