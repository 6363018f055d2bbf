#include <doctest.h>

#include <mgdual/emit.hpp>
#include <mgdual/parser.hpp>

#include <fstream>
#include <sstream>

#include "errc.hpp"
#include "fixtures.hpp"

using namespace mgdual;
using fixtures::code_of;

namespace {

const char* const kGo =
    "vars: x1 x2\n"
    "grading:\n"
    "1 2\n"
    "ideal I:\n"
    "29/16*x1^3 - 2*x1*x2\n"
    "x2 - x1^2\n";

// Runs parse_problem and returns the SourceError it throws.
SourceError source_error(const std::string& text) {
  try {
    parse_problem(text);
  } catch (const SourceError& e) {
    return e;
  }
  FAIL("expected a SourceError");
  return SourceError(Errc::ParseError, 0, 0, "");
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("parse the GO problem") {
  ProblemFile p = parse_problem(kGo);
  CHECK(p.vars == std::vector<std::string>{"x1", "x2"});
  CHECK(p.grading_rows == IntMatrix{{1, 2}});
  CHECK_FALSE(p.cone_rows.has_value());
  REQUIRE(p.ideals.size() == 1);
  CHECK(p.ideal("I") == fixtures::go_ideal());
  CHECK(p.ideals.front().lines == std::vector<std::size_t>{5, 6});
  CHECK(p.queries.empty());
  CHECK(p.find_ideal("J") == nullptr);
  CHECK(code_of([&] { p.ideal("J"); }) == Errc::ParseError);
}

TEST_CASE("empty ideal section gives the zero ideal") {
  ProblemFile p = parse_problem("vars: x y\ngrading:\n1 1\nideal Z:\nideal W:\nx\n");
  CHECK(p.ideal("Z").is_zero());
  CHECK(p.ideal("W").size() == 1);
}

TEST_CASE("comments, cone rows, continuation lines and queries") {
  ProblemFile p = parse_problem(
      "# header comment\n"
      "vars: x1 x2 x3 x4   # trailing\n"
      "grading:\n"
      "1 0 1 0\n"
      "-2 1 0 1\n"
      "cone:\n"
      "1 0\n"
      "2 1\n"
      "ideal C:\n"
      "x1^2*x2^6 + x1^2*x2^3*x4^3 -\n"
      "  x3^2*x4^2\n"
      "ideal L:\n"
      "(x3 -\n"
      " x1*x2^2)\n"
      "queries:\n"
      "hilbert C (4,4)\n"
      "dual-basis L (1,1)\n"
      "member L \"x3 - x1*x2^2\"\n"
      "quotient C by L (1,1)\n"
      "saturate C by \"x2\" (1,1)\n"
      "multiplicity L (1,1)\n");
  CHECK(p.ideal("C").generators() == fixtures::hirzebruch_curve().generators());
  CHECK(p.ideal("L").generators() == fixtures::hirzebruch_line().generators());
  CHECK(p.cone_rows == IntMatrix{{1, 0}, {2, 1}});
  REQUIRE(p.queries.size() == 6);
  CHECK(p.queries[0].kind == QueryKind::Hilbert);
  CHECK(p.queries[0].degree == MultiDegree{4, 4});
  CHECK(p.queries[2].kind == QueryKind::Member);
  CHECK(p.queries[2].argument == "x3 - x1*x2^2");
  CHECK_FALSE(p.queries[2].degree.has_value());
  CHECK(p.queries[3].argument == "L");
  CHECK_FALSE(p.queries[3].argument_is_expression);
  CHECK(p.queries[4].argument_is_expression);
  CHECK(p.queries[5].kind == QueryKind::Multiplicity);
}

TEST_CASE("polynomial precedence") {
  const std::vector<std::string> v{"x", "y"};
  auto P = [&](const char* s) { return parse_polynomial(s, v); };
  CHECK(P("-x^2") == Rational(-1) * P("x*x"));
  CHECK(P("2*x^2^1") == P("2*x*x"));
  CHECK(P("x - y - x") == Rational(-1) * P("y"));
  CHECK(P("3/6*x") == P("1/2*x"));
  CHECK(P("(x + y)^0") == Polynomial::constant(2, 1));
  CHECK(P("--x") == P("x"));
  CHECK(P("2*-x") == Rational(-2) * P("x"));
  CHECK(P("x^2*y + 0") == Polynomial::monomial(ExponentVector{2, 1}, 1));
  CHECK(P("x - x").is_zero());
}

TEST_CASE("polynomial syntax errors") {
  const std::vector<std::string> v{"x", "y"};
  auto code = [&](const char* s) { return code_of([&] { parse_polynomial(s, v); }); };
  CHECK(code("2x") == Errc::ParseError);
  CHECK(code("x y") == Errc::ParseError);
  CHECK(code("x^-1") == Errc::ParseError);
  CHECK(code("x^y") == Errc::ParseError);
  CHECK(code("(x + y") == Errc::ParseError);
  CHECK(code("x / y") == Errc::ParseError);
  CHECK(code("1/0") == Errc::ParseError);
  CHECK(code("") == Errc::ParseError);
  CHECK(code("z") == Errc::UnknownVariable);
}

TEST_CASE("problem errors carry positions") {
  SUBCASE("non-homogeneous generator") {
    SourceError e = source_error("vars: x1 x2\ngrading:\n1 2\nideal I:\nx1 + x2\n");
    CHECK(e.code() == Errc::NonHomogeneousGenerator);
    CHECK(e.line() == 5);
    const std::string msg = e.what();
    CHECK(msg.find("generator 1") != std::string::npos);
    CHECK(msg.find("1, 2") != std::string::npos);
  }
  SUBCASE("unknown variable") {
    SourceError e = source_error("vars: x1 x2\ngrading:\n1 2\nideal I:\nx1*x3\n");
    CHECK(e.code() == Errc::UnknownVariable);
    CHECK(e.line() == 5);
    CHECK(e.column() == 4);
  }
  SUBCASE("implicit multiplication") {
    SourceError e = source_error("vars: x1 x2\ngrading:\n1 2\nideal I:\nx1 x2\n");
    CHECK(e.code() == Errc::ParseError);
    CHECK(e.line() == 5);
    CHECK(e.column() == 4);
  }
  SUBCASE("unit generator") {
    SourceError e = source_error("vars: x1 x2\ngrading:\n1 2\nideal I:\n3\n");
    CHECK(e.code() == Errc::UnitGenerator);
  }
  SUBCASE("bad grading row") {
    SourceError e = source_error("vars: x1 x2\ngrading:\n1 2 3\n");
    CHECK(e.line() == 3);
  }
  SUBCASE("duplicate variable") {
    CHECK(source_error("vars: x x\ngrading:\n1 1\n").line() == 1);
  }
  SUBCASE("unknown ideal in a query") {
    SourceError e = source_error(std::string(kGo) + "query:\nhilbert K 3\n");
    CHECK(e.line() == 8);
  }
  SUBCASE("malformed degree") {
    SourceError e = source_error(std::string(kGo) + "query:\nhilbert I (1,2)\n");
    CHECK(e.line() == 8);
  }
  SUBCASE("non-pointed grading") {
    CHECK(source_error("vars: x y\ngrading:\n1 -1\n").code() == Errc::NotPointed);
  }
  SUBCASE("missing sections") {
    CHECK(source_error("ideal I:\nx\n").code() == Errc::ParseError);
    CHECK(source_error("vars: x\n").code() == Errc::ParseError);
  }
}

TEST_CASE("parse_degree") {
  CHECK(parse_degree("4", 1) == MultiDegree{4});
  CHECK(parse_degree("(4)", 1) == MultiDegree{4});
  CHECK(parse_degree(" ( 1 , -2 ) ", 2) == MultiDegree{1, -2});
  CHECK(code_of([] { parse_degree("4", 2); }) == Errc::ParseError);
  CHECK(code_of([] { parse_degree("(1,2,3)", 2); }) == Errc::DimensionMismatch);
  CHECK(code_of([] { parse_degree("(1,x)", 2); }) == Errc::ParseError);
}

TEST_CASE("emit and parse round trip") {
  for (const char* name : {"go.prob", "hirzebruch.prob", "phosphorylation.prob", "parameter_geography.prob"}) {
    CAPTURE(name);
    ProblemFile p = parse_problem(slurp(std::string(MGDUAL_FIXTURE_DIR) + "/" + name));
    const std::string text = emit_problem(p);
    ProblemFile q = parse_problem(text);
    CHECK(q == p);
    CHECK(emit_problem(q) == text);
  }
  ProblemFile cone = parse_problem("vars: a b\ngrading:\n1 1\ncone:\n1\nideal E:\nquery:\nhilbert E 2\n");
  CHECK(parse_problem(emit_problem(cone)) == cone);
}

TEST_CASE("hilbert table layouts") {
  HilbertTable one{{{0}, 1}, {{1}, 1}, {{2}, 1}, {{3}, 0}, {{4}, 0}};
  CHECK(format_hilbert_table(one, 1) ==
        "m | 0 1 2 3 4\n"
        "--+-----------\n"
        "H | 1 1 1 0 0\n");
  HilbertTable two{{{0, 0}, 1}, {{0, 1}, 2}, {{1, -1}, 2}, {{1, 0}, 0}};
  CHECK(format_hilbert_table(two, 2) ==
        "j\\i | 0 1\n"
        "----+-----\n"
        "  1 | 2 -\n"
        "  0 | 1 -\n"
        " -1 | - 2\n");
  CHECK(format_hilbert_csv(two, 2) ==
        "m1,m2,dim\n"
        "0,0,1\n"
        "0,1,2\n"
        "1,-1,2\n"
        "1,0,0\n");
  HilbertTable three{{{0, 0, 0}, 1}, {{1, 0, 0}, 3}};
  const std::string t3 = format_hilbert_table(three, 3);
  CHECK(t3.find("(1,0,0)") != std::string::npos);
  CHECK(t3.find('3') != std::string::npos);
}
