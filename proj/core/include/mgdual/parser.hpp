#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mgdual/error.hpp"
#include "mgdual/grading.hpp"
#include "mgdual/ideal.hpp"
#include "mgdual/polynomial.hpp"

namespace mgdual {

/// Error tied to a position in the input text (1-based line and column;
/// 0 when unknown). code() is ParseError, UnknownVariable or
/// NonHomogeneousGenerator.
class SourceError : public Error {
public:
  SourceError(Errc code, std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

enum class QueryKind { Hilbert, DualBasis, Member, Quotient, Saturate, Multiplicity };

const char* query_keyword(QueryKind kind) noexcept;

/// One request from a `query:` section, e.g. `quotient J by I (4)`.
struct Query {
  QueryKind kind = QueryKind::Hilbert;
  std::string ideal;
  /// member: the polynomial text; quotient / saturate: ideal name or polynomial text.
  std::string argument;
  bool argument_is_expression = false;
  std::optional<MultiDegree> degree;  // absent only for member

  friend bool operator==(const Query&, const Query&) = default;
};

struct NamedIdeal {
  std::string name;
  std::vector<Polynomial> generators;
  std::vector<std::size_t> lines;  // source line of each generator (0 when built in code)

  friend bool operator==(const NamedIdeal& a, const NamedIdeal& b) {
    return a.name == b.name && a.generators == b.generators;
  }
};

struct ProblemFile {
  std::vector<std::string> vars;
  IntMatrix grading_rows;
  std::optional<IntMatrix> cone_rows;
  std::vector<NamedIdeal> ideals;
  std::vector<Query> queries;

  Grading grading() const;
  const NamedIdeal* find_ideal(std::string_view name) const;
  /// Throws ParseError when no ideal has that name.
  GradedIdeal ideal(std::string_view name) const;

  friend bool operator==(const ProblemFile&, const ProblemFile&) = default;
};

/// Parses a problem file and checks the grading, generator homogeneity and queries.
ProblemFile parse_problem(std::string_view text);

/// Parses one polynomial expression over the given variable names.
/// Precedence: ^ (right associative, nonnegative integer exponents) >
/// unary minus > * > binary + and -. Literals are integers or a/b.
Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& vars);

/// "(a,b,...)" or, when k == 1, a bare integer.
MultiDegree parse_degree(std::string_view text, std::size_t k);

/// Canonical text form; parse_problem(emit_problem(p)) == p.
std::string emit_problem(const ProblemFile& p);

}  // namespace mgdual
