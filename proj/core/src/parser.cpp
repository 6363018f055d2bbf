#include "mgdual/parser.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

namespace mgdual {

SourceError::SourceError(Errc code, std::size_t line, std::size_t column, const std::string& message)
    : Error(code, (line ? "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " : "") +
                      message),
      line_(line),
      column_(column) {}

const char* query_keyword(QueryKind kind) noexcept {
  switch (kind) {
    case QueryKind::Hilbert: return "hilbert";
    case QueryKind::DualBasis: return "dual-basis";
    case QueryKind::Member: return "member";
    case QueryKind::Quotient: return "quotient";
    case QueryKind::Saturate: return "saturate";
    case QueryKind::Multiplicity: return "multiplicity";
  }
  return "?";
}

namespace {

// Text plus the source position of every character.
struct Located {
  std::string text;
  std::vector<std::pair<std::size_t, std::size_t>> where;

  void append(std::string_view s, std::size_t line, std::size_t first_col) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      text.push_back(s[i]);
      where.emplace_back(line, first_col + i);
    }
  }
  std::pair<std::size_t, std::size_t> at(std::size_t i) const {
    if (where.empty()) return {0, 0};
    if (i < where.size()) return where[i];
    auto [l, c] = where.back();
    return {l, c + 1};
  }
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || (c & 0x80); }
bool ident_char(char c) { return ident_start(c) || std::isdigit(static_cast<unsigned char>(c)); }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class ExprParser {
public:
  ExprParser(const Located& src, const std::vector<std::string>& vars) : src_(src), vars_(vars) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip();
    if (pos_ < src_.text.size()) {
      const char c = src_.text[pos_];
      if (c == ')') fail("unmatched ')'");
      fail(std::string("unexpected '") + c + "'");
    }
    return p;
  }

private:
  [[noreturn]] void fail(const std::string& msg, Errc code = Errc::ParseError) const {
    auto [l, c] = src_.at(pos_);
    throw SourceError(code, l, c, msg);
  }

  void skip() {
    while (pos_ < src_.text.size() && std::isspace(static_cast<unsigned char>(src_.text[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < src_.text.size() ? src_.text[pos_] : '\0';
  }

  Polynomial expr() {
    Polynomial p = term();
    for (;;) {
      const char c = peek();
      if (c != '+' && c != '-') return p;
      ++pos_;
      Polynomial rhs = term();
      if (c == '+') p += rhs;
      else p -= rhs;
    }
  }

  Polynomial term() {
    Polynomial p = unary();
    for (;;) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        p = p * unary();
      } else if (c == '/') {
        fail("division is only allowed inside a rational literal a/b");
      } else if (c == '(' || is_digit(c) || ident_start(c)) {
        fail("implicit multiplication is not allowed; write '*'");
      } else {
        return p;
      }
    }
  }

  Polynomial unary() {
    if (peek() == '-') {
      ++pos_;
      return -unary();
    }
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (peek() != '^') return base;
    ++pos_;
    return base.pow(exponent());
  }

  unsigned exponent() {
    if (!is_digit(peek())) fail("exponent must be a nonnegative integer");
    const std::size_t start = pos_;
    while (pos_ < src_.text.size() && is_digit(src_.text[pos_])) ++pos_;
    unsigned long e = 0;
    auto [ptr, ec] = std::from_chars(src_.text.data() + start, src_.text.data() + pos_, e);
    if (ec != std::errc() || e > 100000) {
      pos_ = start;
      fail("exponent too large");
    }
    if (peek() == '^') {
      ++pos_;
      const unsigned inner = exponent();
      unsigned long r = 1;
      for (unsigned i = 0; i < inner; ++i) {
        r *= e;
        if (r > 100000) {
          pos_ = start;
          fail("exponent too large");
        }
      }
      e = r;
    }
    return static_cast<unsigned>(e);
  }

  Polynomial atom() {
    const char c = peek();
    const std::size_t n = vars_.size();
    if (is_digit(c)) {
      const std::size_t start = pos_;
      while (pos_ < src_.text.size() && is_digit(src_.text[pos_])) ++pos_;
      std::string lit = src_.text.substr(start, pos_ - start);
      if (pos_ < src_.text.size() && src_.text[pos_] == '/') {
        ++pos_;
        if (pos_ >= src_.text.size() || !is_digit(src_.text[pos_])) fail("expected a denominator after '/'");
        const std::size_t dstart = pos_;
        while (pos_ < src_.text.size() && is_digit(src_.text[pos_])) ++pos_;
        std::string den = src_.text.substr(dstart, pos_ - dstart);
        if (std::all_of(den.begin(), den.end(), [](char d) { return d == '0'; })) {
          pos_ = dstart;
          fail("zero denominator");
        }
        lit += "/" + den;
      }
      Rational q(lit);
      q.canonicalize();
      return Polynomial::constant(n, q);
    }
    if (ident_start(c)) {
      const std::size_t start = pos_;
      while (pos_ < src_.text.size() && ident_char(src_.text[pos_])) ++pos_;
      const std::string name = src_.text.substr(start, pos_ - start);
      auto it = std::find(vars_.begin(), vars_.end(), name);
      if (it == vars_.end()) {
        pos_ = start;
        fail("unknown variable '" + name + "'", Errc::UnknownVariable);
      }
      return Polynomial::variable(n, static_cast<std::size_t>(it - vars_.begin()));
    }
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return p;
    }
    if (c == '\0') fail("unexpected end of expression");
    fail(std::string("expected a number, variable or '(' but found '") + c + "'");
  }

  const Located& src_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Removes a trailing # comment that is not inside double quotes.
std::string_view strip_comment(std::string_view line) {
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') quoted = !quoted;
    else if (line[i] == '#' && !quoted) return line.substr(0, i);
  }
  return line;
}

bool valid_identifier(std::string_view s) {
  if (s.empty() || !ident_start(s.front())) return false;
  return std::all_of(s.begin(), s.end(), ident_char);
}

std::vector<std::pair<std::string, std::size_t>> words(std::string_view s, std::size_t first_col) {
  std::vector<std::pair<std::string, std::size_t>> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == ',')) ++i;
    const std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i])) && s[i] != ',') ++i;
    if (i > start) out.emplace_back(std::string(s.substr(start, i - start)), first_col + start);
  }
  return out;
}

std::vector<Int> int_row(std::string_view s, std::size_t line, std::size_t first_col) {
  std::vector<Int> row;
  for (const auto& [w, col] : words(s, first_col)) {
    Int v = 0;
    auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), v);
    if (ec != std::errc() || ptr != w.data() + w.size())
      throw SourceError(Errc::ParseError, line, col, "expected an integer, found '" + w + "'");
    row.push_back(v);
  }
  return row;
}

struct QueryToken {
  std::string text;
  std::size_t column;
  bool quoted;
};

std::vector<QueryToken> query_tokens(std::string_view s, std::size_t line, std::size_t first_col) {
  std::vector<QueryToken> out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (s[i] == '"') {
      const std::size_t close = s.find('"', i + 1);
      if (close == std::string_view::npos)
        throw SourceError(Errc::ParseError, line, first_col + i, "unterminated string");
      out.push_back({std::string(s.substr(i + 1, close - i - 1)), first_col + start, true});
      i = close + 1;
    } else if (s[i] == '(') {
      const std::size_t close = s.find(')', i);
      if (close == std::string_view::npos)
        throw SourceError(Errc::ParseError, line, first_col + i, "expected ')'");
      out.push_back({std::string(s.substr(i, close - i + 1)), first_col + start, false});
      i = close + 1;
    } else {
      while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i])) && s[i] != '"') ++i;
      out.push_back({std::string(s.substr(start, i - start)), first_col + start, false});
    }
  }
  return out;
}

MultiDegree degree_at(const QueryToken& t, std::size_t k, std::size_t line) {
  try {
    return parse_degree(t.text, k);
  } catch (const Error& e) {
    throw SourceError(Errc::ParseError, line, t.column, "bad degree '" + t.text + "'");
  }
}

Query parse_query(std::string_view s, std::size_t line, std::size_t first_col, std::size_t k) {
  auto toks = query_tokens(s, line, first_col);
  auto expect = [&](std::size_t count, const char* usage) {
    if (toks.size() != count)
      throw SourceError(Errc::ParseError, line, first_col, std::string("usage: ") + usage);
  };
  Query q;
  const std::string& word = toks.front().text;
  if (word == "hilbert" || word == "dual-basis" || word == "multiplicity") {
    q.kind = word == "hilbert" ? QueryKind::Hilbert
             : word == "dual-basis" ? QueryKind::DualBasis
                                    : QueryKind::Multiplicity;
    expect(3, (word + " NAME DEGREE").c_str());
    q.ideal = toks[1].text;
    q.degree = degree_at(toks[2], k, line);
  } else if (word == "member") {
    q.kind = QueryKind::Member;
    expect(3, "member NAME \"POLYNOMIAL\"");
    if (!toks[2].quoted)
      throw SourceError(Errc::ParseError, line, toks[2].column, "the polynomial must be quoted");
    q.ideal = toks[1].text;
    q.argument = toks[2].text;
    q.argument_is_expression = true;
  } else if (word == "quotient" || word == "saturate") {
    q.kind = word == "quotient" ? QueryKind::Quotient : QueryKind::Saturate;
    expect(5, (word + " NAME by NAME|\"POLYNOMIAL\" DEGREE").c_str());
    if (toks[2].text != "by" || toks[2].quoted)
      throw SourceError(Errc::ParseError, line, toks[2].column, "expected 'by'");
    q.ideal = toks[1].text;
    q.argument = toks[3].text;
    q.argument_is_expression = toks[3].quoted;
    q.degree = degree_at(toks[4], k, line);
  } else {
    throw SourceError(Errc::ParseError, line, toks.front().column, "unknown query '" + word + "'");
  }
  return q;
}

enum class Section { None, Vars, Grading, Cone, Ideal, Query };

std::string join_degrees(const std::vector<MultiDegree>& ds) {
  std::string out;
  std::set<MultiDegree> seen;
  for (const auto& d : ds) {
    if (!seen.insert(d).second) continue;
    if (!out.empty()) out += ", ";
    out += d.to_string();
  }
  return out;
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& vars) {
  Located src;
  src.append(text, 1, 1);
  return ExprParser(src, vars).parse();
}

MultiDegree parse_degree(std::string_view text, std::size_t k) {
  std::string_view s = trim(text);
  const bool paren = !s.empty() && s.front() == '(';
  if (paren) {
    if (s.back() != ')') throw Error(Errc::ParseError, "degree '" + std::string(text) + "' lacks ')'");
    s = s.substr(1, s.size() - 2);
  } else if (k != 1) {
    throw Error(Errc::ParseError, "degree '" + std::string(text) + "' must be written (a,b,...)");
  }
  std::vector<Int> coords;
  std::size_t i = 0;
  for (;;) {
    std::size_t comma = s.find(',', i);
    std::string_view part = trim(s.substr(i, comma == std::string_view::npos ? s.npos : comma - i));
    Int v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size())
      throw Error(Errc::ParseError, "degree '" + std::string(text) + "' has a non-integer entry");
    coords.push_back(v);
    if (comma == std::string_view::npos) break;
    i = comma + 1;
  }
  if (coords.size() != k)
    throw Error(Errc::DimensionMismatch, "degree '" + std::string(text) + "' needs " + std::to_string(k) +
                                             " entries");
  return MultiDegree(std::move(coords));
}

ProblemFile parse_problem(std::string_view text) {
  ProblemFile p;
  Section section = Section::None;
  std::size_t grading_line = 0;
  std::set<std::string> ideal_names;

  Located pending;
  int depth = 0;
  auto flush = [&](std::size_t line) {
    if (pending.text.empty()) return;
    if (depth > 0) {
      auto [l, c] = pending.at(pending.text.size());
      throw SourceError(Errc::ParseError, l, c, "expected ')' before the end of the generator");
    }
    NamedIdeal& ideal = p.ideals.back();
    ideal.generators.push_back(ExprParser(pending, p.vars).parse());
    ideal.lines.push_back(pending.where.front().first);
    pending = Located{};
    (void)line;
  };

  std::vector<std::pair<std::string_view, std::size_t>> query_lines;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    ++line_no;
    start = end + 1;

    std::string_view body = strip_comment(raw);
    std::string_view content = trim(body);
    const std::size_t indent = static_cast<std::size_t>(content.data() - raw.data());
    if (content.empty()) {
      if (end == text.size()) break;
      continue;
    }

    // Section headers.
    std::string_view rest;
    std::size_t rest_col = 0;
    auto header = [&](std::string_view word) {
      if (content.substr(0, word.size()) != word) return false;
      std::string_view after = content.substr(word.size());
      std::size_t skipped = 0;
      while (skipped < after.size() && std::isspace(static_cast<unsigned char>(after[skipped]))) ++skipped;
      if (skipped >= after.size() || after[skipped] != ':') return false;
      rest = after.substr(skipped + 1);
      rest_col = indent + word.size() + skipped + 2;
      return true;
    };

    Section next = Section::None;
    std::string ideal_name;
    if (header("vars")) next = Section::Vars;
    else if (header("grading")) next = Section::Grading;
    else if (header("cone")) next = Section::Cone;
    else if (header("query") || header("queries")) next = Section::Query;
    else if (content.substr(0, 6) == "ideal " || content.substr(0, 6) == "ideal\t") {
      const std::size_t colon = content.find(':');
      if (colon == std::string_view::npos)
        throw SourceError(Errc::ParseError, line_no, indent + 1, "expected ':' after the ideal name");
      ideal_name = std::string(trim(content.substr(5, colon - 5)));
      if (!valid_identifier(ideal_name))
        throw SourceError(Errc::ParseError, line_no, indent + 7, "bad ideal name '" + ideal_name + "'");
      next = Section::Ideal;
      rest = content.substr(colon + 1);
      rest_col = indent + colon + 2;
    }

    if (next != Section::None) {
      if (section == Section::Ideal) flush(line_no);
      section = next;
      switch (section) {
        case Section::Grading:
          if (p.vars.empty()) throw SourceError(Errc::ParseError, line_no, indent + 1, "'vars:' must come first");
          if (!p.grading_rows.empty())
            throw SourceError(Errc::ParseError, line_no, indent + 1, "duplicate 'grading:' section");
          grading_line = line_no;
          break;
        case Section::Cone:
          if (p.cone_rows) throw SourceError(Errc::ParseError, line_no, indent + 1, "duplicate 'cone:' section");
          p.cone_rows.emplace();
          break;
        case Section::Ideal:
          if (p.grading_rows.empty())
            throw SourceError(Errc::ParseError, line_no, indent + 1, "'grading:' must come before ideals");
          if (!ideal_names.insert(ideal_name).second)
            throw SourceError(Errc::ParseError, line_no, indent + 7, "duplicate ideal '" + ideal_name + "'");
          p.ideals.push_back(NamedIdeal{ideal_name, {}, {}});
          break;
        default:
          break;
      }
      content = trim(rest);
      if (content.empty()) continue;
      rest_col += static_cast<std::size_t>(content.data() - rest.data());
    } else {
      rest_col = indent + 1;
    }

    switch (section) {
      case Section::None:
        throw SourceError(Errc::ParseError, line_no, rest_col, "expected a section header such as 'vars:'");
      case Section::Vars:
        for (const auto& [w, col] : words(content, rest_col)) {
          if (!valid_identifier(w))
            throw SourceError(Errc::ParseError, line_no, col, "bad variable name '" + w + "'");
          if (std::find(p.vars.begin(), p.vars.end(), w) != p.vars.end())
            throw SourceError(Errc::ParseError, line_no, col, "duplicate variable '" + w + "'");
          p.vars.push_back(w);
        }
        break;
      case Section::Grading: {
        auto row = int_row(content, line_no, rest_col);
        if (row.size() != p.vars.size())
          throw SourceError(Errc::ParseError, line_no, rest_col,
                            "grading row has " + std::to_string(row.size()) + " entries, expected " +
                                std::to_string(p.vars.size()));
        p.grading_rows.push_back(std::move(row));
        break;
      }
      case Section::Cone: {
        auto row = int_row(content, line_no, rest_col);
        if (row.size() != p.grading_rows.size())
          throw SourceError(Errc::ParseError, line_no, rest_col,
                            "cone row has " + std::to_string(row.size()) + " entries, expected " +
                                std::to_string(p.grading_rows.size()));
        p.cone_rows->push_back(std::move(row));
        break;
      }
      case Section::Ideal: {
        if (!pending.text.empty()) pending.append(" ", line_no, rest_col);
        pending.append(content, line_no, rest_col);
        for (char c : content) depth += (c == '(') - (c == ')');
        const char last = content.back();
        const bool continues = depth > 0 || last == '+' || last == '-' || last == '*' || last == '^' ||
                               last == '(' || last == '/';
        if (!continues) flush(line_no);
        break;
      }
      case Section::Query:
        query_lines.emplace_back(content, line_no * 100000 + rest_col);
        break;
    }
    if (end == text.size()) break;
  }
  if (section == Section::Ideal && !pending.text.empty()) {
    auto [l, c] = pending.at(pending.text.size());
    throw SourceError(Errc::ParseError, l, c, "unexpected end of input inside a generator");
  }
  if (p.vars.empty()) throw SourceError(Errc::ParseError, line_no, 1, "missing 'vars:' section");
  if (p.grading_rows.empty()) throw SourceError(Errc::ParseError, line_no, 1, "missing 'grading:' section");

  Grading grading = [&] {
    try {
      return p.grading();
    } catch (const Error& e) {
      throw SourceError(e.code(), grading_line, 1, e.what());
    }
  }();

  for (const NamedIdeal& ideal : p.ideals) {
    for (std::size_t i = 0; i < ideal.generators.size(); ++i) {
      const Polynomial& f = ideal.generators[i];
      if (f.is_zero()) continue;
      const std::string label = "ideal " + ideal.name + ", generator " + std::to_string(i + 1) + " (" +
                                f.to_string(p.vars) + ")";
      auto d = f.homogeneous_degree(grading);
      if (!d)
        throw SourceError(Errc::NonHomogeneousGenerator, ideal.lines[i], 1,
                          label + " is not homogeneous: term degrees " + join_degrees(f.term_degrees(grading)));
      if (d->is_zero()) throw SourceError(Errc::UnitGenerator, ideal.lines[i], 1, label + " has degree 0");
    }
  }

  for (const auto& [content, code] : query_lines) {
    const std::size_t line = code / 100000, col = code % 100000;
    Query q = parse_query(content, line, col, grading.rank());
    if (!p.find_ideal(q.ideal))
      throw SourceError(Errc::ParseError, line, col, "no ideal named '" + q.ideal + "'");
    if (q.kind == QueryKind::Quotient || q.kind == QueryKind::Saturate || q.kind == QueryKind::Member) {
      if (q.argument_is_expression) {
        Located src;
        src.append(q.argument, line, col);
        ExprParser(src, p.vars).parse();
      } else if (!p.find_ideal(q.argument)) {
        throw SourceError(Errc::ParseError, line, col, "no ideal named '" + q.argument + "'");
      }
    }
    p.queries.push_back(std::move(q));
  }
  return p;
}

Grading ProblemFile::grading() const { return validate_grading(grading_rows, cone_rows, vars); }

const NamedIdeal* ProblemFile::find_ideal(std::string_view name) const {
  for (const auto& i : ideals)
    if (i.name == name) return &i;
  return nullptr;
}

GradedIdeal ProblemFile::ideal(std::string_view name) const {
  const NamedIdeal* i = find_ideal(name);
  if (!i) throw Error(Errc::ParseError, "no ideal named '" + std::string(name) + "'");
  return GradedIdeal(grading(), i->generators);
}

std::string emit_problem(const ProblemFile& p) {
  std::ostringstream os;
  os << "vars:";
  for (const auto& v : p.vars) os << ' ' << v;
  os << "\ngrading:\n";
  auto rows = [&](const IntMatrix& m) {
    for (const auto& row : m) {
      for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j];
      os << '\n';
    }
  };
  rows(p.grading_rows);
  if (p.cone_rows) {
    os << "cone:\n";
    rows(*p.cone_rows);
  }
  for (const auto& ideal : p.ideals) {
    os << "ideal " << ideal.name << ":\n";
    for (const auto& f : ideal.generators) os << f.to_string(p.vars) << '\n';
  }
  if (!p.queries.empty()) {
    os << "query:\n";
    for (const auto& q : p.queries) {
      os << query_keyword(q.kind) << ' ' << q.ideal;
      if (q.kind == QueryKind::Quotient || q.kind == QueryKind::Saturate) os << " by";
      if (!q.argument.empty() || q.argument_is_expression) {
        if (q.argument_is_expression) os << " \"" << q.argument << '"';
        else os << ' ' << q.argument;
      }
      if (q.degree) {
        const std::string d = q.degree->to_string();
        os << ' ' << (d.front() == '(' ? d : "(" + d + ")");
      }
      os << '\n';
    }
  }
  return os.str();
}

}  // namespace mgdual
