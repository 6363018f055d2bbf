#include "mgdual/polynomial.hpp"

#include <sstream>

#include "mgdual/error.hpp"

namespace mgdual {

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(ExponentVector(nvars), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw Error(Errc::IndexOutOfRange, "variable index");
  Polynomial p(nvars);
  p.add_term(ExponentVector::unit(nvars, i), 1);
  return p;
}

Polynomial Polynomial::monomial(const ExponentVector& alpha, const Rational& c) {
  Polynomial p(alpha.size());
  p.add_term(alpha, c);
  return p;
}

Rational Polynomial::coefficient(const ExponentVector& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const ExponentVector& alpha, const Rational& c) {
  if (alpha.size() != nvars_) throw Error(Errc::DimensionMismatch, "term has wrong number of variables");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(alpha, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

std::optional<MultiDegree> Polynomial::homogeneous_degree(const Grading& g) const {
  if (terms_.empty()) return std::nullopt;
  if (nvars_ != g.nvars()) throw Error(Errc::DimensionMismatch, "polynomial/grading variable count");
  std::optional<MultiDegree> d;
  for (const auto& [alpha, c] : terms_) {
    MultiDegree t = g.degree_of(alpha);
    if (!d) d = std::move(t);
    else if (*d != t) return std::nullopt;
  }
  return d;
}

bool Polynomial::is_homogeneous(const Grading& g) const { return homogeneous_degree(g).has_value(); }

std::vector<MultiDegree> Polynomial::term_degrees(const Grading& g) const {
  std::vector<MultiDegree> out;
  for (const auto& [alpha, c] : terms_) out.push_back(g.degree_of(alpha));
  return out;
}

void Polynomial::check_vars(const Polynomial& other) const {
  if (other.nvars_ != nvars_) throw Error(Errc::DimensionMismatch, "polynomials in different rings");
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_vars(other);
  for (const auto& [alpha, c] : other.terms_) add_term(alpha, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_vars(other);
  for (const auto& [alpha, c] : other.terms_) add_term(alpha, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [alpha, coef] : terms_) coef *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& [alpha, coef] : p.terms_) coef = -coef;
  return p;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_vars(b);
  Polynomial p(a.nvars_);
  for (const auto& [x, cx] : a.terms_)
    for (const auto& [y, cy] : b.terms_) p.add_term(x + y, cx * cy);
  return p;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(nvars_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

Polynomial Polynomial::shifted(const ExponentVector& beta) const {
  Polynomial p(nvars_);
  for (const auto& [alpha, c] : terms_) p.terms_.emplace(alpha + beta, c);
  return p;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (names.size() != nvars_) throw Error(Errc::DimensionMismatch, "name list size");
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [alpha, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (mag != 1 || alpha.is_zero()) {
      os << mag.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (alpha[i] == 0) continue;
      if (wrote) os << '*';
      os << names[i];
      if (alpha[i] > 1) os << '^' << alpha[i];
      wrote = true;
    }
  }
  return os.str();
}

}  // namespace mgdual
