#include "grassmor/hompoly.hpp"

#include <sstream>

#include "grassmor/errors.hpp"

namespace grassmor {

Rational parse_rational(std::string_view text) {
  Rational q;
  std::string s(text);
  if (s.empty() || q.set_str(s, 10) != 0) {
    throw InvalidInput("not a rational number: '" + s + "'");
  }
  if (q.get_den() == 0) throw InvalidInput("zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

HomPoly::HomPoly(int degree) : degree_(degree) {
  if (degree < 0) throw DegreeMismatch("negative polynomial degree");
  coeffs_.assign(static_cast<std::size_t>(degree) + 1, Rational(0));
}

HomPoly::HomPoly(int degree, std::vector<Rational> coeffs)
    : degree_(degree), coeffs_(std::move(coeffs)) {
  if (degree < 0) throw DegreeMismatch("negative polynomial degree");
  if (coeffs_.size() != static_cast<std::size_t>(degree) + 1) {
    throw DegreeMismatch("coefficient count must be degree + 1");
  }
}

HomPoly HomPoly::monomial(const Rational& c, int dx, int dy) {
  if (dx < 0 || dy < 0) throw DegreeMismatch("negative exponent in monomial");
  HomPoly p(dx + dy);
  p.coeffs_[static_cast<std::size_t>(dy)] = c;
  return p;
}

bool HomPoly::is_zero() const {
  for (const auto& c : coeffs_) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

std::vector<Term> HomPoly::terms() const {
  std::vector<Term> out;
  for (int k = 0; k <= degree_; ++k) {
    const auto& c = coeffs_[static_cast<std::size_t>(k)];
    if (sgn(c) != 0) out.push_back({c, degree_ - k, k});
  }
  return out;
}

std::optional<Term> HomPoly::single_term() const {
  auto t = terms();
  if (t.size() != 1) return std::nullopt;
  return t.front();
}

Rational HomPoly::eval(const Rational& x0, const Rational& y0) const {
  Rational result = 0;
  std::vector<Rational> ypow(static_cast<std::size_t>(degree_) + 1);
  ypow[0] = 1;
  for (int k = 1; k <= degree_; ++k) ypow[k] = ypow[k - 1] * y0;
  Rational xpow = 1;
  for (int k = degree_; k >= 0; --k) {
    result += coeffs_[static_cast<std::size_t>(k)] * xpow * ypow[static_cast<std::size_t>(k)];
    xpow *= x0;
  }
  return result;
}

namespace {

void append_power(std::ostringstream& os, char var, int e, bool& need_star) {
  if (e == 0) return;
  if (need_star) os << '*';
  os << var;
  if (e != 1) os << '^' << e;
  need_star = true;
}

}  // namespace

std::string HomPoly::to_string() const {
  auto ts = terms();
  if (ts.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : ts) {
    Rational mag = abs(t.coeff);
    if (first) {
      if (sgn(t.coeff) < 0) os << '-';
    } else {
      os << (sgn(t.coeff) < 0 ? " - " : " + ");
    }
    first = false;
    bool need_star = false;
    if (mag != 1 || (t.dx == 0 && t.dy == 0)) {
      os << mag.get_str();
      need_star = true;
    }
    append_power(os, 'x', t.dx, need_star);
    append_power(os, 'y', t.dy, need_star);
  }
  return os.str();
}

HomPoly HomPoly::operator-() const {
  HomPoly p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

HomPoly& HomPoly::operator+=(const HomPoly& other) {
  if (other.degree_ != degree_) {
    throw DegreeMismatch("cannot add polynomials of degree " + std::to_string(degree_) +
                         " and " + std::to_string(other.degree_));
  }
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  return *this;
}

HomPoly& HomPoly::operator-=(const HomPoly& other) {
  if (other.degree_ != degree_) {
    throw DegreeMismatch("cannot subtract polynomials of degree " + std::to_string(degree_) +
                         " and " + std::to_string(other.degree_));
  }
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  return *this;
}

HomPoly& HomPoly::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

HomPoly operator*(const HomPoly& p, const HomPoly& q) {
  HomPoly out(p.degree_ + q.degree_);
  for (int i = 0; i <= p.degree_; ++i) {
    const auto& pi = p.coeffs_[static_cast<std::size_t>(i)];
    if (sgn(pi) == 0) continue;
    for (int j = 0; j <= q.degree_; ++j) {
      const auto& qj = q.coeffs_[static_cast<std::size_t>(j)];
      if (sgn(qj) == 0) continue;
      out.coeffs_[static_cast<std::size_t>(i + j)] += pi * qj;
    }
  }
  return out;
}

void add_term(HomPoly& p, const Rational& c, int dx, int dy) {
  if (dx < 0 || dy < 0 || dx + dy != p.degree()) {
    throw DegreeMismatch("term degree does not match polynomial degree");
  }
  p += HomPoly::monomial(c, dx, dy);
}

std::pair<HomPoly, HomPoly> solve_split(const HomPoly& p, int a, int b) {
  if (a < 0 || b < 0 || p.degree() != a + b) {
    throw DegreeMismatch("solve_split needs deg p = a + b");
  }
  std::vector<Rational> r(static_cast<std::size_t>(b) + 1);
  std::vector<Rational> q(static_cast<std::size_t>(a) + 1);
  for (int k = 0; k <= a + b; ++k) {
    const auto& c = p.coeff(k);
    if (k <= b) {
      r[static_cast<std::size_t>(k)] = c;
    } else {
      q[static_cast<std::size_t>(k - b)] = c;
    }
  }
  return {HomPoly(b, std::move(r)), HomPoly(a, std::move(q))};
}

}  // namespace grassmor
