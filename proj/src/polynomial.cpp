#include "trop/polynomial.hpp"

#include "trop/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <optional>
#include <stdexcept>

namespace trop {

namespace {

long long exponent_sum(const Exponent& e) { return e[0] + e[1] + e[2]; }

// Recursive-descent reader for
//   poly   := term ('+' term)*
//   term   := factor ('*' factor)*
//   factor := coeff | var ('^' int)?
//   coeff  := '-'? (int ('/' posint)? | '(' coeff ')')
class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  TropicalPolynomial::Terms read(bool& saw_z, std::size_t& z_position) {
    skip_ws();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    TropicalPolynomial::Terms terms;
    for (;;) {
      auto [exp, coeff] = read_term();
      auto [it, inserted] = terms.emplace(exp, coeff);
      if (!inserted) it->second = max(it->second, coeff);
      skip_ws();
      if (at_end()) break;
      if (peek() != '+') throw ParseError(std::string("unexpected '") + peek() + "'", pos_);
      ++pos_;
    }
    saw_z = saw_z_;
    z_position = z_position_;
    return terms;
  }

 private:
  std::pair<Exponent, Rational> read_term() {
    Exponent exp{0, 0, 0};
    Rational coeff(0);
    for (;;) {
      skip_ws();
      if (at_end()) throw ParseError("expected coefficient or variable", pos_);
      const char c = peek();
      if (c == 'x' || c == 'y' || c == 'z') {
        const std::size_t slot = static_cast<std::size_t>(c - 'x');
        if (c == 'z' && !saw_z_) {
          saw_z_ = true;
          z_position_ = pos_;
        }
        ++pos_;
        long long power = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip_ws();
          bool neg = false;
          if (!at_end() && peek() == '-') {
            neg = true;
            ++pos_;
          }
          power = read_int();
          if (neg) power = -power;
        }
        exp[slot] += power;
      } else if (c == '-' || c == '(' || std::isdigit(static_cast<unsigned char>(c))) {
        coeff += read_coeff();
      } else {
        throw ParseError("expected coefficient or variable", pos_);
      }
      skip_ws();
      if (at_end() || peek() != '*') break;
      ++pos_;
    }
    return {exp, coeff};
  }

  Rational read_coeff() {
    skip_ws();
    if (at_end()) throw ParseError("expected coefficient", pos_);
    if (peek() == '-') {
      ++pos_;
      return -read_coeff();
    }
    if (peek() == '(') {
      ++pos_;
      Rational inner = read_coeff();
      skip_ws();
      if (at_end() || peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    std::string_view num = read_digits();
    skip_ws();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip_ws();
      const std::size_t den_pos = pos_;
      std::string_view den = read_digits();
      if (std::all_of(den.begin(), den.end(), [](char d) { return d == '0'; }))
        throw ParseError("zero denominator", den_pos);
      return Rational::parse(std::string(num) + "/" + std::string(den));
    }
    return Rational::parse(num);
  }

  std::string_view read_digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) throw ParseError("expected integer", pos_);
    return text_.substr(start, pos_ - start);
  }

  long long read_int() {
    const std::size_t start = pos_;
    std::string_view digits = read_digits();
    long long value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc()) throw ParseError("exponent out of range", start);
    return value;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  std::string_view text_;
  std::size_t pos_ = 0;
  bool saw_z_ = false;
  std::size_t z_position_ = 0;
};

std::string coefficient_text(const Rational& c) {
  if (c.sign() >= 0 && c.is_integer()) return c.str();
  return "(" + c.str() + ")";
}

}  // namespace

TropicalPolynomial::TropicalPolynomial(Terms terms, Arity arity)
    : terms_(std::move(terms)), arity_(arity) {
  if (terms_.empty()) throw std::invalid_argument("tropical polynomial needs at least one term");
  if (arity_ == Arity::Affine) {
    for (const auto& [e, c] : terms_)
      if (e[2] != 0) throw std::invalid_argument("affine polynomial with z exponent");
  } else {
    const long long d = exponent_sum(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
      if (exponent_sum(e) != d) throw DomainError("polynomial is not homogeneous");
  }
}

TropicalPolynomial TropicalPolynomial::parse(std::string_view text) {
  bool saw_z = false;
  std::size_t zpos = 0;
  auto terms = Reader(text).read(saw_z, zpos);
  try {
    return TropicalPolynomial(std::move(terms), saw_z ? Arity::Homogeneous : Arity::Affine);
  } catch (const DomainError& e) {
    throw ParseError(e.what(), 0);
  }
}

TropicalPolynomial TropicalPolynomial::parse(std::string_view text, Arity arity) {
  bool saw_z = false;
  std::size_t zpos = 0;
  auto terms = Reader(text).read(saw_z, zpos);
  if (saw_z && arity == Arity::Affine) throw ParseError("variable z in affine polynomial", zpos);
  try {
    return TropicalPolynomial(std::move(terms), arity);
  } catch (const DomainError& e) {
    throw ParseError(e.what(), 0);
  }
}

std::vector<Exponent> TropicalPolynomial::support() const {
  std::vector<Exponent> out;
  out.reserve(terms_.size());
  for (const auto& [e, c] : terms_) out.push_back(e);
  return out;
}

std::string TropicalPolynomial::str() const {
  static constexpr char names[3] = {'x', 'y', 'z'};
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += " + ";
    std::string term;
    const bool constant = e[0] == 0 && e[1] == 0 && e[2] == 0;
    if (constant || c.sign() != 0) term = coefficient_text(c);
    for (std::size_t i = 0; i < 3; ++i) {
      if (e[i] == 0) continue;
      if (!term.empty()) term += "*";
      term += names[i];
      if (e[i] != 1) term += "^" + std::to_string(e[i]);
    }
    out += term;
  }
  return out;
}

Rational evaluate(const TropicalPolynomial& f, std::span<const Rational> p) {
  const std::size_t n = f.arity() == Arity::Affine ? 2 : 3;
  if (p.size() != n) throw std::invalid_argument("point dimension does not match polynomial arity");
  std::optional<Rational> best;
  for (const auto& [e, c] : f.terms()) {
    Rational v = c;
    for (std::size_t i = 0; i < n; ++i)
      if (e[i] != 0) v += Rational(e[i]) * p[i];
    if (!best || *best < v) best = std::move(v);
  }
  return *best;
}

Rational evaluate(const TropicalPolynomial& f, const Point2& p) {
  if (f.arity() != Arity::Affine) throw std::invalid_argument("affine point for homogeneous polynomial");
  const Rational xy[2] = {p.x, p.y};
  return evaluate(f, std::span<const Rational>(xy, 2));
}

std::vector<Exponent> argmax_terms(const TropicalPolynomial& f, const Point2& p) {
  if (f.arity() != Arity::Affine) throw std::invalid_argument("affine point for homogeneous polynomial");
  std::vector<Exponent> out;
  std::optional<Rational> best;
  for (const auto& [e, c] : f.terms()) {
    Rational v = c + Rational(e[0]) * p.x + Rational(e[1]) * p.y;
    if (!best || *best < v) {
      best = std::move(v);
      out.clear();
      out.push_back(e);
    } else if (*best == v) {
      out.push_back(e);
    }
  }
  return out;
}

LatticePolygon newton_polygon(const TropicalPolynomial& f) {
  std::vector<LatticePoint> pts;
  for (const auto& [e, c] : f.terms()) pts.push_back(planar(e));
  return convex_hull(pts);
}

DegreeReport curve_degree(const TropicalPolynomial& f) {
  long long min_x = std::numeric_limits<long long>::max();
  long long min_y = std::numeric_limits<long long>::max();
  for (const auto& [e, c] : f.terms()) {
    min_x = std::min(min_x, e[0]);
    min_y = std::min(min_y, e[1]);
  }
  DegreeReport report;
  report.translation_used = {-min_x, -min_y};
  report.normalized_polygon = newton_polygon(f).translated(report.translation_used);
  for (const auto& v : report.normalized_polygon.vertices())
    report.degree = std::max(report.degree, v.x + v.y);
  report.full_support = report.normalized_polygon == standard_triangle(report.degree);
  if (report.degree == 0) report.full_support = true;
  return report;
}

TropicalPolynomial dehomogenize(const TropicalPolynomial& f) {
  if (f.arity() != Arity::Homogeneous) throw std::invalid_argument("dehomogenize expects a homogeneous polynomial");
  TropicalPolynomial::Terms terms;
  for (const auto& [e, c] : f.terms()) terms.emplace(Exponent{e[0], e[1], 0}, c);
  return TropicalPolynomial(std::move(terms), Arity::Affine);
}

TropicalPolynomial homogenize(const TropicalPolynomial& f, long long d) {
  if (f.arity() != Arity::Affine) throw std::invalid_argument("homogenize expects an affine polynomial");
  TropicalPolynomial::Terms terms;
  for (const auto& [e, c] : f.terms()) {
    if (e[0] < 0 || e[1] < 0 || e[0] + e[1] > d)
      throw DomainError("target degree " + std::to_string(d) + " too small to homogenize");
    terms.emplace(Exponent{e[0], e[1], d - e[0] - e[1]}, c);
  }
  return TropicalPolynomial(std::move(terms), Arity::Homogeneous);
}

TropicalPolynomial as_affine(const TropicalPolynomial& f) {
  return f.arity() == Arity::Affine ? f : dehomogenize(f);
}

TropicalPolynomial translate(const TropicalPolynomial& f, const Point2& shift) {
  const TropicalPolynomial g = as_affine(f);
  TropicalPolynomial::Terms terms;
  for (const auto& [e, c] : g.terms())
    terms.emplace(e, c - Rational(e[0]) * shift.x - Rational(e[1]) * shift.y);
  return TropicalPolynomial(std::move(terms), Arity::Affine);
}

}  // namespace trop
