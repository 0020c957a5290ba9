#include "trop/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace trop {

Rational::Rational(long long num, long long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  value_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  value_.canonicalize();
}

Rational::Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  auto is_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  auto to_mpz = [](std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_int(text)) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    return Rational(to_mpz(text));
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!is_int(num) || !is_int(den))
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  mpz_class d = to_mpz(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(mpq_class(to_mpz(num), d));
}

std::string Rational::str() const { return value_.get_str(); }

std::string Rational::fraction() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::decimal(int places) const {
  mpz_class scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  // round(|v| * scale) half away from zero
  mpq_class scaled = abs(value_) * scale;
  mpz_class q = scaled.get_num() / scaled.get_den();
  mpz_class r = scaled.get_num() % scaled.get_den();
  if (2 * r >= scaled.get_den()) q += 1;
  std::string digits = q.get_str();
  if (static_cast<int>(digits.size()) <= places)
    digits.insert(0, static_cast<std::size_t>(places + 1 - static_cast<int>(digits.size())), '0');
  std::string out;
  if (sgn(value_) < 0 && q != 0) out.push_back('-');
  out += digits.substr(0, digits.size() - static_cast<std::size_t>(places));
  if (places > 0) {
    out.push_back('.');
    out += digits.substr(digits.size() - static_cast<std::size_t>(places));
  }
  return out;
}

mpz_class Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (sgn(o.value_) == 0) throw std::domain_error("division by zero");
  value_ /= o.value_;
  return *this;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }
Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

Rational mod(const Rational& r, const Rational& m) {
  if (m.sign() <= 0) throw std::domain_error("modulus must be positive");
  const Rational q(mpq_class((r / m).floor()));
  return r - q * m;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace trop
