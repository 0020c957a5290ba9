#pragma once

// Exact rational scalar used for every coefficient and coordinate.
//
// Thin value wrapper around GMP's mpq_class. The wrapper keeps expression
// templates out of the public surface and fixes the textual forms used by
// the JSON and SVG writers.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace trop {

class Rational {
 public:
  Rational() = default;
  Rational(long n) : value_(n) {}                       // NOLINT(implicit)
  Rational(int n) : value_(n) {}                        // NOLINT(implicit)
  Rational(long long n) : value_(static_cast<long>(n)) {}  // NOLINT(implicit)
  Rational(long long num, long long den);
  explicit Rational(mpq_class v);
  explicit Rational(const mpz_class& n) : value_(n) {}

  // Accepts "n", "-n", "n/d" (d may be negative; result is canonical).
  static Rational parse(std::string_view text);

  const mpq_class& raw() const { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  // "n" for integers, "n/d" otherwise.
  std::string str() const;
  // Always "n/d", the JSON serialization.
  std::string fraction() const;
  // Fixed-point decimal, rounded half away from zero.
  std::string decimal(int places) const;

  mpz_class floor() const;
  double to_double() const { return value_.get_d(); }

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_{0};
};

Rational abs(const Rational& r);
Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

// Representative of r in [0, m) for m > 0.
Rational mod(const Rational& r, const Rational& m);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace trop
