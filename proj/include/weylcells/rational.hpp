#pragma once

#include <cstdint>
#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace weylcells {

/// Exact rational with 64-bit numerator/denominator, always normalized
/// (gcd(num, den) == 1, den > 0). Intermediate products use 128-bit integers
/// and overflow is reported as std::overflow_error.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t n, std::int64_t d);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  /// Throws std::domain_error when the value is not an integer.
  std::int64_t to_integer() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// "p/q" form, used by every serialized output ("3/1", "-1/2").
  std::string str() const;
  /// Compact form: "3", "-1/2".
  std::string compact() const;

  /// Parses "p", "p/q" or "-p/q".
  static Rational parse(const std::string& text);

 private:
  static Rational from_wide(__int128 n, __int128 d);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

using Vector = std::vector<Rational>;

Rational dot(const Vector& a, const Vector& b);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Rational& c, const Vector& v);
Vector operator-(const Vector& v);

}  // namespace weylcells
