#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace toroidal {

/// Exact rational with 64-bit numerator/denominator.
///
/// Always normalized: gcd(num, den) == 1 and den > 0. Intermediate products are
/// formed in 128 bits; a result that does not fit back into 64 bits throws
/// std::overflow_error rather than wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num_(n) {}  // NOLINT(implicit)
  Rational(std::int64_t n, std::int64_t d) { assign(n, d); }

  [[nodiscard]] constexpr std::int64_t num() const { return num_; }
  [[nodiscard]] constexpr std::int64_t den() const { return den_; }
  [[nodiscard]] constexpr bool is_zero() const { return num_ == 0; }
  [[nodiscard]] constexpr bool is_integer() const { return den_ == 1; }
  [[nodiscard]] constexpr int sign() const { return (num_ > 0) - (num_ < 0); }

  Rational& operator+=(const Rational& o) {
    if (den_ == 1 && o.den_ == 1) {
      num_ = narrow(static_cast<__int128>(num_) + o.num_);
      return *this;
    }
    const __int128 n = static_cast<__int128>(num_) * o.den_ +
                       static_cast<__int128>(o.num_) * den_;
    const __int128 d = static_cast<__int128>(den_) * o.den_;
    assign128(n, d);
    return *this;
  }
  Rational& operator-=(const Rational& o) { return *this += -o; }
  Rational& operator*=(const Rational& o) {
    if (den_ == 1 && o.den_ == 1) {
      num_ = narrow(static_cast<__int128>(num_) * o.num_);
      return *this;
    }
    assign128(static_cast<__int128>(num_) * o.num_,
              static_cast<__int128>(den_) * o.den_);
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.num_ == 0) throw std::domain_error("rational division by zero");
    assign128(static_cast<__int128>(num_) * o.den_,
              static_cast<__int128>(den_) * o.num_);
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(Rational a) {
    a.num_ = narrow(-static_cast<__int128>(a.num_));
    return a;
  }

  friend constexpr bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num_) * b.den_ <
           static_cast<__int128>(b.num_) * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  [[nodiscard]] Rational inverse() const { return Rational(1) / *this; }
  [[nodiscard]] Rational abs() const { return num_ < 0 ? -*this : *this; }
  [[nodiscard]] double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  /// "p/q", or "p" when the denominator is 1.
  [[nodiscard]] std::string str() const;

  /// Accepts "p", "-p", "p/q" with optional surrounding whitespace.
  static Rational parse(std::string_view text);

 private:
  static std::int64_t narrow(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("rational overflow");
    return static_cast<std::int64_t>(v);
  }
  static __int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      const __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }
  void assign(std::int64_t n, std::int64_t d) { assign128(n, d); }
  void assign128(__int128 n, __int128 d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    if (n == 0) {
      num_ = 0;
      den_ = 1;
      return;
    }
    const __int128 g = gcd128(n, d);
    num_ = narrow(n / g);
    den_ = narrow(d / g);
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Generalized binomial coefficient C(a, k) for integer a and k >= 0.
Rational binomial(std::int64_t a, int k);

Rational factorial(int k);

}  // namespace toroidal

template <>
struct std::hash<toroidal::Rational> {
  std::size_t operator()(const toroidal::Rational& r) const noexcept {
    return std::hash<std::int64_t>{}(r.num()) * 1000003u ^ std::hash<std::int64_t>{}(r.den());
  }
};
