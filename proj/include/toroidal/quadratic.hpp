#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "toroidal/rational.hpp"

namespace toroidal {

/// Element of a multi-quadratic extension Q(sqrt(a) : a in atoms), atoms being
/// -1 and primes. A radical is the sorted atom set S standing for prod sqrt(a),
/// with sqrt(-1)^2 = -1.
class QuadNumber {
 public:
  using Radical = std::vector<std::int64_t>;

  QuadNumber() = default;
  QuadNumber(const Rational& r) {  // NOLINT(implicit)
    if (!r.is_zero()) terms_[{}] = r;
  }
  QuadNumber(const Rational& r, Radical rad) {
    if (!r.is_zero()) terms_[std::move(rad)] = r;
  }

  /// sqrt(q) for rational q, reduced to (rational) * sqrt(squarefree atoms).
  static QuadNumber sqrt(const Rational& q);

  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] bool is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
  }
  /// Throws std::domain_error unless is_rational().
  [[nodiscard]] Rational to_rational() const;

  QuadNumber& operator+=(const QuadNumber& o);
  QuadNumber& operator-=(const QuadNumber& o);
  friend QuadNumber operator+(QuadNumber a, const QuadNumber& b) { return a += b; }
  friend QuadNumber operator-(QuadNumber a, const QuadNumber& b) { return a -= b; }
  friend QuadNumber operator-(const QuadNumber& a);
  friend QuadNumber operator*(const QuadNumber& a, const QuadNumber& b);
  friend QuadNumber operator/(const QuadNumber& a, const QuadNumber& b) {
    return a * b.inverse();
  }
  friend bool operator==(const QuadNumber& a, const QuadNumber& b) { return a.terms_ == b.terms_; }

  [[nodiscard]] QuadNumber inverse() const;
  [[nodiscard]] std::string str() const;
  [[nodiscard]] const std::map<Radical, Rational>& terms() const { return terms_; }

 private:
  std::map<Radical, Rational> terms_;
};

}  // namespace toroidal
