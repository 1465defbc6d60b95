#include "toroidal/quadratic.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

namespace toroidal {

namespace {

using Radical = QuadNumber::Radical;

// Product of radicals: sqrt(S) sqrt(T) = prod_{a in S cap T} a * sqrt(S xor T).
std::pair<Rational, Radical> multiply_radicals(const Radical& s, const Radical& t) {
  Radical sym;
  Radical both;
  std::set_symmetric_difference(s.begin(), s.end(), t.begin(), t.end(), std::back_inserter(sym));
  std::set_intersection(s.begin(), s.end(), t.begin(), t.end(), std::back_inserter(both));
  Rational scale(1);
  for (auto a : both) scale *= Rational(a);
  return {scale, sym};
}

}  // namespace

QuadNumber QuadNumber::sqrt(const Rational& q) {
  if (q.is_zero()) return {};
  // sqrt(p/d) = sqrt(p*d)/d
  __int128 x = static_cast<__int128>(q.num()) * q.den();
  Radical rad;
  if (x < 0) {
    rad.push_back(-1);
    x = -x;
  }
  std::int64_t outside = 1;
  for (std::int64_t p = 2; static_cast<__int128>(p) * p <= x; ++p) {
    int e = 0;
    while (x % p == 0) {
      x /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) outside *= p;
    if (e % 2 == 1) rad.push_back(p);
  }
  if (x > 1) rad.push_back(static_cast<std::int64_t>(x));
  std::sort(rad.begin(), rad.end());
  return QuadNumber(Rational(outside, q.den()), rad);
}

Rational QuadNumber::to_rational() const {
  if (!is_rational()) throw std::domain_error("irrational value where a rational was required: " + str());
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

QuadNumber& QuadNumber::operator+=(const QuadNumber& o) {
  for (const auto& [r, c] : o.terms_) {
    auto [it, fresh] = terms_.emplace(r, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

QuadNumber& QuadNumber::operator-=(const QuadNumber& o) { return *this += -o; }

QuadNumber operator-(const QuadNumber& a) {
  QuadNumber out = a;
  for (auto& [r, c] : out.terms_) c = -c;
  return out;
}

QuadNumber operator*(const QuadNumber& a, const QuadNumber& b) {
  QuadNumber out;
  for (const auto& [ra, ca] : a.terms_) {
    for (const auto& [rb, cb] : b.terms_) {
      auto [scale, rad] = multiply_radicals(ra, rb);
      out += QuadNumber(ca * cb * scale, rad);
    }
  }
  return out;
}

QuadNumber QuadNumber::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (is_rational()) return QuadNumber(to_rational().inverse());
  // Pick an atom a occurring in some radical; write x = u + v sqrt(a) and use
  // x * (u - v sqrt(a)) = u^2 - a v^2, which is free of a.
  std::int64_t atom = 0;
  for (const auto& [r, c] : terms_) {
    if (!r.empty()) {
      atom = r.front();
      break;
    }
  }
  QuadNumber conj;
  for (const auto& [r, c] : terms_) {
    const bool has = std::binary_search(r.begin(), r.end(), atom);
    conj += QuadNumber(has ? -c : c, r);
  }
  const QuadNumber norm = *this * conj;
  return conj * norm.inverse();
}

std::string QuadNumber::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [r, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    out += c.str();
    for (auto a : r) out += "*sqrt(" + std::to_string(a) + ")";
  }
  return out;
}

}  // namespace toroidal
