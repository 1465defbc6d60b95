#include "toroidal/rational.hpp"

#include <cctype>
#include <charconv>
#include <ostream>

namespace toroidal {

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t v = 0;
  const auto* first = s.data();
  const auto* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (s.empty() || ec != std::errc() || ptr != last) {
    throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
  }
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const auto t = trim(text);
  const auto slash = t.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(t, text));
  return Rational(parse_int(trim(t.substr(0, slash)), text),
                  parse_int(trim(t.substr(slash + 1)), text));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational binomial(std::int64_t a, int k) {
  if (k < 0) return Rational(0);
  Rational out(1);
  for (int i = 0; i < k; ++i) {
    out *= Rational(a - i, i + 1);
  }
  return out;
}

Rational factorial(int k) {
  Rational out(1);
  for (int i = 2; i <= k; ++i) out *= Rational(i);
  return out;
}

}  // namespace toroidal
