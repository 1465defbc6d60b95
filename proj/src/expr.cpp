#include "toroidal/expr.hpp"

#include <cctype>
#include <limits>
#include <sstream>

namespace toroidal {

namespace {

class Parser {
 public:
  Parser(const std::string& text, const ToroidalAlgebra& alg) : t_(text), alg_(alg) {}

  ToroidalElement parse() {
    Accumulator<Symbol> acc;
    skip();
    if (at_end()) fail("empty expression");
    if (t_.find_first_not_of(" \t\n\r0", pos_) == std::string::npos && peek() == '0') {
      advance();
      if (at_end()) return {};
      fail("expected '*'");
    }
    bool first = true;
    while (true) {
      int sign = 1;
      bool had_sign = false;
      while (peek() == '+' || peek() == '-') {
        if (peek() == '-') sign = -sign;
        had_sign = true;
        advance();
      }
      if (!first && !had_sign) fail("expected '+' or '-'");
      first = false;
      Rational coef(sign);
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coef *= rational();
        expect('*');
      }
      acc.add(element(atom()), coef);
      if (at_end()) break;
    }
    return alg_.canonicalize(acc.take());
  }

 private:
  [[nodiscard]] bool at_end() const { return pos_ >= t_.size(); }
  [[nodiscard]] char peek() const { return at_end() ? '\0' : t_[pos_]; }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(t_[pos_]))) ++pos_;
  }
  void advance() {
    ++pos_;
    skip();
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    advance();
  }
  bool accept(const std::string& word) {
    if (t_.compare(pos_, word.size(), word) != 0) return false;
    pos_ += word.size();
    skip();
    return true;
  }

  std::int64_t natural() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
    std::int64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      if (v > (std::numeric_limits<std::int64_t>::max() - 9) / 10) fail("integer too large");
      v = v * 10 + (t_[pos_] - '0');
      ++pos_;
    }
    skip();
    return v;
  }
  int integer() {
    int sign = 1;
    if (peek() == '-' || peek() == '+') {
      if (peek() == '-') sign = -1;
      advance();
    }
    const std::int64_t v = natural();
    if (v > std::numeric_limits<int>::max()) fail("integer too large");
    return sign * static_cast<int>(v);
  }
  int exponent() {
    if (peek() == '(') {
      advance();
      const int v = integer();
      expect(')');
      return v;
    }
    return integer();
  }
  Rational rational() {
    const std::int64_t n = natural();
    if (peek() != '/') return Rational(n);
    advance();
    const std::size_t at = pos_;
    const std::int64_t d = natural();
    if (d == 0) throw ParseError("zero denominator", at);
    return Rational(n, d);
  }

  // [*t0^j][*t^(m1,...,mN)]
  void suffixes(int& j, std::vector<int>& m, bool allow_t) {
    while (peek() == '*') {
      const std::size_t save = pos_;
      advance();
      if (accept("t0")) {
        expect('^');
        j = exponent();
      } else if (allow_t && accept("t")) {
        expect('^');
        const std::size_t at = pos_;
        expect('(');
        std::vector<int> v;
        if (peek() != ')') {
          v.push_back(integer());
          while (peek() == ',') {
            advance();
            v.push_back(integer());
          }
        }
        expect(')');
        if (static_cast<int>(v.size()) != alg_.n()) {
          throw InputError("arity error at offset " + std::to_string(at) + ": t-exponent has " +
                           std::to_string(v.size()) + " entries, N = " + std::to_string(alg_.n()));
        }
        m = std::move(v);
      } else {
        pos_ = save;
        fail(allow_t ? "expected t0^ or t^" : "expected t0^");
      }
    }
  }

  Symbol atom() {
    std::vector<int> m(alg_.n(), 0);
    int j = 0;
    if (accept("Cvir")) return Symbol::cvir();
    if (accept("d0")) {
      suffixes(j, m, false);
      return Symbol::d0(j);
    }
    const char kind = peek();
    if (kind != 'g' && kind != 'k' && kind != 'd') fail("expected an atom (g[..], k[..], d[..], d0, Cvir)");
    advance();
    expect('[');
    const std::size_t label_at = pos_;
    std::string label;
    while (!at_end() && t_[pos_] != ']' && !std::isspace(static_cast<unsigned char>(t_[pos_]))) label += t_[pos_++];
    skip();
    if (label.empty()) fail("empty label");
    expect(']');
    int index = 0;
    if (kind == 'g') {
      try {
        index = alg_.lie().index_of(label);
      } catch (const InputError&) {
        throw InputError("unknown label '" + label + "' at offset " + std::to_string(label_at));
      }
    } else {
      const bool digits = label.find_first_not_of("0123456789") == std::string::npos && label.size() < 6;
      index = digits ? std::stoi(label) : -1;
      const int lo = kind == 'k' ? 0 : 1;
      if (index < lo || index > alg_.n()) {
        throw InputError("unknown label '" + label + "' at offset " + std::to_string(label_at) + ": " +
                         std::string(1, kind) + " index must lie in " + std::to_string(lo) + ".." +
                         std::to_string(alg_.n()));
      }
    }
    suffixes(j, m, true);
    switch (kind) {
      case 'g':
        return Symbol::g(index, j, m);
      case 'k':
        return Symbol::k(index, j, m);
      default:
        return Symbol::d(index, j, m);
    }
  }

  const std::string& t_;
  const ToroidalAlgebra& alg_;
  std::size_t pos_ = 0;
};

}  // namespace

ToroidalElement parse_element(const std::string& text, const ToroidalAlgebra& alg) { return Parser(text, alg).parse(); }

std::string print_symbol(const Symbol& s, const ToroidalAlgebra& alg) {
  std::ostringstream os;
  const auto tail = [&] {
    if (s.j != 0) os << "*t0^" << s.j;
    bool zero = true;
    for (int x : s.m) zero = zero && x == 0;
    if (!zero) {
      os << "*t^(";
      for (std::size_t i = 0; i < s.m.size(); ++i) os << (i ? "," : "") << s.m[i];
      os << ")";
    }
  };
  switch (s.kind) {
    case SymKind::G:
      os << "g[" << alg.lie().basis_labels[s.index] << "]";
      tail();
      break;
    case SymKind::K:
      os << "k[" << s.index << "]";
      tail();
      break;
    case SymKind::D:
      os << "d[" << s.index << "]";
      tail();
      break;
    case SymKind::D0:
      os << "d0";
      if (s.j != 0) os << "*t0^" << s.j;
      break;
    case SymKind::CVir:
      os << "Cvir";
      break;
  }
  return os.str();
}

std::string print_element(const ToroidalElement& x, const ToroidalAlgebra& alg) {
  if (x.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [s, c] : x) {
    const bool neg = c < Rational(0);
    const Rational a = neg ? -c : c;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    if (a != Rational(1)) out += a.str() + "*";
    out += print_symbol(s, alg);
  }
  return out;
}

}  // namespace toroidal
