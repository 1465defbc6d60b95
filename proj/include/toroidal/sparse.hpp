#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "toroidal/rational.hpp"

namespace toroidal {

/// Sorted (key, coefficient) list with no zero coefficients.
template <class K>
using SparseVec = std::vector<std::pair<K, Rational>>;

/// Sort by key, merge duplicates, drop zeros.
template <class K>
void normalize(SparseVec<K>& v) {
  if (v.size() <= 1) {
    if (!v.empty() && v.front().second.is_zero()) v.clear();
    return;
  }
  std::sort(v.begin(), v.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < v.size();) {
    Rational acc = v[i].second;
    std::size_t k = i + 1;
    while (k < v.size() && !(v[i].first < v[k].first)) acc += v[k++].second;
    if (!acc.is_zero()) {
      if (out != i) v[out].first = std::move(v[i].first);
      v[out].second = acc;
      ++out;
    }
    i = k;
  }
  v.resize(out);
}

/// acc += s * x, both normalized; result normalized.
template <class K>
void add_scaled(SparseVec<K>& acc, const SparseVec<K>& x, const Rational& s = Rational(1)) {
  if (s.is_zero() || x.empty()) return;
  if (acc.empty()) {
    acc.reserve(x.size());
    for (const auto& [k, c] : x) acc.emplace_back(k, c * s);
    return;
  }
  SparseVec<K> out;
  out.reserve(acc.size() + x.size());
  auto a = acc.begin();
  auto b = x.begin();
  while (a != acc.end() || b != x.end()) {
    if (b == x.end() || (a != acc.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == acc.end() || b->first < a->first) {
      out.emplace_back(b->first, b->second * s);
      ++b;
    } else {
      Rational c = a->second + b->second * s;
      if (!c.is_zero()) out.emplace_back(std::move(a->first), c);
      ++a;
      ++b;
    }
  }
  acc = std::move(out);
}

template <class K>
SparseVec<K> scaled(const SparseVec<K>& x, const Rational& s) {
  SparseVec<K> out;
  if (s.is_zero()) return out;
  out.reserve(x.size());
  for (const auto& [k, c] : x) out.emplace_back(k, c * s);
  return out;
}

template <class K>
Rational coefficient(const SparseVec<K>& v, const K& key) {
  auto it = std::lower_bound(v.begin(), v.end(), key,
                             [](const auto& e, const K& k) { return e.first < k; });
  if (it != v.end() && !(key < it->first)) return it->second;
  return Rational(0);
}

/// Accumulates many scaled vectors by appending, then normalizes once.
template <class K>
class Accumulator {
 public:
  void add(const K& k, const Rational& c) {
    if (!c.is_zero()) buf_.emplace_back(k, c);
  }
  void add(const SparseVec<K>& x, const Rational& s = Rational(1)) {
    if (s.is_zero()) return;
    for (const auto& [k, c] : x) buf_.emplace_back(k, c * s);
  }
  SparseVec<K> take() {
    normalize(buf_);
    return std::move(buf_);
  }
  [[nodiscard]] bool empty() const { return buf_.empty(); }

 private:
  SparseVec<K> buf_;
};

}  // namespace toroidal
