// Finite linear combinations over Q(u) keyed by monomials, plus a sparse
// row-echelon engine shared by every module that solves linear systems.
#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ihopf/scalar.hpp"

namespace ihopf {

struct KeyHash {
  template <class K>
  std::size_t operator()(const K& k) const {
    return k.hash();
  }
};

inline std::size_t hash_mix(std::size_t h, std::size_t x) {
  return h ^ (x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
}

template <class K>
class Lin {
 public:
  using Map = std::unordered_map<K, Scalar, KeyHash>;

  Lin() = default;
  Lin(const K& k, Scalar c = Scalar(1)) { add(k, std::move(c)); }  // NOLINT(implicit)

  void add(const K& k, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = m_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) m_.erase(it);
    }
  }
  void add(const Lin& o, const Scalar& c) {
    if (c.is_zero()) return;
    for (const auto& [k, x] : o.m_) add(k, c.is_one() ? x : x * c);
  }

  Scalar coeff(const K& k) const {
    auto it = m_.find(k);
    return it == m_.end() ? Scalar() : it->second;
  }
  bool is_zero() const { return m_.empty(); }
  std::size_t size() const { return m_.size(); }
  const Map& terms() const { return m_; }
  auto begin() const { return m_.begin(); }
  auto end() const { return m_.end(); }

  Lin& operator+=(const Lin& o) {
    for (const auto& [k, x] : o.m_) add(k, x);
    return *this;
  }
  Lin& operator-=(const Lin& o) {
    for (const auto& [k, x] : o.m_) add(k, -x);
    return *this;
  }
  Lin operator+(const Lin& o) const {
    Lin r = *this;
    return r += o;
  }
  Lin operator-(const Lin& o) const {
    Lin r = *this;
    return r -= o;
  }
  Lin operator-() const { return scaled(Scalar(-1)); }
  Lin scaled(const Scalar& c) const {
    Lin r;
    if (c.is_zero()) return r;
    for (const auto& [k, x] : m_) r.m_.emplace(k, x * c);
    return r;
  }
  friend Lin operator*(const Scalar& c, const Lin& x) { return x.scaled(c); }
  bool operator==(const Lin& o) const { return m_ == o.m_; }
  bool operator!=(const Lin& o) const { return !(m_ == o.m_); }

  // terms ordered by key (requires K::operator<)
  std::vector<std::pair<K, Scalar>> sorted() const {
    std::vector<std::pair<K, Scalar>> v(m_.begin(), m_.end());
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
  }

  template <class F>
  Lin map_keys(F&& f) const {
    Lin r;
    for (const auto& [k, x] : m_) r.add(f(k), x);
    return r;
  }

 private:
  Map m_;
};

// "", "-", "3*" or "(expr)*" prefix for a term with coefficient c
std::string coeff_prefix(const Scalar& c);

// Sparse row over integer column ids, columns ascending.
using SparseRow = std::vector<std::pair<int, Scalar>>;

// r += c * o
void row_axpy(SparseRow& r, const Scalar& c, const SparseRow& o);

// Incremental reduced row echelon form. Pivot of a row is its smallest column.
class Echelon {
 public:
  // Reduces `row` by the current pivots; returns the residue (empty if dependent).
  SparseRow reduce(SparseRow row) const;
  // Adds a row; returns true if it increased the rank.
  bool add(SparseRow row);
  // Same as add, additionally tracking the combination of inserted rows (by insertion
  // index) that produced each pivot row. Use one mode consistently per instance.
  bool add_tracked(SparseRow row);

  std::size_t rank() const { return pivots_.size(); }
  bool is_pivot(int col) const { return pos_.count(col) > 0; }
  const SparseRow& pivot_row(int col) const { return rows_[pos_.at(col)]; }
  const SparseRow& pivot_combination(int col) const { return combos_[pos_.at(col)]; }
  std::vector<int> pivots() const;
  // Tracked mode only: coefficients x (by insertion index) with sum x_k row_k = target.
  bool solve(const SparseRow& target, SparseRow& coeffs) const;

 private:
  bool insert(SparseRow row, SparseRow combo, bool tracked);
  std::vector<SparseRow> rows_;
  std::vector<SparseRow> combos_;
  std::vector<int> pivots_;
  std::unordered_map<int, std::size_t> pos_;
  int inserted_ = 0;
};

}  // namespace ihopf
