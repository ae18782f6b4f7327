#include "ihopf/lin.hpp"

#include <cctype>

namespace ihopf {

std::string coeff_prefix(const Scalar& c) {
  if (c.is_one()) return "";
  if (c == Scalar(-1)) return "-";
  std::string s = c.to_string(ScalarStyle::Pretty);
  bool simple = !s.empty();
  for (std::size_t k = 0; k < s.size(); ++k)
    if (!(std::isdigit(static_cast<unsigned char>(s[k])) || (k == 0 && s[k] == '-'))) simple = false;
  return simple ? s + "*" : "(" + s + ")*";
}

void row_axpy(SparseRow& r, const Scalar& c, const SparseRow& o) {
  if (c.is_zero() || o.empty()) return;
  SparseRow out;
  out.reserve(r.size() + o.size());
  std::size_t a = 0, b = 0;
  while (a < r.size() || b < o.size()) {
    if (b == o.size() || (a < r.size() && r[a].first < o[b].first)) {
      out.push_back(std::move(r[a++]));
    } else if (a == r.size() || o[b].first < r[a].first) {
      out.emplace_back(o[b].first, c * o[b].second);
      ++b;
    } else {
      Scalar s = r[a].second + c * o[b].second;
      if (!s.is_zero()) out.emplace_back(r[a].first, std::move(s));
      ++a;
      ++b;
    }
  }
  r = std::move(out);
}

SparseRow Echelon::reduce(SparseRow row) const {
  SparseRow orig = row;
  for (const auto& [col, val] : orig) {
    auto it = pos_.find(col);
    if (it != pos_.end()) row_axpy(row, -val, rows_[it->second]);
  }
  return row;
}

bool Echelon::insert(SparseRow row, SparseRow combo, bool tracked) {
  SparseRow orig = row;
  for (const auto& [col, val] : orig) {
    auto it = pos_.find(col);
    if (it == pos_.end()) continue;
    row_axpy(row, -val, rows_[it->second]);
    if (tracked) row_axpy(combo, -val, combos_[it->second]);
  }
  if (row.empty()) return false;
  const int q = row.front().first;
  const Scalar inv = row.front().second.inv();
  if (!inv.is_one()) {
    for (auto& e : row) e.second *= inv;
    if (tracked)
      for (auto& e : combo) e.second *= inv;
  }
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    auto& other = rows_[k];
    auto it = std::lower_bound(other.begin(), other.end(), q, [](const auto& e, int c) { return e.first < c; });
    if (it == other.end() || it->first != q) continue;
    Scalar f = -it->second;
    row_axpy(other, f, row);
    if (tracked) row_axpy(combos_[k], f, combo);
  }
  pos_[q] = rows_.size();
  pivots_.push_back(q);
  rows_.push_back(std::move(row));
  combos_.push_back(std::move(combo));
  return true;
}

bool Echelon::add(SparseRow row) { return insert(std::move(row), {}, false); }

bool Echelon::add_tracked(SparseRow row) {
  SparseRow combo{{inserted_++, Scalar(1)}};
  return insert(std::move(row), std::move(combo), true);
}

std::vector<int> Echelon::pivots() const {
  std::vector<int> p = pivots_;
  std::sort(p.begin(), p.end());
  return p;
}

bool Echelon::solve(const SparseRow& target, SparseRow& coeffs) const {
  SparseRow row = target;
  coeffs.clear();
  for (const auto& [col, val] : target) {
    auto it = pos_.find(col);
    if (it == pos_.end()) continue;
    row_axpy(row, -val, rows_[it->second]);
    row_axpy(coeffs, val, combos_[it->second]);
  }
  return row.empty();
}

}  // namespace ihopf
