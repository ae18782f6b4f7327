#include "ihopf/freealg.hpp"

#include <algorithm>
#include <map>

namespace ihopf {

std::string Word::to_string(const char* sym) const {
  if (n == 0) return "1";
  std::string s;
  for (int p = 0; p < n; ++p) s += std::string(sym) + "[" + std::to_string((*this)[p] + 1) + "]";
  return s;
}

namespace {

void enumerate_words(Weight rest, Word& cur, int rank, std::vector<Word>& out) {
  if (rest.is_zero()) {
    out.push_back(cur);
    return;
  }
  for (int i = 0; i < rank; ++i) {
    if (rest[i] <= 0) continue;
    --rest[i];
    cur.push_back(i);
    enumerate_words(rest, cur, rank, out);
    --cur.n;
    ++rest[i];
  }
}

}  // namespace

std::string format_free(const FreeElem& x, const char* sym) {
  if (x.is_zero()) return "0";
  std::string s;
  for (const auto& [w, c] : x.sorted()) {
    if (!s.empty()) s += " + ";
    s += coeff_prefix(c) + w.to_string(sym);
  }
  return s;
}

FreeAlgebra::FreeAlgebra(CartanData cd, int truncation) : cd_(std::move(cd)), trunc_(truncation) {
  if (trunc_ < 1 || trunc_ > kMaxWord) throw ConfigError("truncation height must lie in [1, " + std::to_string(kMaxWord) + "]");
}

void FreeAlgebra::check_height(const Weight& mu) const {
  if (mu.height() > trunc_)
    throw TruncationExceeded("weight of height " + std::to_string(mu.height()) + " exceeds truncation " + std::to_string(trunc_));
}

FreeElem FreeAlgebra::multiply_free(const FreeElem& x, const FreeElem& y) {
  FreeElem r;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) r.add(a + b, ca * cb);
  return r;
}

FreeElem FreeAlgebra::serre_element(int i, int j) const {
  const int m = 1 - cd_.c(i, j);
  FreeElem s;
  for (int r = 0; r <= m; ++r) {
    Scalar c = qbinom(m, r, cd_.d(i));
    if (r % 2) c = -c;
    s.add(Word::power(i, r) + Word::letter(j) + Word::power(i, m - r), c);
  }
  return s;
}

const FreeAlgebra::Component& FreeAlgebra::component(const Weight& mu) {
  auto it = comps_.find(mu);
  if (it != comps_.end()) return *it->second;
  check_height(mu);
  if (!mu.nonnegative()) throw std::invalid_argument("negative weight component requested");
  auto comp = std::make_unique<Component>();
  Word cur;
  enumerate_words(mu, cur, rank(), comp->words);
  for (int k = 0; k < static_cast<int>(comp->words.size()); ++k) comp->index.emplace(comp->words[static_cast<std::size_t>(k)], k);

  Echelon ech;
  auto to_row = [&](const FreeElem& e) {
    SparseRow row;
    for (const auto& [w, c] : e) row.emplace_back(comp->index.at(w), c);
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return row;
  };
  const int n = rank();
  for (int k = 0; k < n; ++k) {
    if (mu[k] <= 0) continue;
    const Component& sub = component(mu - Weight::unit(k));
    for (std::size_t p = 0; p < sub.words.size(); ++p) {
      if (sub.basis_of_col[p] >= 0) continue;
      FreeElem rel(Word::letter(k) + sub.words[p]);
      for (const auto& [b, c] : sub.red[p]) rel.add(Word::letter(k) + sub.basis[static_cast<std::size_t>(b)], -c);
      ech.add(to_row(rel));
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      Weight beta = Weight::unit(i, 1 - cd_.c(i, j)) + Weight::unit(j);
      Weight rest = mu - beta;
      if (!rest.nonnegative()) continue;
      FreeElem s = serre_element(i, j);
      const Component& sub = component(rest);
      for (const Word& b : sub.basis) ech.add(to_row(multiply_free(s, FreeElem(b))));
    }

  const int m = static_cast<int>(comp->words.size());
  comp->basis_of_col.assign(static_cast<std::size_t>(m), -1);
  for (int col = 0; col < m; ++col) {
    if (ech.is_pivot(col)) continue;
    comp->basis_of_col[static_cast<std::size_t>(col)] = static_cast<int>(comp->basis.size());
    comp->basis.push_back(comp->words[static_cast<std::size_t>(col)]);
    comp->basis_col.push_back(col);
  }
  comp->red.resize(static_cast<std::size_t>(m));
  for (int col = 0; col < m; ++col) {
    auto& r = comp->red[static_cast<std::size_t>(col)];
    if (comp->basis_of_col[static_cast<std::size_t>(col)] >= 0) {
      r.emplace_back(comp->basis_of_col[static_cast<std::size_t>(col)], Scalar(1));
      continue;
    }
    // pivot row: w + sum c_s s = 0 over standard columns s
    for (const auto& [s, c] : ech.pivot_row(col)) {
      if (s == col) continue;
      r.emplace_back(comp->basis_of_col[static_cast<std::size_t>(s)], -c);
    }
  }
  auto& slot = comps_[mu];
  slot = std::move(comp);
  return *slot;
}

const std::vector<Word>& FreeAlgebra::basis(const Weight& mu) { return component(mu).basis; }

bool FreeAlgebra::is_standard(const Word& w) {
  const Component& c = component(w.weight());
  return c.basis_of_col[static_cast<std::size_t>(c.index.at(w))] >= 0;
}

void FreeAlgebra::reduce_word_into(const Word& w, const Scalar& c, FreeElem& out) {
  if (w.size() <= 1) {
    out.add(w, c);
    return;
  }
  const Component& comp = component(w.weight());
  for (const auto& [b, x] : comp.red[static_cast<std::size_t>(comp.index.at(w))]) out.add(comp.basis[static_cast<std::size_t>(b)], c * x);
}

FreeElem FreeAlgebra::reduce(const FreeElem& x) {
  FreeElem out;
  for (const auto& [w, c] : x) reduce_word_into(w, c, out);
  return out;
}

FreeElem FreeAlgebra::mul(const FreeElem& x, const FreeElem& y) {
  FreeElem out;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) reduce_word_into(a + b, ca * cb, out);
  return out;
}

std::vector<std::tuple<Word, Word, Scalar>> FreeAlgebra::coproduct_word(const Word& w) const {
  const int n = w.size();
  std::vector<std::tuple<Word, Word, Scalar>> out;
  out.reserve(std::size_t{1} << n);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    // positions in mask go to the left factor
    Word l, r;
    int e = 0;
    for (int p = 0; p < n; ++p) {
      if (mask & (1u << p)) {
        l.a[l.n++] = static_cast<std::uint8_t>(w[p]);
        for (int q = 0; q < p; ++q)
          if (!(mask & (1u << q))) e += cd_.form(w[q], w[p]);
      } else {
        r.a[r.n++] = static_cast<std::uint8_t>(w[p]);
      }
    }
    out.emplace_back(l, r, Scalar::v_pow(e));
  }
  return out;
}

FreeTensor FreeAlgebra::coproduct(const FreeElem& x) {
  FreeTensor out;
  for (const auto& [w, c] : x) {
    for (const auto& [l, r, e] : coproduct_word(w)) {
      FreeElem lr, rr;
      reduce_word_into(l, Scalar(1), lr);
      reduce_word_into(r, Scalar(1), rr);
      const Scalar ce = c * e;
      for (const auto& [a, ca] : lr)
        for (const auto& [b, cb] : rr) out.add(WordPair{a, b}, ce * ca * cb);
    }
  }
  return out;
}

FreeElem FreeAlgebra::derivative_word(Side side, int i, const Word& w) const {
  FreeElem out;
  Weight pre;
  Weight total = w.weight();
  for (int p = 0; p < w.size(); ++p) {
    if (w[p] == i) {
      Weight other = side == Side::R ? pre : total - pre - Weight::unit(i);
      out.add(w.erased(p), Scalar::v_pow(cd_.form_alpha(i, other)));
    }
    ++pre[w[p]];
  }
  return out;
}

FreeElem FreeAlgebra::derivative(Side side, int i, const FreeElem& x) {
  FreeElem out;
  for (const auto& [w, c] : x)
    for (const auto& [u, e] : derivative_word(side, i, w)) reduce_word_into(u, c * e, out);
  return out;
}

Scalar FreeAlgebra::pairing_words(const Word& x, const Word& y) {
  if (x.size() != y.size()) return Scalar();
  if (x.empty()) return Scalar(1);
  if (x.weight() != y.weight()) return Scalar();
  WordPair key{x, y};
  auto it = pair_memo_.find(key);
  if (it != pair_memo_.end()) return it->second;
  const int i = x[0];
  const Word rest = x.sub(1, x.size());
  Scalar acc;
  for (const auto& [u, e] : derivative_word(Side::R, i, y)) acc += e * pairing_words(rest, u);
  acc *= vi_minus(i);
  pair_memo_.emplace(key, acc);
  return acc;
}

Scalar FreeAlgebra::pairing(const FreeElem& x, const FreeElem& y) {
  Scalar acc;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) {
      if (a.size() != b.size()) continue;
      Scalar p = pairing_words(a, b);
      if (!p.is_zero()) acc += ca * cb * p;
    }
  return acc;
}

FreeElem FreeAlgebra::ad(int i, int power, const FreeElem& x) {
  FreeElem cur = reduce(x);
  for (int k = 0; k < power; ++k) {
    FreeElem next;
    for (const auto& [w, c] : cur) {
      reduce_word_into(Word::letter(i) + w, c, next);
      reduce_word_into(w + Word::letter(i), -c * Scalar::v_pow(cd_.form_alpha(i, w.weight())), next);
    }
    cur = std::move(next);
  }
  return cur;
}

FreeElem FreeAlgebra::ad_divided(int i, int m, const FreeElem& x) { return ad(i, m, x).scaled(qfact(m, cd_.d(i)).inv()); }

FreeElem FreeAlgebra::divided_power(int i, int m) { return FreeElem(Word::power(i, m), qfact(m, cd_.d(i)).inv()); }

}  // namespace ihopf
