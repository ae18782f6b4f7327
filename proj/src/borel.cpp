#include "ihopf/borel.hpp"

namespace ihopf {

std::string torus_to_string(const Weight& h, int rank, const char* tor) {
  std::string s;
  for (int i = 0; i < rank; ++i) {
    if (!h[i]) continue;
    s += std::string(tor) + "[" + std::to_string(i + 1) + "]";
    if (h[i] != 1) s += "^" + std::to_string(h[i]);
  }
  return s;
}

std::string BorelMono::to_string(int rank, const char* sym, const char* tor) const {
  std::string t = torus_to_string(h, rank, tor);
  if (w.empty()) return t.empty() ? "1" : t;
  return t.empty() ? w.to_string(sym) : w.to_string(sym) + "*" + t;
}

std::string format_borel(const BorelElem& x, int rank, const char* sym, const char* tor) {
  if (x.is_zero()) return "0";
  std::string s;
  for (const auto& [m, c] : x.sorted()) {
    if (!s.empty()) s += " + ";
    s += coeff_prefix(c) + m.to_string(rank, sym, tor);
  }
  return s;
}

BorelElem BorelAlgebra::normalize(const BorelElem& x) {
  BorelElem out;
  for (const auto& [m, c] : x) {
    check_mode(m.h);
    FreeElem r;
    f_.reduce_word_into(m.w, c, r);
    for (const auto& [w, cw] : r) out.add(BorelMono{w, m.h}, cw);
  }
  return out;
}

void BorelAlgebra::mul_mono_into(const BorelMono& a, const BorelMono& b, const Scalar& c, BorelElem& out) {
  const Weight h = a.h + b.h;
  check_mode(h);
  const Scalar e = c * Scalar::v_pow(cartan().form(a.h, b.w.weight()));
  if (a.w.empty() || b.w.empty()) {
    out.add(BorelMono{a.w + b.w, h}, e);
    return;
  }
  FreeElem r;
  f_.reduce_word_into(a.w + b.w, e, r);
  for (const auto& [w, cw] : r) out.add(BorelMono{w, h}, cw);
}

BorelElem BorelAlgebra::mul(const BorelElem& x, const BorelElem& y) {
  BorelElem out;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) mul_mono_into(a, b, ca * cb, out);
  return out;
}

const std::vector<std::tuple<Word, Word, Scalar>>& BorelAlgebra::word_coproduct(const Word& w) {
  auto it = cop_.find(w);
  if (it != cop_.end()) return it->second;
  Lin<WordPair> acc;
  for (const auto& [l, r, e] : f_.coproduct_word(w)) {
    FreeElem lr, rr;
    f_.reduce_word_into(l, Scalar(1), lr);
    f_.reduce_word_into(r, Scalar(1), rr);
    for (const auto& [a, ca] : lr)
      for (const auto& [b, cb] : rr) acc.add(WordPair{a, b}, e * ca * cb);
  }
  std::vector<std::tuple<Word, Word, Scalar>> v;
  for (const auto& [p, c] : acc.sorted()) v.emplace_back(p.a, p.b, c);
  return cop_.emplace(w, std::move(v)).first->second;
}

BorelTensor<2> BorelAlgebra::coproduct(const BorelElem& x) { return coproduct_iter<2>(x); }

Scalar BorelAlgebra::counit(const BorelElem& x) const {
  Scalar s;
  for (const auto& [m, c] : x)
    if (m.w.empty()) s += c;
  return s;
}

BorelElem BorelAlgebra::antipode_word(const Word& w, bool inverse) {
  auto& cache = inverse ? sinv_cache_ : s_cache_;
  auto it = cache.find(w);
  if (it != cache.end()) return it->second;
  // S(t_i) = -h_i^{-1} t_i, S^{-1}(t_i) = -t_i h_i^{-1}; both anti-multiplicative
  BorelElem acc = one();
  for (int p = w.size() - 1; p >= 0; --p) {
    const int i = w[p];
    BorelElem g = inverse ? BorelElem(BorelMono{Word::letter(i), -Weight::unit(i)}, Scalar(-1))
                          : mul(torus(-Weight::unit(i)), theta(i)).scaled(Scalar(-1));
    acc = mul(acc, g);
  }
  return cache.emplace(w, acc).first->second;
}

BorelElem BorelAlgebra::antipode(const BorelElem& x) {
  if (hat_) throw NegativeTorusExponent();
  BorelElem out;
  for (const auto& [m, c] : x) out.add(mul(torus(-m.h), antipode_word(m.w, false)), c);
  return out;
}

BorelElem BorelAlgebra::antipode_inv(const BorelElem& x) {
  if (hat_) throw NegativeTorusExponent();
  BorelElem out;
  for (const auto& [m, c] : x) out.add(mul(torus(-m.h), antipode_word(m.w, true)), c);
  return out;
}

BorelMono BorelAlgebra::tau_mono(const BorelMono& m) const {
  return BorelMono{m.w.mapped(cartan().tau_perm()), cartan().tau(m.h)};
}

BorelElem BorelAlgebra::tau(const BorelElem& x) {
  BorelElem out;
  for (const auto& [m, c] : x) {
    BorelMono t = tau_mono(m);
    FreeElem r;
    f_.reduce_word_into(t.w, c, r);
    for (const auto& [w, cw] : r) out.add(BorelMono{w, t.h}, cw);
  }
  return out;
}

Scalar BorelAlgebra::pairing_mono(const BorelMono& a, const BorelMono& b, bool twisted) {
  if (a.w.size() != b.w.size()) return Scalar();
  const BorelMono ta = twisted ? tau_mono(a) : a;
  Scalar p = f_.pairing_words(ta.w, b.w);
  if (p.is_zero()) return p;
  return p * Scalar::v_pow(cartan().form(ta.h, b.h));
}

Scalar BorelAlgebra::pairing(const BorelElem& x, const BorelElem& y, bool twisted) {
  Scalar acc;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) {
      Scalar p = pairing_mono(a, b, twisted);
      if (!p.is_zero()) acc += ca * cb * p;
    }
  return acc;
}

Scalar BorelAlgebra::chi_torus(const Weight& mu) const {
  const CartanData& cd = cartan();
  // chi(h_i^{+-1} h^nu) = chi(h_i^{+-1}) chi(h^nu) phi(h_{tau i}^{+-1}, h^nu), chi(h_i^{-1}) = 1
  int e = 0;
  Weight rest = mu;
  for (int i = 0; i < cd.rank(); ++i) {
    while (rest[i] != 0) {
      const int sgn = rest[i] > 0 ? 1 : -1;
      rest[i] = static_cast<std::int16_t>(rest[i] - sgn);
      if (sgn > 0) e += cd.form(i, cd.tau(i));
      e += sgn * cd.form_alpha(cd.tau(i), rest);
    }
  }
  return Scalar::v_pow(e);
}

Scalar BorelAlgebra::chi_mono(const BorelMono& m) {
  if (m.w.empty()) return chi_torus(m.h);
  // chi needs a tau-paired letter multiset
  if (cartan().tau(m.w.weight()) != m.w.weight()) return Scalar();
  auto it = chi_cache_.find(m);
  if (it != chi_cache_.end()) return it->second;
  const CartanData& cd = cartan();
  const int i = m.w[0];
  const Word rest = m.w.sub(1, m.w.size());
  Scalar acc;
  for (const auto& [u, e] : f_.derivative_word(Side::R, cd.tau(i), rest)) acc += e * chi_mono(BorelMono{u, m.h});
  acc *= Scalar::v_pow(cd.form(i, cd.tau(i))) * f_.vi_minus(i);
  chi_cache_.emplace(m, acc);
  return acc;
}

Scalar BorelAlgebra::chi(const BorelElem& x) {
  Scalar acc;
  for (const auto& [m, c] : x) {
    Scalar v = chi_mono(m);
    if (!v.is_zero()) acc += c * v;
  }
  return acc;
}

}  // namespace ihopf
