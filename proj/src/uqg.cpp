#include "ihopf/uqg.hpp"

#include <algorithm>

namespace ihopf {

namespace {

Scalar vp(int k) { return Scalar::v_pow(k); }

Scalar spow(const Scalar& s, int n) { return n >= 0 ? s.pow(n) : s.inv().pow(-n); }

Word reversed(const Word& w) {
  Word r;
  for (int p = w.size() - 1; p >= 0; --p) r.push_back(w[p]);
  return r;
}

GenWord reversed(const GenWord& w) {
  GenWord r;
  for (int p = w.size() - 1; p >= 0; --p) r.push_back(w[p]);
  return r;
}

}  // namespace

// ------------------------------------------------------------ UMono

bool UMono::operator<(const UMono& o) const {
  if (e != o.e) return e < o.e;
  if (f != o.f) return f < o.f;
  if (k != o.k) return k < o.k;
  return kp < o.kp;
}

std::string UMono::to_string(int rank) const {
  std::vector<std::string> parts;
  if (!e.empty()) parts.push_back(e.to_string("E"));
  const std::string t = torus_to_string(k, rank, "K") + torus_to_string(kp, rank, "K'");
  if (!t.empty()) parts.push_back(t);
  if (!f.empty()) parts.push_back(f.to_string("F"));
  if (parts.empty()) return "1";
  std::string s = parts[0];
  for (std::size_t p = 1; p < parts.size(); ++p) s += "*" + parts[p];
  return s;
}

std::string format_u(const UElem& x, int rank) {
  if (x.is_zero()) return "0";
  std::string s;
  for (const auto& [m, c] : x.sorted()) {
    if (!s.empty()) s += " + ";
    s += coeff_prefix(c) + m.to_string(rank);
  }
  return s;
}

// ------------------------------------------------------------ UAlgebra

UElem UAlgebra::E_word(const Word& w) { return normalize(UElem(UMono{w, {}, {}, {}})); }
UElem UAlgebra::F_word(const Word& w) { return normalize(UElem(UMono{{}, {}, {}, w})); }

UElem UAlgebra::E_divided(int i, int r) {
  return E_word(Word::power(i, r)).scaled(qfact(r, cartan().d(i)).inv());
}

UElem UAlgebra::F_divided(int i, int r) {
  return F_word(Word::power(i, r)).scaled(qfact(r, cartan().d(i)).inv());
}

void UAlgebra::add_reduced(const Word& e, const Weight& k, const Weight& kp, const Word& f, const Scalar& c,
                           UElem& out) {
  check_mode(k);
  check_mode(kp);
  FreeElem re, rf;
  f_.reduce_word_into(e, Scalar(1), re);
  if (re.is_zero()) return;
  f_.reduce_word_into(f, Scalar(1), rf);
  for (const auto& [we, ce] : re)
    for (const auto& [wf, cf] : rf) out.add(UMono{we, k, kp, wf}, c * ce * cf);
}

UElem UAlgebra::normalize(const UElem& x) {
  UElem out;
  for (const auto& [m, c] : x) add_reduced(m.e, m.k, m.kp, m.f, c, out);
  return out;
}

// F_j e = e F_j + (v_j - v_j^{-1}) sum_{e_p = j} (v^{(a_j, wt suffix)} e_p^ K_j - v^{-(a_j, wt suffix)} e_p^ K_j')
const UElem& UAlgebra::straighten(const Word& f, const Word& e) {
  const WordPair key{f, e};
  auto it = straighten_.find(key);
  if (it != straighten_.end()) return it->second;
  UElem out;
  if (f.empty() || e.empty()) {
    add_reduced(e, {}, {}, f, Scalar(1), out);
    return straighten_.emplace(key, std::move(out)).first->second;
  }
  const CartanData& cd = cartan();
  const int j = f[f.size() - 1];
  const Word f0 = f.sub(0, f.size() - 1);
  const Weight aj = cd.alpha(j);
  // copy: the recursive calls may rehash the memo table
  const UElem head = straighten(f0, e);
  for (const auto& [m, c] : head) add_reduced(m.e, m.k, m.kp, m.f + Word::letter(j), c, out);
  const Scalar vm = f_.vi_minus(j);
  for (int p = 0; p < e.size(); ++p) {
    if (e[p] != j) continue;
    const int s = cd.form(aj, e.sub(p + 1, e.size()).weight());
    const UElem tail = straighten(f0, e.erased(p));
    for (const auto& [m, c] : tail) {
      const int g = cd.form(aj, m.f.weight());
      // F'' K_j = v^{(a_j, wt F'')} K_j F'', F'' K_j' = v^{-(a_j, wt F'')} K_j' F''
      out.add(UMono{m.e, m.k + aj, m.kp, m.f}, c * vm * vp(s + g));
      out.add(UMono{m.e, m.k, m.kp + aj, m.f}, -(c * vm * vp(-s - g)));
    }
  }
  return straighten_.emplace(key, std::move(out)).first->second;
}

void UAlgebra::mul_mono_into(const UMono& a, const UMono& b, const Scalar& c, UElem& out) {
  const CartanData& cd = cartan();
  const UElem mid = straighten(a.f, b.e);
  for (const auto& [m, cm] : mid) {
    const Weight we = m.e.weight(), wf = m.f.weight();
    const int ex = cd.form(a.k, we) - cd.form(a.kp, we) + cd.form(b.k, wf) - cd.form(b.kp, wf);
    add_reduced(a.e + m.e, a.k + m.k + b.k, a.kp + m.kp + b.kp, m.f + b.f, c * cm * vp(ex), out);
  }
}

UElem UAlgebra::mul(const UElem& x, const UElem& y) {
  UElem out;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) mul_mono_into(a, b, ca * cb, out);
  return out;
}

UElem UAlgebra::reversed_product(const UMono& m, bool swap_torus) {
  const UElem fpart = F_word(reversed(m.f));
  const UElem torus(UMono{{}, swap_torus ? m.kp : m.k, swap_torus ? m.k : m.kp, {}});
  return mul(mul(fpart, torus), E_word(reversed(m.e)));
}

UElem UAlgebra::bar(const UElem& x) {
  UElem out;
  for (const auto& [m, c] : x) out.add(reversed_product(m, false), c.bar());
  return out;
}

UElem UAlgebra::sigma(const UElem& x) {
  UElem out;
  for (const auto& [m, c] : x) out.add(reversed_product(m, true), c);
  return out;
}

UElem UAlgebra::psi_rescale(const UElem& x, const std::vector<Scalar>& s) const {
  UElem out;
  for (const auto& [m, c] : x) {
    Scalar f = c;
    const Weight we = m.e.weight();
    for (int i = 0; i < rank(); ++i) f = f * spow(s[static_cast<std::size_t>(i)], m.k[i] + m.kp[i] + we[i]);
    out.add(m, f);
  }
  return out;
}

std::vector<Scalar> UAlgebra::distinguished_roots() const {
  std::vector<Scalar> s;
  for (int i = 0; i < rank(); ++i) s.push_back(Scalar::u_pow(-cartan().form(i, cartan().tau(i))));
  return s;
}

std::vector<UAlgebra::Relation> UAlgebra::defining_relations() const {
  std::vector<Relation> rel;
  const CartanData& cd = cartan();
  const int n = rank();
  auto name = [](const char* tag, int i, int j) {
    return std::string(tag) + "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
  };
  // x y - q y x
  auto qcomm = [&](const char* tag, int i, int j, const UElem& x, const UElem& y, const Scalar& q) {
    rel.push_back({name(tag, i, j), {{Scalar(1), {x, y}}, {-q, {y, x}}}});
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Weight ai = cd.alpha(i), aj = cd.alpha(j);
      const int q = cd.form(i, j);
      Relation ef{name("EF", i, j), {{Scalar(1), {E(i), F(j)}}, {Scalar(-1), {F(j), E(i)}}}};
      if (i == j) {
        const Scalar c = vp(-cd.d(i)) - vp(cd.d(i));
        ef.terms.push_back({-c, {K(ai)}});
        ef.terms.push_back({c, {Kp(ai)}});
      }
      rel.push_back(ef);
      qcomm("KE", i, j, K(ai), E(j), vp(q));
      qcomm("KF", i, j, K(ai), F(j), vp(-q));
      qcomm("K'E", i, j, Kp(ai), E(j), vp(-q));
      qcomm("K'F", i, j, Kp(ai), F(j), vp(q));
      qcomm("KK", i, j, K(ai), K(aj), Scalar(1));
      qcomm("KK'", i, j, K(ai), Kp(aj), Scalar(1));
      qcomm("K'K'", i, j, Kp(ai), Kp(aj), Scalar(1));
      if (i == j) continue;
      const int m = 1 - cd.c(i, j);
      Relation se{name("SerreE", i, j), {}}, sf{name("SerreF", i, j), {}};
      for (int r = 0; r <= m; ++r) {
        const Scalar c = qbinom(m, r, cd.d(i)) * Scalar(r % 2 ? -1 : 1);
        std::vector<UElem> pe(static_cast<std::size_t>(r), E(i)), pf(static_cast<std::size_t>(r), F(i));
        pe.push_back(E(j));
        pf.push_back(F(j));
        for (int s = r; s < m; ++s) {
          pe.push_back(E(i));
          pf.push_back(F(i));
        }
        se.terms.push_back({c, pe});
        sf.terms.push_back({c, pf});
      }
      rel.push_back(se);
      rel.push_back(sf);
    }
  return rel;
}

UElem UAlgebra::evaluate(const Relation& r) {
  UElem out;
  for (const auto& [c, factors] : r.terms) {
    UElem p = one();
    for (const UElem& g : factors) p = mul(p, g);
    out.add(p, c);
  }
  return out;
}

// ------------------------------------------------------------ Phi_sharp

const TensorElem& DoubleRealization::forward_mono(const UMono& m) {
  auto it = memo_.find(m);
  if (it != memo_.end()) return it->second;
  // (e h^mu (x) 1) * (1 (x) h^nu f), and h^nu f = v^{(nu, wt f)} f h^nu
  const TensorMono a{{BorelMono{m.e, m.k}, BorelMono{}}};
  const TensorMono b{{BorelMono{}, BorelMono{m.f, m.kp}}};
  TensorElem img = D_.star_mono(a, b).scaled(Scalar::v_pow(U_.cartan().form(m.kp, m.f.weight())));
  return memo_.emplace(m, std::move(img)).first->second;
}

TensorElem DoubleRealization::forward(const UElem& x) {
  TensorElem out;
  for (const auto& [m, c] : x) out.add(forward_mono(m), c);
  return out;
}

UElem DoubleRealization::inverse(const TensorElem& y) {
  UElem out;
  TensorElem rest = y;
  while (!rest.is_zero()) {
    const TensorMono* top = nullptr;
    int best = -1;
    for (const auto& [k, c] : rest) {
      const int h = k.f[0].w.size() + k.f[1].w.size();
      if (h > best || (h == best && k < *top)) {
        best = h;
        top = &k;
      }
    }
    const TensorMono key = *top;
    const Scalar c = rest.coeff(key);
    const UMono m{key.f[0].w, key.f[0].h, key.f[1].h, key.f[1].w};
    const TensorElem& img = forward_mono(m);
    const Scalar lc = img.coeff(key);
    if (lc.is_zero()) throw std::logic_error("Phi_sharp: leading term missing");
    const Scalar t = c * lc.inv();
    out.add(m, t);
    rest.add(img, -t);
  }
  return out;
}

// ------------------------------------------------------------ U~^i

std::string format_iword(const IWordElem& x) { return format_words(x, "B", "k", ""); }

IWordElem IQuantumGroup::bbK(int i) const {
  return k(i).scaled(Scalar::v_half(cartan().form(i, cartan().tau(i))));
}

GenWordElem divided_word(const CartanData& cd, int i, int m) {
  if (m < 0) return {};
  GenWord w;
  for (int r = 0; r < m; ++r) w = w + GenWord::gen(i);
  return GenWordElem(w, qfact(m, cd.d(i)).inv());
}

GenWordElem idivided_word(const CartanData& cd, int i, int m, int parity) {
  if (m < 0) return {};
  const int di = cd.d(i);
  const Scalar vi = vp(di), vm = vp(di) - vp(-di);
  const GenWordElem g(GenWord::gen(i)), h(GenWord::tor(i));
  const GenWordElem g2 = word_product(g, g);
  GenWordElem acc(GenWord{});
  if (m % 2 == 1) acc = g;
  for (int s = 1; s <= m / 2; ++s) {
    int q;
    if (parity == 1) q = 2 * s - 1;
    else q = m % 2 == 1 ? 2 * s : 2 * s - 2;
    const Scalar qi = qint(q, di);
    acc = word_product(acc, g2 + h.scaled(vi * vm * vm * qi * qi));
  }
  return acc.scaled(qfact(m, di).inv());
}

IWordElem IQuantumGroup::divided(int i, int m) const { return divided_word(cartan(), i, m); }

IWordElem IQuantumGroup::idivided(int i, int m, int parity) const { return idivided_word(cartan(), i, m, parity); }

const UElem& IQuantumGroup::embed_word(const GenWord& w) {
  auto it = embed_cache_.find(w);
  if (it != embed_cache_.end()) return it->second;
  UElem val;
  if (w.empty()) {
    val = UAlgebra::one();
  } else {
    GenWord prefix;
    for (int p = 0; p + 1 < w.size(); ++p) prefix.push_back(w[p]);
    const std::int8_t c = w[w.size() - 1];
    const int i = GenWord::index_of(c), ti = cartan().tau(i);
    const Weight ai = cartan().alpha(i), ati = cartan().alpha(ti);
    UElem g;
    switch (GenWord::kind_of(c)) {
      case GenWord::Gen: g = UAlgebra::F(i) + UElem(UMono{Word::letter(ti), {}, ai, {}}); break;
      case GenWord::Tor: g = UElem(UMono{{}, ai, ati, {}}); break;
      case GenWord::TorInv: g = UElem(UMono{{}, -ai, -ati, {}}); break;
    }
    U_.check_mode(g.begin()->first.k);
    U_.check_mode(g.begin()->first.kp);
    const UElem head = embed_word(prefix);
    val = U_.mul(head, g);
  }
  return embed_cache_.emplace(w, std::move(val)).first->second;
}

UElem IQuantumGroup::embed(const IWordElem& x) {
  UElem out;
  for (const auto& [w, c] : x) out.add(embed_word(w), c);
  return out;
}

IWordElem IQuantumGroup::phi_i(const GenWordElem& star_words) const {
  const CartanData& cd = cartan();
  return star_words.map_keys([&](const GenWord& w) {
    GenWord r;
    for (int p = 0; p < w.size(); ++p) {
      const std::int8_t c = w[p];
      const auto kind = GenWord::kind_of(c);
      const int i = GenWord::index_of(c);
      r.push_back(GenWord::code(kind, kind == GenWord::Gen ? i : cd.tau(i)));
    }
    return r;
  });
}

IWordElem IQuantumGroup::sigma_i(const IWordElem& x) const {
  const CartanData& cd = cartan();
  return x.map_keys([&](const GenWord& w) {
    GenWord r;
    for (int p = w.size() - 1; p >= 0; --p) {
      const std::int8_t c = w[p];
      const auto kind = GenWord::kind_of(c);
      const int i = GenWord::index_of(c);
      r.push_back(GenWord::code(kind, kind == GenWord::Gen ? i : cd.tau(i)));
    }
    return r;
  });
}

namespace {

// v_i^{c_{i,tau i}} raised to the signed torus count of w
int torus_shift(const CartanData& cd, const GenWord& w) {
  int e = 0;
  for (int p = 0; p < w.size(); ++p) {
    const std::int8_t c = w[p];
    const int i = GenWord::index_of(c);
    const int x = cd.form(i, cd.tau(i));
    if (GenWord::kind_of(c) == GenWord::Tor) e += x;
    if (GenWord::kind_of(c) == GenWord::TorInv) e -= x;
  }
  return e;
}

}  // namespace

IWordElem IQuantumGroup::bar_i(const IWordElem& x) const {
  IWordElem out;
  for (const auto& [w, c] : x) out.add(reversed(w), c.bar() * vp(torus_shift(cartan(), w)));
  return out;
}

IWordElem IQuantumGroup::psi_i(const IWordElem& x) const {
  const CartanData& cd = cartan();
  IWordElem out;
  for (const auto& [w, c] : x) {
    GenWord r;
    for (int p = 0; p < w.size(); ++p) {
      const std::int8_t l = w[p];
      const auto kind = GenWord::kind_of(l);
      const int i = GenWord::index_of(l);
      r.push_back(GenWord::code(kind, kind == GenWord::Gen ? i : cd.tau(i)));
    }
    out.add(r, c.bar() * vp(torus_shift(cd, w)));
  }
  return out;
}

IWordElem IQuantumGroup::relation1_kk(int i, int l) const {
  return word_product(k(i), k(l)) - word_product(k(l), k(i));
}

IWordElem IQuantumGroup::relation1_kb(int i, int l) const {
  const CartanData& cd = cartan();
  const int e = cd.d(i) * (cd.c(cd.tau(i), l) - cd.c(i, l));
  return word_product(k(i), B(l)) - word_product(B(l), k(i)).scaled(vp(e));
}

IWordElem IQuantumGroup::relation2(int i, int j) const {
  const CartanData& cd = cartan();
  if (i == j || cd.c(i, j) != 0 || cd.tau(i) == j) return {};
  return word_product(B(i), B(j)) - word_product(B(j), B(i));
}

IWordElem IQuantumGroup::relation3(int i, int j) const {
  const CartanData& cd = cartan();
  if (i == j || cd.tau(i) == i || cd.tau(i) == j) return {};
  const int m = 1 - cd.c(i, j);
  IWordElem out;
  for (int r = 0; r <= m; ++r)
    out.add(word_product(word_product(divided(i, r), B(j)), divided(i, m - r)), Scalar(r % 2 ? -1 : 1));
  return out;
}

IWordElem IQuantumGroup::relation5(int i, bool use_vi) const {
  const CartanData& cd = cartan();
  const int ti = cd.tau(i);
  if (ti == i) return {};
  const int c = cd.c(i, ti), di = cd.d(i);
  const int m = 1 - c;
  IWordElem lhs;
  for (int r = 0; r <= m; ++r)
    lhs.add(word_product(word_product(divided(i, r), B(ti)), divided(i, m - r)), Scalar((r + c) % 2 ? -1 : 1));
  const Scalar front = use_vi ? vp(di * c) : vp(c);
  const Scalar p1 = pochhammer(vp(-2 * di), vp(-2 * di), -c);
  const Scalar p2 = pochhammer(vp(2 * di), vp(2 * di), -c);
  const IWordElem rhs = (word_product(divided(i, -c), k(i)).scaled(front * p1) - word_product(divided(i, -c), k(ti)).scaled(p2))
                            .scaled(vp(-di) - vp(di));
  return lhs - rhs;
}

IWordElem IQuantumGroup::relation6(int i, int j, int parity) const {
  const CartanData& cd = cartan();
  if (i == j || cd.tau(i) != i) return {};
  const int c = cd.c(i, j);
  const int m = 1 - c;
  const int p2 = ((c + parity) % 2 + 2) % 2;
  IWordElem out;
  for (int r = 0; r <= m; ++r)
    out.add(word_product(word_product(idivided(i, r, parity), B(j)), idivided(i, m - r, p2)), Scalar(r % 2 ? -1 : 1));
  return out;
}

IWordElem doubled_image(const UElem& x, int n) {
  IWordElem out;
  for (const auto& [m, c] : x) {
    GenWord w;
    for (int p = 0; p < m.e.size(); ++p) w = w + GenWord::gen(m.e[p]);
    for (int i = 0; i < n; ++i) w = w + GenWord::tor(i + n, m.k[i]) + GenWord::tor(i, m.kp[i]);
    for (int p = 0; p < m.f.size(); ++p) w = w + GenWord::gen(m.f[p] + n);
    out.add(w, c);
  }
  return out;
}

}  // namespace ihopf
