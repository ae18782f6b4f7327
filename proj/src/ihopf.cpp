#include "ihopf/ihopf.hpp"

#include <algorithm>

namespace ihopf {

namespace {

Scalar vp(int k) { return Scalar::v_pow(k); }

}  // namespace

const std::vector<CopTerm<BorelMono>>& BorelStarContext::coproduct_terms(const BorelMono& m) {
  auto it = cop_.find(m);
  if (it != cop_.end()) return it->second;
  std::vector<CopTerm<BorelMono>> v;
  B_.for_each_coproduct(m, [&](const BorelMono& a, const BorelMono& b, const Scalar& c) { v.push_back({a, b, c}); });
  return cop_.emplace(m, std::move(v)).first->second;
}

const std::vector<CopTerm<TensorMono>>& DiagonalContext::coproduct_terms(const TensorMono& m) {
  auto it = cop_.find(m);
  if (it != cop_.end()) return it->second;
  std::vector<CopTerm<TensorMono>> v;
  std::vector<CopTerm<BorelMono>> l, r;
  B_.for_each_coproduct(m.f[0], [&](const BorelMono& a, const BorelMono& b, const Scalar& c) { l.push_back({a, b, c}); });
  B_.for_each_coproduct(m.f[1], [&](const BorelMono& a, const BorelMono& b, const Scalar& c) { r.push_back({a, b, c}); });
  for (const auto& x : l)
    for (const auto& y : r) v.push_back({TensorMono{{x.a, y.a}}, TensorMono{{x.b, y.b}}, x.c * y.c});
  return cop_.emplace(m, std::move(v)).first->second;
}

void DiagonalContext::mul_into(const TensorMono& a, const TensorMono& b, const Scalar& c, TensorElem& out) {
  BorelElem l, r;
  B_.mul_mono_into(a.f[0], b.f[0], c, l);
  B_.mul_mono_into(a.f[1], b.f[1], Scalar(1), r);
  for (const auto& [x, cx] : l)
    for (const auto& [y, cy] : r) out.add(TensorMono{{x, y}}, cx * cy);
}

TensorElem tensor(const BorelElem& a, const BorelElem& b) {
  TensorElem out;
  for (const auto& [x, cx] : a)
    for (const auto& [y, cy] : b) out.add(TensorMono{{x, y}}, cx * cy);
  return out;
}

std::string format_tensor_elem(const TensorElem& x, int rank) {
  if (x.is_zero()) return "0";
  std::string s;
  for (const auto& [k, c] : x.sorted()) {
    if (!s.empty()) s += " + ";
    s += coeff_prefix(c) + "(" + k.f[0].to_string(rank) + " || " + k.f[1].to_string(rank) + ")";
  }
  return s;
}

// ------------------------------------------------------------ GenWord

void GenWord::push_back(std::int8_t c) {
  if (n > 0) {
    const std::int8_t last = a[n - 1];
    if (index_of(last) == index_of(c) && ((kind_of(last) == Tor && kind_of(c) == TorInv) || (kind_of(last) == TorInv && kind_of(c) == Tor))) {
      --n;
      return;
    }
  }
  if (n >= kCap) throw TruncationExceeded("generator word longer than " + std::to_string(kCap));
  a[n++] = c;
}

GenWord GenWord::operator+(const GenWord& o) const {
  GenWord w = *this;
  for (int p = 0; p < o.n; ++p) w.push_back(o[p]);
  return w;
}

bool GenWord::operator==(const GenWord& o) const {
  return n == o.n && std::equal(a.begin(), a.begin() + n, o.a.begin());
}

bool GenWord::operator<(const GenWord& o) const {
  if (n != o.n) return n < o.n;
  return std::lexicographical_compare(a.begin(), a.begin() + n, o.a.begin(), o.a.begin() + o.n);
}

std::size_t GenWord::hash() const {
  std::uint64_t h = 0x2545f4914f6cdd1dull ^ n;
  for (int p = 0; p < n; ++p) h = (h ^ static_cast<std::uint8_t>(a[static_cast<std::size_t>(p)])) * 0x100000001b3ull;
  return static_cast<std::size_t>(h);
}

int GenWord::degree() const {
  int d = 0;
  for (int p = 0; p < n; ++p) d += kind_of(a[static_cast<std::size_t>(p)]) == Gen;
  return d;
}

Weight GenWord::gen_weight() const {
  Weight w;
  for (int p = 0; p < n; ++p)
    if (kind_of(a[static_cast<std::size_t>(p)]) == Gen) ++w[index_of(a[static_cast<std::size_t>(p)])];
  return w;
}

std::string GenWord::to_string(const char* gen_sym, const char* tor_sym, const char* sep) const {
  if (n == 0) return "1";
  std::string s;
  for (int p = 0; p < n; ++p) {
    if (p) s += sep;
    const std::int8_t c = a[static_cast<std::size_t>(p)];
    const std::string idx = "[" + std::to_string(index_of(c) + 1) + "]";
    switch (kind_of(c)) {
      case Gen: s += gen_sym + idx; break;
      case Tor: s += tor_sym + idx; break;
      case TorInv: s += tor_sym + idx + "^-1"; break;
    }
  }
  return s;
}

GenWordElem word_product(const GenWordElem& x, const GenWordElem& y) {
  GenWordElem out;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) out.add(a + b, ca * cb);
  return out;
}

std::string format_words(const GenWordElem& x, const char* gen_sym, const char* tor_sym, const char* sep) {
  if (x.is_zero()) return "0";
  std::string s;
  for (const auto& [w, c] : x.sorted()) {
    if (!s.empty()) s += " + ";
    s += coeff_prefix(c) + w.to_string(gen_sym, tor_sym, sep);
  }
  return s;
}

// ------------------------------------------------------------ B~^i_tau

BorelElem IQuantumBorel::theta_star(int i, const BorelElem& x) {
  const CartanData& cd = cartan();
  FreeAlgebra& f = B_.free();
  const int ti = cd.tau(i);
  const Scalar vm = f.vi_minus(i);
  BorelElem out;
  for (const auto& [m, c] : x) {
    FreeElem top;
    f.reduce_word_into(Word::letter(i) + m.w, c * vp(cd.form(cd.tau(m.h), cd.alpha(i))), top);
    for (const auto& [w, cw] : top) out.add(BorelMono{w, m.h}, cw);
    const Weight h2 = m.h + cd.alpha(ti);
    for (const auto& [u, e] : f.derivative_word(Side::L, ti, m.w)) {
      FreeElem r;
      f.reduce_word_into(u, c * e * vm, r);
      for (const auto& [w, cw] : r) out.add(BorelMono{w, h2}, cw);
    }
  }
  return out;
}

BorelElem IQuantumBorel::star_theta(const BorelElem& x, int i) {
  const CartanData& cd = cartan();
  FreeAlgebra& f = B_.free();
  const int ti = cd.tau(i);
  const Scalar vm = f.vi_minus(i);
  BorelElem out;
  for (const auto& [m, c] : x) {
    FreeElem top;
    f.reduce_word_into(m.w + Word::letter(i), c * vp(cd.form_alpha(i, m.h)), top);
    for (const auto& [w, cw] : top) out.add(BorelMono{w, m.h}, cw);
    const Weight h2 = m.h + cd.alpha(i);
    for (const auto& [u, e] : f.derivative_word(Side::R, ti, m.w)) {
      FreeElem r;
      f.reduce_word_into(u, c * e * vm, r);
      for (const auto& [w, cw] : r) out.add(BorelMono{w, h2}, cw);
    }
  }
  return out;
}

BorelElem IQuantumBorel::torus_star(const Weight& lam, const BorelElem& x) {
  const CartanData& cd = cartan();
  BorelElem out;
  for (const auto& [m, c] : x) out.add(BorelMono{m.w, m.h + lam}, c * vp(cd.form(cd.tau(m.h), lam) + cd.form(lam, m.w.weight())));
  return out;
}

BorelElem IQuantumBorel::star_torus(const BorelElem& x, const Weight& lam) {
  const CartanData& cd = cartan();
  BorelElem out;
  for (const auto& [m, c] : x) out.add(BorelMono{m.w, m.h + lam}, c * vp(cd.form(cd.tau(lam), m.w.weight() + m.h)));
  return out;
}

BorelElem IQuantumBorel::star_torus_inv(const BorelElem& x, int i) {
  const CartanData& cd = cartan();
  return star_torus(x, -cd.alpha(i)).scaled(vp(cd.form(cd.tau(i), i)));
}

BorelElem IQuantumBorel::star(const BorelElem& a, const BorelElem& b) {
  if (a.size() == 1) {
    const auto& [m, c] = *a.begin();
    if (m.w.size() == 1 && m.h.is_zero()) return theta_star(m.w[0], b).scaled(c);
    if (m.w.empty()) return torus_star(m.h, b).scaled(c);
  }
  if (b.size() == 1) {
    const auto& [m, c] = *b.begin();
    if (m.w.size() == 1 && m.h.is_zero()) return star_theta(a, m.w[0]).scaled(c);
    if (m.w.empty()) return star_torus(a, m.h).scaled(c);
  }
  return engine_.star(a, b);
}

BorelElem IQuantumBorel::eval_word(const GenWord& w) {
  if (w.empty()) return BorelAlgebra::one();
  auto it = eval_cache_.find(w);
  if (it != eval_cache_.end()) return it->second;
  GenWord prefix = w;
  --prefix.n;
  BorelElem acc = eval_word(prefix);
  const std::int8_t c = w[w.size() - 1];
  const int i = GenWord::index_of(c);
  switch (GenWord::kind_of(c)) {
    case GenWord::Gen: acc = star_theta(acc, i); break;
    case GenWord::Tor: acc = star_torus(acc, cartan().alpha(i)); break;
    case GenWord::TorInv: acc = star_torus_inv(acc, i); break;
  }
  return eval_cache_.emplace(w, acc).first->second;
}

BorelElem IQuantumBorel::eval(const GenWordElem& x) {
  BorelElem out;
  for (const auto& [w, c] : x) out.add(eval_word(w), c);
  return out;
}

GenWordElem IQuantumBorel::star_decompose(const BorelElem& x) {
  GenWordElem result;
  BorelElem rest = B_.normalize(x);
  while (!rest.is_zero()) {
    int top = 0;
    for (const auto& [m, c] : rest) top = std::max(top, m.w.size());
    std::vector<std::pair<BorelMono, Scalar>> lead;
    for (const auto& [m, c] : rest.sorted())
      if (m.w.size() == top) lead.emplace_back(m, c);
    for (const auto& [m, c] : lead) {
      GenWord gw;
      for (int p = 0; p < m.w.size(); ++p) gw.push_back(GenWord::code(GenWord::Gen, m.w[p]));
      gw = gw + GenWord::torus(m.h, cartan().rank());
      const BorelElem e = eval_word(gw);
      const Scalar k = c / e.coeff(m);
      result.add(gw, k);
      rest.add(e, -k);
    }
    for (const auto& [m, c] : rest)
      if (m.w.size() >= top) throw std::logic_error("star decomposition failed to lower the degree");
  }
  return result;
}

// ------------------------------------------------------------ diagonal type

Tensor4 DiagonalIHopf::delta(const TensorElem& x) {
  // sum phi(a2, b2) (a1 (x) b3) (x) (a3 (x) b1)
  Tensor4 out;
  for (const auto& [m, c] : x) {
    auto da = B_.coproduct_iter<3>(BorelElem(m.f[0]));
    auto db = B_.coproduct_iter<3>(BorelElem(m.f[1]));
    for (const auto& [ka, ca] : da)
      for (const auto& [kb, cb] : db) {
        Scalar p = B_.pairing_mono(ka.f[1], kb.f[1]);
        if (p.is_zero()) continue;
        out.add(Tensor4::Map::key_type{{ka.f[0], kb.f[2], ka.f[2], kb.f[0]}}, c * ca * cb * p);
      }
  }
  return out;
}

Scalar DiagonalIHopf::counit(const TensorElem& x) {
  Scalar acc;
  for (const auto& [m, c] : x) acc += c * B_.pairing(BorelElem(m.f[0]), B_.antipode_inv(BorelElem(m.f[1])));
  return acc;
}

TensorElem DiagonalIHopf::antipode(const TensorElem& x) {
  // sum phi(a1, S^{-1} b3) phi(a2, b2) S(a3) (x) S^{-1}(b1)
  TensorElem out;
  for (const auto& [m, c] : x) {
    auto da = B_.coproduct_iter<3>(BorelElem(m.f[0]));
    auto db = B_.coproduct_iter<3>(BorelElem(m.f[1]));
    for (const auto& [ka, ca] : da)
      for (const auto& [kb, cb] : db) {
        Scalar p2 = B_.pairing_mono(ka.f[1], kb.f[1]);
        if (p2.is_zero()) continue;
        Scalar p1 = B_.pairing(BorelElem(ka.f[0]), B_.antipode_inv(BorelElem(kb.f[2])));
        if (p1.is_zero()) continue;
        out += tensor(B_.antipode(BorelElem(ka.f[2])), B_.antipode_inv(BorelElem(kb.f[0]))).scaled(c * ca * cb * p1 * p2);
      }
  }
  return out;
}

Tensor4 DiagonalIHopf::star4(const Tensor4& a, const Tensor4& b) {
  Tensor4 out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      const TensorElem& l = star_mono(TensorMono{{ka.f[0], ka.f[1]}}, TensorMono{{kb.f[0], kb.f[1]}});
      if (l.is_zero()) continue;
      const TensorElem r = star_mono(TensorMono{{ka.f[2], ka.f[3]}}, TensorMono{{kb.f[2], kb.f[3]}});
      for (const auto& [x, cx] : l)
        for (const auto& [y, cy] : r) out.add(Tensor4::Map::key_type{{x.f[0], x.f[1], y.f[0], y.f[1]}}, ca * cb * cx * cy);
    }
  return out;
}

TensorElem DiagonalIHopf::xi(const BorelElem& a) {
  TensorElem out;
  for (const auto& [k, c] : B_.coproduct_iter<3>(a)) {
    Scalar x = B_.chi_mono(k.f[1]);
    if (x.is_zero()) continue;
    out += tensor(B_.tau(BorelElem(k.f[2])), BorelElem(k.f[0])).scaled(c * x);
  }
  return out;
}

Tensor3 DiagonalIHopf::psi(const BorelElem& a) {
  Tensor3 out;
  for (const auto& [k, c] : B_.coproduct_iter<5>(a)) {
    Scalar p = B_.pairing_mono(k.f[3], k.f[1], true);
    if (p.is_zero()) continue;
    for (const auto& [t, ct] : B_.tau(BorelElem(k.f[4]))) out.add(Tensor3::Map::key_type{{k.f[2], t, k.f[0]}}, c * p * ct);
  }
  return out;
}

}  // namespace ihopf
