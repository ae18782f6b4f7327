#include "ihopf/braid.hpp"

#include <algorithm>
#include <functional>

namespace ihopf {

namespace {

Scalar vp(int k) { return Scalar::v_pow(k); }

Scalar spow(const Scalar& s, int n) { return n >= 0 ? s.pow(n) : s.inv().pow(-n); }

int sign(int k) { return k % 2 ? -1 : 1; }

int mod2(int k) { return ((k % 2) + 2) % 2; }

// v_i^{k/2}
Scalar vi_half(const CartanData& cd, int i, int k) { return Scalar::v_half(cd.d(i) * k); }
Scalar vi_minus(const CartanData& cd, int i) { return vp(cd.d(i)) - vp(-cd.d(i)); }

}  // namespace

// ------------------------------------------------------------ Lusztig T

LusztigBraid::LusztigBraid(UAlgebra& U) : U_(U) {
  roots_ = U.distinguished_roots();
  for (const Scalar& s : roots_) roots_inv_.push_back(s.inv());
}

UElem LusztigBraid::image_E(int i, LusztigVariant var, int e, int j) {
  const CartanData& cd = U_.cartan();
  const Weight ai = cd.alpha(i);
  const int di = cd.d(i);
  const bool prime = var == LusztigVariant::Prime;
  if (j == i) {
    if (prime) {
      // T'_{i,1}(E_i) = v_i K_i'^{-1} F_i, T'_{i,-1}(E_i) = v_i^{-1} K_i^{-1} F_i
      if (e == 1) return UElem(UMono{{}, {}, -ai, Word::letter(i)}, vp(di));
      return UElem(UMono{{}, -ai, {}, Word::letter(i)}, vp(-di));
    }
    // T''_{i,-1}(E_i) = v_i F_i K_i^{-1}, T''_{i,1}(E_i) = v_i^{-1} F_i K_i'^{-1}
    const UElem k = e == -1 ? UAlgebra::K(-ai) : UAlgebra::Kp(-ai);
    return U_.mul(UAlgebra::F(i), k).scaled(vp(e == -1 ? di : -di));
  }
  const int c = cd.c(i, j);
  // prime: v_i^{-e(r + c/2)} E_i^{(s)} E_j E_i^{(r)}; double prime with subscript e: v_i^{e(r + c/2)} E_i^{(r)} E_j E_i^{(s)}
  UElem out;
  const Scalar vm = spow(vi_minus(cd, i), c);
  for (int r = 0; r <= -c; ++r) {
    const int s = -c - r;
    const int ex = (prime ? -e : e) * (2 * r + c);
    const Scalar coef = vm * vi_half(cd, i, ex) * Scalar(sign(r)) / (qfact(r, di) * qfact(s, di));
    const Word w = prime ? Word::power(i, s) + Word::letter(j) + Word::power(i, r)
                         : Word::power(i, r) + Word::letter(j) + Word::power(i, s);
    out.add(U_.E_word(w), coef);
  }
  return out;
}

UElem LusztigBraid::image_F(int i, LusztigVariant var, int e, int j) {
  const CartanData& cd = U_.cartan();
  const Weight ai = cd.alpha(i);
  const int di = cd.d(i);
  const bool prime = var == LusztigVariant::Prime;
  if (j == i) {
    if (prime) {
      // T'_{i,1}(F_i) = v_i^{-1} E_i K_i^{-1}, T'_{i,-1}(F_i) = v_i E_i K_i'^{-1}
      if (e == 1) return UElem(UMono{Word::letter(i), -ai, {}, {}}, vp(-di));
      return UElem(UMono{Word::letter(i), {}, -ai, {}}, vp(di));
    }
    // T''_{i,-1}(F_i) = v_i^{-1} K_i'^{-1} E_i, T''_{i,1}(F_i) = v_i K_i^{-1} E_i
    const UElem k = e == -1 ? UAlgebra::Kp(-ai) : UAlgebra::K(-ai);
    return U_.mul(k, UAlgebra::E(i)).scaled(vp(e == -1 ? -di : di));
  }
  const int c = cd.c(i, j);
  UElem out;
  const Scalar vm = spow(vi_minus(cd, i), c);
  for (int r = 0; r <= -c; ++r) {
    const int s = -c - r;
    const int ex = (prime ? -e : e) * (2 * r + c);
    const Scalar coef = vm * vi_half(cd, i, ex) * Scalar(sign(r)) / (qfact(r, di) * qfact(s, di));
    const Word w = prime ? Word::power(i, s) + Word::letter(j) + Word::power(i, r)
                         : Word::power(i, r) + Word::letter(j) + Word::power(i, s);
    out.add(U_.F_word(w), coef);
  }
  return out;
}

const UElem& LusztigBraid::word_image(int i, LusztigVariant var, int e, int side, const Word& w) {
  const Key key{i, static_cast<int>(var), e, side, w};
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  UElem val;
  if (w.empty()) {
    val = UAlgebra::one();
  } else {
    const UElem head = word_image(i, var, e, side, w.sub(0, w.size() - 1));
    const int j = w[w.size() - 1];
    val = U_.mul(head, side == 0 ? image_E(i, var, e, j) : image_F(i, var, e, j));
  }
  return memo_.emplace(key, std::move(val)).first->second;
}

UElem LusztigBraid::apply_plain(int i, LusztigVariant var, int e, const UElem& x) {
  if (U_.hat_mode()) throw NegativeTorusExponent();
  const CartanData& cd = U_.cartan();
  UElem out;
  for (const auto& [m, c] : x) {
    const UElem torus(UMono{{}, cd.s(i, m.k), cd.s(i, m.kp), {}});
    // copies: the memo table may rehash between the two lookups
    const UElem fe = word_image(i, var, e, 0, m.e);
    const UElem ff = word_image(i, var, e, 1, m.f);
    out.add(U_.mul(U_.mul(fe, torus), ff), c);
  }
  return out;
}

UElem LusztigBraid::apply(int i, LusztigVariant var, int e, const UElem& x, bool script) {
  if (!script) return apply_plain(i, var, e, x);
  return U_.psi_rescale(apply_plain(i, var, e, U_.psi_rescale(x, roots_)), roots_inv_);
}

void check_reduced(const CartanData& cd, const std::vector<int>& word) {
  for (std::size_t t = 0; t < word.size(); ++t) {
    Weight b = cd.alpha(word[t]);
    for (std::size_t k = t; k-- > 0;) b = cd.s(word[k], b);
    if (!b.nonnegative()) throw NonReducedWord("braid word is not reduced at position " + std::to_string(t + 1));
  }
}

UElem LusztigBraid::apply_word(const std::vector<int>& word, const UElem& x, bool inverse, bool script) {
  check_reduced(U_.cartan(), word);
  UElem y = x;
  if (inverse) {
    for (int i : word) y = T_inv(i, y, script);
  } else {
    for (std::size_t k = word.size(); k-- > 0;) y = T(word[k], y, script);
  }
  return y;
}

UElem LusztigBraid::T_r(int i, const UElem& x, bool script) {
  return apply_word(U_.cartan().relative_word(i), x, false, script);
}

UElem LusztigBraid::T_r_inv(int i, const UElem& x, bool script) {
  return apply_word(U_.cartan().relative_word(i), x, true, script);
}

// ------------------------------------------------------------ relative braid

void RelativeBraid::check_type(int i) const {
  const int t = cartan().local_type(i);
  if (t != 2 && t != 0 && t != -1)
    throw WrongLocalType("local type c_{i,tau i} = " + std::to_string(t) + " has no relative braid formula");
}

IWordElem RelativeBraid::bbK_weight(const Weight& alpha) const {
  const CartanData& cd = cartan();
  int half = 0;
  for (int k = 0; k < cd.rank(); ++k) half += alpha[k] * cd.form(k, cd.tau(k));
  return IWordElem(GenWord::torus(alpha, cd.rank()), Scalar::v_half(half));
}

IWordElem RelativeBraid::image_k(int i, int j, int e) {
  check_type(i);
  const CartanData& cd = cartan();
  // T_i(k~_j) = v^{-(a_j, a_{tau j})/2} K_{r_i(a_j)}
  const Weight target = cd.r(i, cd.alpha(j)) * e;
  return bbK_weight(target).scaled(Scalar::v_half(-e * cd.form(j, cd.tau(j))));
}

IWordElem RelativeBraid::image_B(int i, int j) {
  check_type(i);
  const CartanData& cd = cartan();
  const int ti = cd.tau(i);
  const int di = cd.d(i);
  const Scalar vm = vi_minus(cd, i);
  const IWordElem Bj(GenWord::gen(j));
  auto kpow = [&](int k, int u) { return IWordElem(GenWord::tor(k, u)); };
  auto dv = [&](int k, int m) { return divided_word(cd, k, m); };
  auto prod = [](std::initializer_list<IWordElem> xs) {
    IWordElem r(GenWord{});
    for (const auto& x : xs) r = word_product(r, x);
    return r;
  };

  if (j == i || j == ti) {
    // v^{(a_i - a_{tau i}, a_i)/2} K_{tau_i(k)}^{-1} B_{tau_i(k')} with {k, k'} = {i, tau i}
    const int kk = cd.tau_i(i, j == i ? i : ti);
    const int bb = cd.tau_i(i, j == i ? ti : i);
    const Scalar front = Scalar::v_half(cd.form(i, i) - cd.form(ti, i));
    return word_product(bbK_weight(-cd.alpha(kk)), IWordElem(GenWord::gen(bb))).scaled(front);
  }

  IWordElem out;
  const int t = cd.local_type(i);
  if (t == 2) {
    const int c = cd.c(i, j);
    const int p = parity_, q = mod2(c + parity_);
    for (int r = 0; r <= -c; ++r) {
      const int s = -c - r;
      const Scalar coef = Scalar(sign(r)) * vi_half(cd, i, -2 * r - c) * spow(vm, c);
      out.add(prod({idivided_word(cd, i, s, p), Bj, idivided_word(cd, i, r, q)}), coef);
    }
    for (int u = 1; -c - 2 * u >= 0; ++u)
      for (int r = 0; r <= -c - 2 * u; ++r) {
        // r of the parity of p + c_ij, matching the primed root-vector expansion at m = -c_ij
        if (mod2(r) != q) continue;
        const int s = -c - 2 * u - r;
        const Scalar coef = Scalar(sign(r)) * vi_half(cd, i, 2 * u - 2 * r + (-c - 2 * u)) * spow(vm, c + 2 * u);
        out.add(prod({idivided_word(cd, i, s, p), Bj, idivided_word(cd, i, r, q), kpow(i, u)}), coef);
      }
    return out;
  }
  const int cij = cd.c(i, j), ctj = cd.c(ti, j);
  if (t == 0) {
    const int umax = -std::max(cij, ctj);
    for (int u = 0; u <= umax; ++u)
      for (int r1 = 0; r1 <= -cij - u; ++r1)
        for (int r2 = 0; r2 <= -ctj - u; ++r2) {
          const int s1 = -cij - u - r1, s2 = -ctj - u - r2;
          const int half = (-cij - ctj - 2 * u) + 2 * (-(r1 + r2) + (r1 - r2) * u);
          const Scalar coef = Scalar(sign(r1 + r2)) * vi_half(cd, i, half) * spow(vm, cij + ctj + 2 * u);
          out.add(prod({dv(i, s1), dv(ti, s2), Bj, dv(ti, r2), dv(i, r1), kpow(ti, u)}), coef);
        }
    return out;
  }
  // t == -1
  for (int w = 0; w <= -ctj; ++w)
    for (int u = 0; u <= -cij; ++u)
      for (int r1 = 0; r1 <= -ctj - w; ++r1)
        for (int r2 = 0; r2 <= -cij - ctj - u - w; ++r2)
          for (int r3 = 0; r3 <= -cij - u; ++r3) {
            const int s1 = -ctj - w - r1, s2 = -cij - ctj - u - w - r2, s3 = -cij - u - r3;
            const int ex = -cij - ctj - u - w + 2 * w * r1 - (r1 + r2 + r3) + (2 * u - w) * r2 - u * r3 - u * w +
                           (u * (u - 1) + w * (w - 1)) / 2;
            const Scalar coef = Scalar(sign(r1 + r2 + r3)) * vp(di * ex) * spow(vm, 2 * (cij + ctj + u + w));
            out.add(prod({dv(i, s1), dv(ti, s2), dv(i, s3), Bj, dv(i, r3), dv(ti, r2), kpow(i, u), dv(i, r1), kpow(ti, w)}),
                    coef);
          }
  return out;
}

const IWordElem& RelativeBraid::letter_image(int i, std::int8_t code) {
  const auto key = std::make_pair(i, static_cast<int>(code));
  auto it = letters_.find(key);
  if (it != letters_.end()) return it->second;
  const int k = GenWord::index_of(code);
  IWordElem img;
  switch (GenWord::kind_of(code)) {
    case GenWord::Gen: img = image_B(i, k); break;
    case GenWord::Tor: img = image_k(i, k, 1); break;
    case GenWord::TorInv: img = image_k(i, k, -1); break;
  }
  return letters_.emplace(key, std::move(img)).first->second;
}

IWordElem RelativeBraid::apply(int i, const IWordElem& x) {
  IWordElem out;
  for (const auto& [w, c] : x) {
    IWordElem acc(GenWord{});
    for (int p = 0; p < w.size(); ++p) acc = word_product(acc, letter_image(i, w[p]));
    out.add(acc, c);
  }
  return out;
}

IWordElem RelativeBraid::apply_variant(int i, RelVariant var, const IWordElem& w) {
  switch (var) {
    case RelVariant::Prime1: return apply(i, w);
    case RelVariant::DoublePrimeM1: return apply_inverse(i, w);
    case RelVariant::PrimeM1: return Ui_.psi_i(apply(i, Ui_.psi_i(w)));
    case RelVariant::DoublePrime1: return Ui_.psi_i(apply_inverse(i, Ui_.psi_i(w)));
  }
  return {};
}

// ------------------------------------------------------------ root vectors

std::string RootVectorSpec::to_string() const {
  std::string s = primed ? "f'" : "f";
  s += "[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ";";
  for (std::size_t k = 0; k < params.size(); ++k) s += (k ? "," : "") + std::to_string(params[k]);
  return s + "]";
}

RootType local_root_type(const CartanData& cd, int i) {
  switch (cd.local_type(i)) {
    case 2: return RootType::Split;
    case 0: return RootType::C0;
    case -1: return RootType::Cm1;
    default: throw WrongLocalType("unsupported local type");
  }
}

namespace {

std::size_t param_count(RootType t) { return t == RootType::Split ? 1 : t == RootType::C0 ? 2 : 3; }

void check_spec(const CartanData& cd, const RootVectorSpec& s) {
  if (s.params.size() != param_count(s.type)) throw InadmissibleParameters("wrong number of root vector parameters");
  if (s.i < 0 || s.j < 0 || s.i >= cd.rank() || s.j >= cd.rank()) throw InadmissibleParameters("index out of range");
  if (s.j == s.i || s.j == cd.tau(s.i)) throw InadmissibleParameters("root vectors need j outside {i, tau i}");
  if (s.type != RootType::Split && cd.tau(s.i) == s.i)
    throw WrongLocalType("two- and three-parameter root vectors need tau i != i");
}

// sum over compositions r + s = m with r, s >= 0
template <class F>
void compositions(int m, F&& f) {
  for (int r = 0; r <= m; ++r) f(r, m - r);
}

}  // namespace

FreeElem root_vector(FreeAlgebra& f, const RootVectorSpec& rv, bool literal_c0_exponent) {
  const CartanData& cd = f.cartan();
  check_spec(cd, rv);
  const int i = rv.i, j = rv.j, ti = cd.tau(i), di = cd.d(i);
  const Scalar vm = vi_minus(cd, i);
  const Word wj = Word::letter(j);
  auto P = [](int k, int m) { return Word::power(k, m); };
  auto fact = [&](int m) { return qfact(m, di); };
  FreeElem raw;
  if (rv.type == RootType::Split) {
    const int m = rv.params[0], c = cd.c(i, j);
    if (m < 0) return {};
    compositions(m, [&](int r, int s) {
      const Scalar coef = Scalar(sign(r)) * vi_half(cd, i, 2 * r * (c + m - 1) + m) * spow(vm, -m) / (fact(r) * fact(s));
      raw.add(rv.primed ? P(i, s) + wj + P(i, r) : P(i, r) + wj + P(i, s), coef);
    });
  } else if (rv.type == RootType::C0) {
    const int m = rv.params[0], n = rv.params[1];
    if (m < 0 || n < 0) return {};
    const int cij = cd.c(i, j), ctj = cd.c(ti, j);
    compositions(m, [&](int r1, int s1) {
      compositions(n, [&](int r2, int s2) {
        const int e2 = literal_c0_exponent ? ctj * n - 1 : ctj + n - 1;
        const int half = 2 * (r1 * (cij + m - 1) + r2 * e2) + (m + n);
        const Scalar coef = Scalar(sign(r1 + r2)) * vi_half(cd, i, half) * spow(vm, -m - n) /
                            (fact(r1) * fact(s1) * fact(r2) * fact(s2));
        raw.add(rv.primed ? P(i, s1) + P(ti, s2) + wj + P(ti, r2) + P(i, r1) : P(i, r1) + P(ti, r2) + wj + P(ti, s2) + P(i, s1),
                coef);
      });
    });
  } else {
    const int a = rv.params[0], b = rv.params[1], c = rv.params[2];
    if (a < 0 || b < 0 || c < 0) return {};
    const int cij = cd.c(i, j), ctj = cd.c(ti, j);
    compositions(a, [&](int r1, int s1) {
      compositions(b, [&](int r2, int s2) {
        compositions(c, [&](int r3, int s3) {
          const int ex = r1 * (cij + a - 1) + r2 * (ctj + b - 1) + r3 * (cij + c - 1) + r1 * (2 * c - b) - r2 * c;
          const Scalar coef = Scalar(sign(r1 + r2 + r3)) * vi_half(cd, i, a + b + c + 2 * ex) * spow(vm, -(a + b + c)) /
                              (fact(r1) * fact(s1) * fact(r2) * fact(s2) * fact(r3) * fact(s3));
          raw.add(rv.primed ? P(i, s1) + P(ti, s2) + P(i, s3) + wj + P(i, r3) + P(ti, r2) + P(i, r1)
                              : P(i, r1) + P(ti, r2) + P(i, r3) + wj + P(i, s3) + P(ti, s2) + P(i, s1),
                  coef);
        });
      });
    });
  }
  return f.reduce(raw);
}

GenWordElem root_vector_expansion(const CartanData& cd, const RootVectorSpec& rv, int parity, bool literal) {
  check_spec(cd, rv);
  if (local_root_type(cd, rv.i) != rv.type) throw WrongLocalType("expansion requested for a different local type");
  const int i = rv.i, j = rv.j, ti = cd.tau(i), di = cd.d(i);
  const Scalar vm = vi_minus(cd, i);
  const GenWordElem tj(GenWord::gen(j));
  auto H = [](int k, int u) { return GenWordElem(GenWord::tor(k, u)); };
  auto D = [&](int k, int m) { return divided_word(cd, k, m); };
  auto prod = [](std::initializer_list<GenWordElem> xs) {
    GenWordElem r(GenWord{});
    for (const auto& x : xs) r = word_product(r, x);
    return r;
  };
  GenWordElem out;
  if (rv.type == RootType::Split) {
    const int m = rv.params[0], c = cd.c(i, j);
    const bool case_a = mod2(m) != mod2(c);
    const int q = mod2(c + parity);
    for (int u = 0; 2 * u <= m; ++u)
      for (int r = 0; r <= m - 2 * u; ++r) {
        const int s = m - 2 * u - r;
        // the Kronecker symbol compares r with p + c_ij for unprimed f when m and c_ij differ in
        // parity and for primed f when they agree; otherwise with p
        const int target = (!literal && case_a != rv.primed) ? q : parity;
        const int delta = mod2(r) == target ? 1 : 0;
        int ex;
        Scalar qb;
        if (case_a) {
          ex = r * (c + m - 1) + u * (c + m + 2 * delta) + u * (u - 1);
          qb = qbinom((-c - m + 1) / 2, u, 2 * di);
        } else {
          ex = r * (c + m - 1) + u * (c + m + 1) + u * (u - 1);
          qb = qbinom((-c - m + 2 * delta) / 2, u, 2 * di);
        }
        if (qb.is_zero()) continue;
        const Scalar coef = Scalar(sign(r)) * vi_half(cd, i, m - 2 * u + 2 * ex) * spow(vm, -m + 2 * u) * qb;
        const GenWordElem body = rv.primed ? prod({idivided_word(cd, i, s, parity), tj, idivided_word(cd, i, r, q)})
                                             : prod({idivided_word(cd, i, r, parity), tj, idivided_word(cd, i, s, q)});
        out.add(word_product(H(i, u), body), coef);
      }
    return out;
  }
  const int cij = cd.c(i, j), ctj = cd.c(ti, j);
  if (rv.type == RootType::C0) {
    const int m = rv.params[0], n = rv.params[1];
    for (int u = 0; u <= std::min(m, n); ++u)
      for (int r1 = 0; r1 <= m - u; ++r1)
        for (int r2 = 0; r2 <= n - u; ++r2) {
          const int s1 = m - u - r1, s2 = n - u - r2;
          const int ex = r1 * (cij + m - 1) + r2 * (ctj + n - 1) + u * (r1 - r2 + cij + m);
          const Scalar coef = Scalar(sign(r1 + r2)) * vi_half(cd, i, m + n - 2 * u + 2 * ex) * spow(vm, -(m + n) + 2 * u) *
                              qbinom(-ctj - n + u, u, di);
          out.add(rv.primed ? prod({D(i, s1), D(ti, s2), tj, D(ti, r2), D(i, r1), H(i, u)})
                              : prod({H(ti, u), D(i, r1), D(ti, r2), tj, D(ti, s2), D(i, s1)}),
                  coef);
        }
    return out;
  }
  const int a = rv.params[0], b = rv.params[1], c = rv.params[2];
  // unprimed: the torus letters are the sigma-images h_i <-> h_{tau i} of the primed ones
  for (int w = 0; w <= std::min(a, b); ++w)
    for (int u = 0; u <= std::min(b - w, c); ++u)
      for (int r1 = 0; r1 <= a - w; ++r1)
        for (int r2 = 0; r2 <= b - u - w; ++r2)
          for (int r3 = 0; r3 <= c - u; ++r3) {
            const int s1 = a - w - r1, s2 = b - u - w - r2, s3 = c - u - r3;
            const int ex = r1 * (cij - b + 2 * c + a - 1 + 2 * w) + r2 * (ctj + b - w - c + 2 * u - 1) +
                           r3 * (cij + c - u - 1) + w * (cij - b + 2 * c + a) + u * (ctj + b - w - c);
            const Scalar coef = Scalar(sign(r1 + r2 + r3)) * vi_half(cd, i, a + b + c - 2 * u - 2 * w + 2 * ex) *
                                spow(vm, -(a + b + c) + 2 * u + 2 * w) * qbinom(-ctj - b + c + w, w, di) *
                                qbinom(-cij - c + u, u, di);
            out.add(rv.primed ? prod({D(i, s1), D(ti, s2), D(i, s3), tj, D(i, r3), D(ti, r2), H(ti, u), D(i, r1), H(i, w)})
                                : prod({H(literal ? i : ti, w), D(i, r1), H(literal ? ti : i, u), D(ti, r2), D(i, r3), tj, D(i, s3), D(ti, s2), D(i, s1)}),
                    coef);
          }
  return out;
}

UElem to_u_plus(const FreeElem& x) {
  UElem out;
  for (const auto& [w, c] : x) out.add(UMono{w, {}, {}, {}}, c);
  return out;
}

BorelElem iota(const FreeElem& x) {
  BorelElem out;
  for (const auto& [w, c] : x) out.add(BorelMono{w, {}}, c);
  return out;
}

FreeElem from_u_plus(const UElem& x) {
  FreeElem out;
  for (const auto& [m, c] : x) {
    if (!m.k.is_zero() || !m.kp.is_zero() || !m.f.empty()) throw std::invalid_argument("element is not in U^+");
    out.add(m.e, c);
  }
  return out;
}

// ------------------------------------------------------------ quasi K-matrix

UElem QuasiK::as_u() const {
  UElem out;
  for (const auto& [mu, x] : comp) out += to_u_plus(x);
  return out;
}

UElem truncate_e_height(const UElem& x, int max_e_height) {
  UElem out;
  for (const auto& [m, c] : x)
    if (m.e.size() <= max_e_height) out.add(m, c);
  return out;
}

namespace {

// weights supported on scope, height 1..N, ordered by height
std::vector<Weight> scoped_weights(const std::vector<int>& scope, int N) {
  std::vector<Weight> out;
  std::function<void(std::size_t, Weight, int)> rec = [&](std::size_t k, Weight w, int left) {
    if (k == scope.size()) {
      if (w.height() > 0) out.push_back(w);
      return;
    }
    for (int a = 0; a <= left; ++a) {
      Weight x = w;
      x[scope[k]] = static_cast<std::int16_t>(a);
      rec(k + 1, x, left - a);
    }
  };
  rec(0, Weight(), N);
  std::stable_sort(out.begin(), out.end(), [](const Weight& a, const Weight& b) {
    return a.height() == b.height() ? a < b : a.height() < b.height();
  });
  return out;
}

}  // namespace

QuasiK quasi_k_solve(UAlgebra& U, const std::vector<int>& scope, int height) {
  FreeAlgebra& f = U.free();
  if (height > f.truncation()) throw TruncationExceeded("quasi K-matrix height exceeds the configured truncation");
  const CartanData& cd = U.cartan();
  for (int i : scope)
    if (std::find(scope.begin(), scope.end(), cd.tau(i)) == scope.end())
      throw std::invalid_argument("quasi K-matrix scope must be tau-stable");
  QuasiK Y;
  Y.height = height;
  Y.scope = scope;
  Y.comp[Weight()] = FreeElem(Word());
  for (const Weight& mu : scoped_weights(scope, height)) {
    const std::vector<Word> basis = f.basis(mu);
    const int n = static_cast<int>(basis.size());
    if (n == 0) continue;
    Echelon ech;
    for (int i : scope) {
      if (mu[i] < 1) continue;
      const int ti = cd.tau(i);
      std::unordered_map<UMono, SparseRow, KeyHash> rows;
      for (int b = 0; b < n; ++b) {
        const UElem cm = U.commutator(UAlgebra::F(i), U.E_word(basis[static_cast<std::size_t>(b)]));
        for (const auto& [m, c] : cm) rows[m].emplace_back(b, c);
      }
      const Weight nu = mu - cd.alpha(i) - cd.alpha(ti);
      auto it = nu.nonnegative() ? Y.comp.find(nu) : Y.comp.end();
      if (it != Y.comp.end()) {
        const UElem Yn = to_u_plus(it->second);
        const UElem left(UMono{Word::letter(ti), {}, cd.alpha(i), {}});
        const UElem right(UMono{Word::letter(ti), cd.alpha(i), {}, {}});
        // E_{tau i} K_i' Y - Y K_i E_{tau i}, with K_i E_{tau i} = v^{(a_i, a_{tau i})} E_{tau i} K_i
        const UElem known = U.mul(left, Yn) - U.mul(Yn, right).scaled(vp(cd.form(i, ti)));
        for (const auto& [m, c] : known) rows[m].emplace_back(n, c);
      }
      for (auto& [m, row] : rows) {
        std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        ech.add(row);
      }
    }
    if (ech.is_pivot(n)) throw NonUniqueSolution("quasi K-matrix system is inconsistent at weight " + mu.to_string(cd.rank()));
    if (static_cast<int>(ech.rank()) < n)
      throw NonUniqueSolution("quasi K-matrix system is underdetermined at weight " + mu.to_string(cd.rank()));
    FreeElem x;
    for (int b = 0; b < n; ++b) {
      const SparseRow& row = ech.pivot_row(b);
      Scalar rhs;
      for (const auto& [col, val] : row)
        if (col == n) rhs = val;
      x.add(basis[static_cast<std::size_t>(b)], -rhs);
    }
    if (!x.is_zero()) Y.comp[mu] = x;
  }
  return Y;
}

UElem quasi_k_residual(UAlgebra& U, const QuasiK& Y, int i) {
  const CartanData& cd = U.cartan();
  const int ti = cd.tau(i);
  const UElem y = Y.as_u();
  const UElem Bi = UAlgebra::F(i) + UElem(UMono{Word::letter(ti), {}, cd.alpha(i), {}});
  const UElem Bs = UAlgebra::F(i) + U.mul(UAlgebra::K(cd.alpha(i)), UAlgebra::E(ti));
  return truncate_e_height(U.mul(Bi, y) - U.mul(y, Bs), Y.height - 1);
}

UElem quasi_k_torus_residual(UAlgebra& U, const QuasiK& Y, int i) {
  const CartanData& cd = U.cartan();
  const UElem y = Y.as_u();
  const UElem k(UMono{{}, cd.alpha(i), cd.alpha(cd.tau(i)), {}});
  return U.mul(k, y) - U.mul(y, k);
}

}  // namespace ihopf
