#include <algorithm>
#include <map>
#include <random>

#include "ihopf/checks.hpp"

namespace ihopf {

namespace {

// per-check stream: the same (seed, name) always yields the same samples
std::mt19937_64 stream(const SuiteOptions& opt, const std::string& name) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : name) h = (h ^ ch) * 0x100000001b3ull;
  std::seed_seq seq{static_cast<std::uint32_t>(opt.seed), static_cast<std::uint32_t>(opt.seed >> 32),
                    static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32)};
  return std::mt19937_64(seq);
}

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Scalar random_coeff(std::mt19937_64& rng) {
  int c = uniform(rng, -3, 3);
  if (c == 0) c = 1;
  return Scalar::u_pow(4 * uniform(rng, -2, 2), Rational(c));
}

Word random_word(std::mt19937_64& rng, int rank, int len) {
  Word w;
  for (int k = 0; k < len; ++k) w.push_back(uniform(rng, 0, rank - 1));
  return w;
}

Weight random_torus(std::mt19937_64& rng, int rank) {
  Weight h;
  for (int i = 0; i < rank; ++i) h[i] = static_cast<std::int16_t>(uniform(rng, -1, 1));
  return h;
}

// a few monomials of one word length, Serre-normalized
BorelElem random_borel(std::mt19937_64& rng, BorelAlgebra& B, int height, int terms = 2) {
  BorelElem x;
  for (int t = 0; t < terms; ++t)
    x.add(BorelMono{random_word(rng, B.rank(), height), random_torus(rng, B.rank())}, random_coeff(rng));
  return B.normalize(x);
}

TensorElem random_tensor(std::mt19937_64& rng, BorelAlgebra& B, int height) {
  const int a = uniform(rng, 0, height);
  return tensor(random_borel(rng, B, a, 1), random_borel(rng, B, height - a, 1)) +
         tensor(random_borel(rng, B, height - a, 1), random_borel(rng, B, a, 1));
}

UElem random_u(std::mt19937_64& rng, UAlgebra& U, int height, int terms = 2) {
  UElem x;
  for (int t = 0; t < terms; ++t) {
    const int a = uniform(rng, 0, height);
    x.add(UMono{random_word(rng, U.rank(), a), random_torus(rng, U.rank()), random_torus(rng, U.rank()),
                random_word(rng, U.rank(), height - a)},
          random_coeff(rng));
  }
  return U.normalize(x);
}

GenWord random_gen_word(std::mt19937_64& rng, int rank, int gens, int tors) {
  std::vector<GenWord> letters;
  for (int k = 0; k < gens; ++k) letters.push_back(GenWord::gen(uniform(rng, 0, rank - 1)));
  for (int k = 0; k < tors; ++k) letters.push_back(GenWord::tor(uniform(rng, 0, rank - 1), uniform(rng, 0, 1) ? 1 : -1));
  std::shuffle(letters.begin(), letters.end(), rng);
  GenWord w;
  for (const auto& l : letters) w = w + l;
  return w;
}

std::string idx(const char* key, int k) { return std::string(key) + "=" + std::to_string(k); }

// product of tensors factor by factor
template <int N>
BorelTensor<N> tensor_mul(BorelAlgebra& B, const BorelTensor<N>& a, const BorelTensor<N>& b) {
  BorelTensor<N> out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      std::vector<std::pair<TensorKey<N>, Scalar>> acc{{TensorKey<N>{}, ca * cb}};
      for (std::size_t i = 0; i < N; ++i) {
        const BorelElem part = B.mul(BorelElem(ka.f[i]), BorelElem(kb.f[i]));
        std::vector<std::pair<TensorKey<N>, Scalar>> next;
        for (const auto& [k, c] : acc)
          for (const auto& [m, cm] : part) {
            TensorKey<N> k2 = k;
            k2.f[i] = m;
            next.emplace_back(k2, c * cm);
          }
        acc = std::move(next);
      }
      for (const auto& [k, c] : acc) out.add(k, c);
    }
  return out;
}

template <int N>
std::function<std::string(const BorelTensor<N>&)> tensor_fmt(int rank) {
  return [rank](const BorelTensor<N>& x) { return format_tensor<N>(x, rank); };
}

void expect_scalar(Report& rep, const std::string& id, const std::string& anchor, const std::string& params,
                   const Scalar& lhs, const Scalar& rhs) {
  const Scalar d = lhs - rhs;
  rep.record(id, anchor, params, d.is_zero(), d.is_zero() ? std::string() : d.to_string());
}

// Columns for rank computations over monomials of any hashable key type.
template <class M>
class ColumnIndex {
 public:
  int operator()(const M& m) {
    auto it = ids_.find(m);
    if (it != ids_.end()) return it->second;
    const int id = static_cast<int>(ids_.size());
    ids_.emplace(m, id);
    return id;
  }
  template <class E>
  SparseRow row(const E& x) {
    SparseRow r;
    for (const auto& [m, c] : x) r.emplace_back((*this)(m), c);
    std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return r;
  }

 private:
  std::unordered_map<M, int, KeyHash> ids_;
};

// weights of height exactly h
std::vector<Weight> weights_of_height(int rank, int h) {
  std::vector<Weight> out;
  Weight w;
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == rank - 1) {
      w[i] = static_cast<std::int16_t>(left);
      out.push_back(w);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      w[i] = static_cast<std::int16_t>(k);
      rec(i + 1, left - k);
    }
  };
  if (rank > 0) rec(0, h);
  return out;
}

// the base rank when the diagram is a diagonal double (tau i = i + n, no cross edges)
int double_base_rank(const CartanData& cd) {
  const int r = cd.rank();
  if (r % 2) return 0;
  const int n = r / 2;
  for (int i = 0; i < n; ++i) {
    if (cd.tau(i) != i + n || cd.d(i) != cd.d(i + n)) return 0;
    for (int j = 0; j < n; ++j)
      if (cd.c(i, j + n) != 0 || cd.c(i, j) != cd.c(i + n, j + n)) return 0;
  }
  return n;
}

}  // namespace

// ------------------------------------------------------------ suite: hopf-axioms

void suite_hopf_axioms(Workspace& ws, const SuiteOptions& opt, Report& rep) {
  BorelAlgebra& B = ws.B;
  const int n = ws.rank();
  const int h = std::min(opt.height, 3);
  const int samples = 8 * opt.depth;
  const std::string anchor = "B~ is a Hopf algebra";
  auto rng = stream(opt, "hopf-axioms");
  for (int k = 0; k < samples; ++k) {
    const std::string p = idx("sample", k);
    const BorelElem x = random_borel(rng, B, uniform(rng, 0, h)), y = random_borel(rng, B, uniform(rng, 0, h));
    rep.expect_zero("hopf-axioms/coproduct-multiplicative", anchor, p,
                    B.coproduct(B.mul(x, y)) - tensor_mul<2>(B, B.coproduct(x), B.coproduct(y)), n);
    BorelTensor<3> right;
    for (const auto& [kk, c] : B.coproduct(x))
      for (const auto& [k2, c2] : B.coproduct(BorelElem(kk.f[1]))) right.add(TensorKey<3>{{kk.f[0], k2.f[0], k2.f[1]}}, c * c2);
    rep.expect_zero<BorelTensor<3>>("hopf-axioms/coassociative", anchor, p, B.coproduct_iter<3>(x) - right,
                                    tensor_fmt<3>(n));
    BorelElem l, r, sl, sr;
    for (const auto& [kk, c] : B.coproduct(x)) {
      l.add(kk.f[1], c * B.counit(BorelElem(kk.f[0])));
      r.add(kk.f[0], c * B.counit(BorelElem(kk.f[1])));
      sl.add(B.mul(B.antipode(BorelElem(kk.f[0])), BorelElem(kk.f[1])), c);
      sr.add(B.mul(BorelElem(kk.f[0]), B.antipode(BorelElem(kk.f[1]))), c);
    }
    rep.expect_zero("hopf-axioms/counit", anchor, p + " side=left", l - x, n);
    rep.expect_zero("hopf-axioms/counit", anchor, p + " side=right", r - x, n);
    expect_scalar(rep, "hopf-axioms/counit-multiplicative", anchor, p, B.counit(B.mul(x, y)), B.counit(x) * B.counit(y));
    const BorelElem eps = BorelAlgebra::one().scaled(B.counit(x));
    rep.expect_zero("hopf-axioms/antipode", anchor, p + " side=left", sl - eps, n);
    rep.expect_zero("hopf-axioms/antipode", anchor, p + " side=right", sr - eps, n);
    rep.expect_zero("hopf-axioms/antipode-inverse", anchor, p, B.antipode(B.antipode_inv(x)) - x, n);
    rep.expect_zero("hopf-axioms/antipode-anti-multiplicative", anchor, p,
                    B.antipode(B.mul(x, y)) - B.mul(B.antipode(y), B.antipode(x)), n);
  }
  // pairing axioms and tau
  const std::string panchor = "phi is a Hopf pairing preserved by tau";
  for (int k = 0; k < samples; ++k) {
    const std::string p = idx("sample", k);
    const int ha = uniform(rng, 0, 2), hb = uniform(rng, 0, 1);
    const BorelElem a = random_borel(rng, B, ha), a2 = random_borel(rng, B, hb), b = random_borel(rng, B, ha + hb);
    const BorelElem y = random_borel(rng, B, ha + hb);
    expect_scalar(rep, "hopf-axioms/pairing-unit", panchor, p, B.pairing(a, BorelAlgebra::one()), B.counit(a));
    expect_scalar(rep, "hopf-axioms/pairing-unit", panchor, p + " (right)", B.pairing(BorelAlgebra::one(), b), B.counit(b));
    Scalar rhs, rhs2;
    for (const auto& [kk, c] : B.coproduct(b)) {
      rhs += c * B.pairing(a, BorelElem(kk.f[0])) * B.pairing(a2, BorelElem(kk.f[1]));
      rhs2 += c * B.pairing(BorelElem(kk.f[0]), a) * B.pairing(BorelElem(kk.f[1]), a2);
    }
    expect_scalar(rep, "hopf-axioms/pairing-product-left", panchor, p, B.pairing(B.mul(a, a2), b), rhs);
    expect_scalar(rep, "hopf-axioms/pairing-product-right", panchor, p, B.pairing(b, B.mul(a, a2)), rhs2);
    expect_scalar(rep, "hopf-axioms/pairing-antipode", panchor, p, B.pairing(b, B.antipode(y)),
                  B.pairing(B.antipode(b), y));
    expect_scalar(rep, "hopf-axioms/pairing-tau", panchor, p, B.pairing(B.tau(b), B.tau(y)), B.pairing(b, y));
    rep.expect_zero("hopf-axioms/tau-multiplicative", panchor, p, B.tau(B.mul(a, a2)) - B.mul(B.tau(a), B.tau(a2)), n);
  }
  // chi: split independence of the compatible map
  const std::string canchor = "chi is tau-twisted compatible";
  for (int k = 0; k < samples; ++k) {
    BorelElem x = random_borel(rng, B, uniform(rng, 0, 2), 1), y = random_borel(rng, B, uniform(rng, 0, 2), 1);
    // pad towards tau-symmetric weights so chi is typically nonzero
    y = B.mul(y, B.tau(x));
    Scalar rhs;
    for (const auto& [ka, ca] : B.coproduct(x))
      for (const auto& [kb, cb] : B.coproduct(y))
        rhs += ca * cb * B.chi(BorelElem(ka.f[0])) * B.chi(BorelElem(kb.f[1])) * B.pairing_mono(ka.f[1], kb.f[0], true);
    expect_scalar(rep, "hopf-axioms/chi-compatible", canchor, idx("sample", k), B.chi(B.mul(x, y)), rhs);
  }
}

// ------------------------------------------------------------ suite: ihopf-core

void suite_ihopf_core(Workspace& ws, const SuiteOptions& opt, Report& rep) {
  const CartanData& cd = ws.cartan();
  const int n = ws.rank();
  BorelAlgebra& B = ws.B;
  IQuantumBorel& Bi = ws.Bi;
  DiagonalIHopf D(B);
  DoubleRealization P(ws.U, D);
  const int H = opt.height;
  // associativity of the star product on B~^i_tau
  {
    auto rng = stream(opt, "ihopf-core/associativity");
    const std::string anchor = "the star product is associative";
    for (int k = 0; k < 100 * opt.depth; ++k) {
      // the triple and every product formed from it stay within height H
      const int ha = uniform(rng, 0, H), hb = uniform(rng, 0, H - ha), hc = uniform(rng, 0, H - ha - hb);
      const BorelElem a = random_borel(rng, B, ha), b = random_borel(rng, B, hb), c = random_borel(rng, B, hc);
      rep.expect_zero("ihopf-core/associativity", anchor, idx("sample", k),
                      Bi.star_generic(Bi.star_generic(a, b), c) - Bi.star_generic(a, Bi.star_generic(b, c)), n);
    }
  }
  {
    auto rng = stream(opt, "ihopf-core/opposite");
    UntwistedIHopf Un(B);
    for (int k = 0; k < 10 * opt.depth; ++k) {
      const std::string p = idx("sample", k);
      const BorelElem a = random_borel(rng, B, uniform(rng, 0, 2)), b = random_borel(rng, B, uniform(rng, 0, 2));
      rep.expect_zero("ihopf-core/opposite", "the opposite star product is the opposite algebra", p,
                      Bi.star_opposite(a, b) - Bi.star_generic(b, a), n);
      rep.expect_zero("ihopf-core/tau-untwisted", "tau is multiplicative for the untwisted star", p,
                      B.tau(Un.star(a, b)) - Un.star(B.tau(a), B.tau(b)), n);
      const int i = uniform(rng, 0, n - 1);
      const Weight lam = Weight::unit(i) - Weight::unit(uniform(rng, 0, n - 1));
      const std::string gp = p + " i=" + std::to_string(i + 1);
      rep.expect_zero("ihopf-core/generator-star", "generator star formulas agree with the generic star", gp,
                      Bi.theta_star(i, a) - Bi.star_generic(BorelAlgebra::theta(i), a), n);
      rep.expect_zero("ihopf-core/generator-star", "generator star formulas agree with the generic star", gp + " (right)",
                      Bi.star_theta(a, i) - Bi.star_generic(a, BorelAlgebra::theta(i)), n);
      rep.expect_zero("ihopf-core/generator-star", "torus star formulas agree with the generic star", gp,
                      Bi.torus_star(lam, a) - Bi.star_generic(BorelAlgebra::torus(lam), a), n);
      rep.expect_zero("ihopf-core/generator-star", "torus star formulas agree with the generic star", gp + " (right)",
                      Bi.star_torus(a, lam) - Bi.star_generic(a, BorelAlgebra::torus(lam)), n);
      rep.expect_zero("ihopf-core/star-decompose", "star-words span B~^i_tau", p, Bi.eval(Bi.star_decompose(a)) - a, n);
    }
  }
  // the diagonal type (B~ (x) B~)^i is a Hopf algebra
  {
    auto rng = stream(opt, "ihopf-core/diagonal-hopf");
    const std::string anchor = "the iHopf algebra of diagonal type is a Hopf algebra";
    const int hd = std::min(H, 3);
    auto fmt4 = tensor_fmt<4>(n);
    auto fmt6 = tensor_fmt<6>(n);
    const TensorElem unit = tensor(BorelAlgebra::one(), BorelAlgebra::one());
    for (int k = 0; k < 50 * opt.depth; ++k) {
      const std::string p = idx("sample", k);
      const int hx = uniform(rng, 0, hd);
      const TensorElem x = random_tensor(rng, B, hx), y = random_tensor(rng, B, uniform(rng, 0, hd - hx));
      const Tensor4 dx = D.delta(x);
      rep.expect_zero<Tensor4>("ihopf-core/delta-multiplicative", anchor, p, D.delta(D.star(x, y)) - D.star4(dx, D.delta(y)),
                               fmt4);
      // (Delta (x) 1) Delta = (1 (x) Delta) Delta
      BorelTensor<6> l6, r6;
      for (const auto& [kk, c] : dx) {
        for (const auto& [k2, c2] : D.delta(TensorElem(TensorMono{{kk.f[0], kk.f[1]}})))
          l6.add(TensorKey<6>{{k2.f[0], k2.f[1], k2.f[2], k2.f[3], kk.f[2], kk.f[3]}}, c * c2);
        for (const auto& [k2, c2] : D.delta(TensorElem(TensorMono{{kk.f[2], kk.f[3]}})))
          r6.add(TensorKey<6>{{kk.f[0], kk.f[1], k2.f[0], k2.f[1], k2.f[2], k2.f[3]}}, c * c2);
      }
      rep.expect_zero<BorelTensor<6>>("ihopf-core/coassociative", anchor, p, l6 - r6, fmt6);
      TensorElem l, r, s;
      for (const auto& [kk, c] : dx) {
        const TensorElem first(TensorMono{{kk.f[0], kk.f[1]}}), second(TensorMono{{kk.f[2], kk.f[3]}});
        l.add(second, c * D.counit(first));
        r.add(first, c * D.counit(second));
        s += D.star(D.antipode(first), second).scaled(c);
      }
      rep.expect_zero("ihopf-core/counit", anchor, p + " side=left", l - x, n);
      rep.expect_zero("ihopf-core/counit", anchor, p + " side=right", r - x, n);
      rep.expect_zero("ihopf-core/antipode", anchor, p, s - unit.scaled(D.counit(x)), n);
    }
  }
  // chi vanishes on the ideal generated by the Serre elements
  {
    auto rng = stream(opt, "ihopf-core/chi-ideal");
    const std::string anchor = "chi vanishes on the Serre ideal";
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) pairs.emplace_back(i, j);
    for (int k = 0; k < 50 * opt.depth && !pairs.empty(); ++k) {
      const auto [i, j] = pairs[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(pairs.size()) - 1))];
      const Word w = random_word(rng, n, uniform(rng, 0, 1));
      const FreeElem u = ws.f.serre_element(i, j);
      // right factor completes a tau-symmetric weight so chi is not zero for weight reasons
      Weight lam = w.weight() + u.begin()->first.weight();
      std::vector<int> letters;
      for (int a = 0; a < n; ++a)
        for (int m = 0; m < lam[a]; ++m) letters.push_back(cd.tau(a));
      std::shuffle(letters.begin(), letters.end(), rng);
      Word w2;
      for (int a : letters) w2.push_back(a);
      const Weight h1 = random_torus(rng, n), h2 = random_torus(rng, n);
      Scalar total;
      for (const auto& [uw, c] : u) {
        // h^{h1} t_w u t_{w2} h^{h2} with the torus moved to the right
        const Word word = w + uw + w2;
        const int shift = cd.form(h1, word.weight());
        total += c * Scalar::v_pow(shift) * B.chi_mono(BorelMono{word, h1 + h2});
      }
      rep.record("ihopf-core/chi-ideal", anchor,
                 idx("sample", k) + " i=" + std::to_string(i + 1) + " j=" + std::to_string(j + 1), total.is_zero(),
                 total.is_zero() ? std::string() : total.to_string());
    }
  }
  // xi_tau is an injective algebra map compatible with the coideal coproduct
  {
    auto rng = stream(opt, "ihopf-core/xi");
    for (int k = 0; k < 100 * opt.depth; ++k) {
      const int ha = uniform(rng, 0, H);
      const BorelElem a = random_borel(rng, B, ha, 1), b = random_borel(rng, B, uniform(rng, 0, H - ha), 1);
      rep.expect_zero("ihopf-core/xi-multiplicative", "xi_tau is an algebra homomorphism", idx("sample", k),
                      D.xi(Bi.star_generic(a, b)) - D.star(D.xi(a), D.xi(b)), n);
    }
    auto fmt4 = tensor_fmt<4>(n);
    for (int k = 0; k < 50 * opt.depth; ++k) {
      const BorelElem b = random_borel(rng, B, uniform(rng, 0, std::min(H, 3)), 1);
      Tensor4 lhs;
      for (const auto& [kk, c] : D.psi(b))
        for (const auto& [xk, xc] : D.xi(BorelElem(kk.f[0])))
          lhs.add(Tensor4::Map::key_type{{xk.f[0], xk.f[1], kk.f[1], kk.f[2]}}, c * xc);
      rep.expect_zero<Tensor4>("ihopf-core/xi-coideal", "xi_tau intertwines Psi with the coproduct", idx("sample", k),
                               lhs - D.delta(D.xi(b)), fmt4);
    }
    // injectivity: the images of a basis of each weight space are independent
    for (int h = 0; h <= H; ++h)
      for (const Weight& mu : weights_of_height(n, h)) {
        const auto& basis = ws.f.basis(mu);
        if (basis.empty()) continue;
        ColumnIndex<TensorMono> cols;
        Echelon e;
        for (const Word& w : basis) e.add(cols.row(D.xi(BorelElem(BorelMono{w, Weight()}))));
        rep.record("ihopf-core/xi-injective", "xi_tau is injective", "weight=" + mu.to_string(n),
                   e.rank() == basis.size(),
                   e.rank() == basis.size() ? std::string()
                                            : "rank " + std::to_string(e.rank()) + " < " + std::to_string(basis.size()));
      }
  }
  // the square Phi_sharp^{-1} xi_tau = embedding Phi^i commutes
  {
    auto rng = stream(opt, "ihopf-core/square");
    IQuantumGroup& Ui = ws.Ui;
    const std::string anchor = "Phi^i is an isomorphism compatible with xi_tau and Phi_sharp";
    auto check = [&](const GenWordElem& w, const std::string& p) {
      const BorelElem x = Bi.eval(w);
      rep.expect_zero("ihopf-core/main-isomorphism", anchor, p, P.inverse(D.xi(x)) - Ui.embed(Ui.phi_i(w)), n);
    };
    for (int i = 0; i < n; ++i) {
      check(GenWordElem(GenWord::gen(i)), "g=t[" + std::to_string(i + 1) + "]");
      check(GenWordElem(GenWord::tor(i)), "g=h[" + std::to_string(i + 1) + "]");
      check(GenWordElem(GenWord::tor(i, -1)), "g=h[" + std::to_string(i + 1) + "]^-1");
    }
    for (int k = 0; k < 50 * opt.depth; ++k) {
      const int g = uniform(rng, 0, std::min(H, 4));
      const GenWord w = random_gen_word(rng, n, g, uniform(rng, 0, 2));
      check(GenWordElem(w), idx("sample", k) + " w=" + w.to_string("t", "h", "*"));
    }
  }
}

// ------------------------------------------------------------ suite: double-iso

void suite_double_iso(Workspace& ws, const SuiteOptions& opt, Report& rep) {
  const int n = ws.rank();
  UAlgebra& U = ws.U;
  BorelAlgebra& B = ws.B;
  DiagonalIHopf D(B);
  DoubleRealization P(U, D);
  const std::string anchor = "Phi_sharp realizes U~ as the diagonal iHopf algebra";
  // defining relations of U~ hold in U~ and their images vanish
  for (const auto& r : U.defining_relations()) {
    rep.expect_zero("double-iso/relation", "U~ satisfies its defining relations", r.name, U.evaluate(r), n);
    TensorElem img;
    for (const auto& [c, fac] : r.terms) {
      TensorElem p = tensor(BorelAlgebra::one(), BorelAlgebra::one());
      for (const auto& g : fac) p = D.star(p, P.forward(g));
      img.add(p, c);
    }
    rep.expect_zero("double-iso/relation-image", anchor, r.name, img, n);
  }
  auto rng = stream(opt, "double-iso");
  const int h = std::min(opt.height, 3);
  for (int k = 0; k < 10 * opt.depth; ++k) {
    const std::string p = idx("sample", k);
    const int hx = uniform(rng, 0, h);
    const UElem x = random_u(rng, U, hx), y = random_u(rng, U, uniform(rng, 0, h - hx)), z = random_u(rng, U, 1);
    rep.expect_zero("double-iso/multiplicative", anchor, p, P.forward(U.mul(x, y)) - D.star(P.forward(x), P.forward(y)), n);
    rep.expect_zero("double-iso/round-trip", anchor, p, P.inverse(P.forward(x)) - x, n);
    rep.expect_zero("double-iso/associative", "U~ multiplication is associative", p,
                    U.mul(U.mul(x, y), z) - U.mul(x, U.mul(y, z)), n);
    rep.expect_zero("double-iso/bar", "bar is an anti-involution of U~", p,
                    U.bar(U.mul(x, y)) - U.mul(U.bar(y), U.bar(x)), n);
    rep.expect_zero("double-iso/sigma", "sigma is an anti-involution of U~", p,
                    U.sigma(U.mul(x, y)) - U.mul(U.sigma(y), U.sigma(x)), n);
  }
  // bijectivity on the graded truncation: E_a F_b with ht a + ht b <= H
  const int H = opt.height;
  std::vector<std::vector<Word>> by_height(static_cast<std::size_t>(H + 1));
  for (int hh = 0; hh <= H; ++hh)
    for (const Weight& mu : weights_of_height(n, hh))
      for (const Word& w : ws.f.basis(mu)) by_height[static_cast<std::size_t>(hh)].push_back(w);
  ColumnIndex<TensorMono> cols, lead_cols;
  Echelon full, lead;
  std::size_t dim = 0;
  bool inverse_ok = true;
  std::string witness;
  for (int ha = 0; ha <= H; ++ha)
    for (int hb = 0; ha + hb <= H; ++hb)
      for (const Word& a : by_height[static_cast<std::size_t>(ha)])
        for (const Word& b : by_height[static_cast<std::size_t>(hb)]) {
          ++dim;
          const UElem x(UMono{a, {}, {}, b});
          const TensorElem y = P.forward(x);
          full.add(cols.row(y));
          // torus-free part: t_a (x) t_b plus lower words
          TensorElem t0;
          for (const auto& [m, c] : y)
            if (m.f[0].h.is_zero() && m.f[1].h.is_zero()) t0.add(m, c);
          lead.add(lead_cols.row(t0));
          const TensorElem target = tensor(BorelElem(BorelMono{a, {}}), BorelElem(BorelMono{b, {}}));
          const TensorElem back = P.forward(P.inverse(target)) - target;
          if (inverse_ok && !back.is_zero()) {
            inverse_ok = false;
            witness = format_tensor_elem(back, n);
          }
        }
  const std::string hp = "height<=" + std::to_string(H) + " dim=" + std::to_string(dim);
  rep.record("double-iso/injective", anchor, hp, full.rank() == dim,
             full.rank() == dim ? std::string() : "rank " + std::to_string(full.rank()));
  rep.record("double-iso/graded-bijective", anchor, hp, lead.rank() == dim,
             lead.rank() == dim ? std::string() : "rank " + std::to_string(lead.rank()));
  rep.record("double-iso/surjective", anchor, hp, inverse_ok, witness);
}

// ------------------------------------------------------------ suite: serre-presentation

void suite_serre_presentation(Workspace& ws, const SuiteOptions& opt, Report& rep) {
  (void)opt;
  const CartanData& cd = ws.cartan();
  const int n = ws.rank();
  IQuantumGroup& Ui = ws.Ui;
  const std::string anchor = "U~^i has the Serre presentation";
  auto check = [&](const std::string& id, const std::string& p, const IWordElem& rel) {
    if (rel.is_zero()) return;
    rep.expect_zero(id, anchor, p, Ui.embed(rel), n);
    // the involutions send relations to relations
    rep.expect_zero("serre-presentation/sigma", "sigma^i preserves the relations", id.substr(id.find('/') + 1) + " " + p,
                    Ui.embed(Ui.sigma_i(rel)), n);
    rep.expect_zero("serre-presentation/bar", "bar^i preserves the relations", id.substr(id.find('/') + 1) + " " + p,
                    Ui.embed(Ui.bar_i(rel)), n);
    rep.expect_zero("serre-presentation/psi", "psi^i preserves the relations", id.substr(id.find('/') + 1) + " " + p,
                    Ui.embed(Ui.psi_i(rel)), n);
  };
  auto ij = [](int i, int j) { return "i=" + std::to_string(i + 1) + " j=" + std::to_string(j + 1); };
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < n; ++l) {
      check("serre-presentation/relation1", ij(i, l) + " (k k)", Ui.relation1_kk(i, l));
      check("serre-presentation/relation1", ij(i, l) + " (k B)", Ui.relation1_kb(i, l));
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      check("serre-presentation/relation2", ij(i, j), Ui.relation2(i, j));
      check("serre-presentation/relation3", ij(i, j), Ui.relation3(i, j));
      for (int p : {0, 1}) check("serre-presentation/relation6", ij(i, j) + " parity=" + std::to_string(p), Ui.relation6(i, j, p));
    }
  for (int i = 0; i < n; ++i) {
    check("serre-presentation/relation5", "i=" + std::to_string(i + 1) + " factor=v_i", Ui.relation5(i, true));
    check("serre-presentation/relation5", "i=" + std::to_string(i + 1) + " factor=v", Ui.relation5(i, false));
  }
  // quantum groups as iquantum groups of diagonal type
  if (const int base = double_base_rank(cd)) {
    std::vector<std::vector<int>> c(static_cast<std::size_t>(base));
    std::vector<int> d;
    for (int i = 0; i < base; ++i) {
      d.push_back(cd.d(i));
      for (int j = 0; j < base; ++j) c[static_cast<std::size_t>(i)].push_back(cd.c(i, j));
    }
    FreeAlgebra f1(CartanData(cd.name() + "-base", c, d), ws.f.truncation());
    UAlgebra U1(f1);
    for (const auto& r : U1.defining_relations()) {
      IWordElem img;
      for (const auto& [co, fac] : r.terms) {
        IWordElem p(GenWord{});
        for (const auto& g : fac) p = word_product(p, doubled_image(g, base));
        img.add(p, co);
      }
      rep.expect_zero("serre-presentation/diagonal-type", "quantum groups are iquantum groups of diagonal type", r.name,
                      Ui.embed(img), n);
    }
  }
}

}  // namespace ihopf
