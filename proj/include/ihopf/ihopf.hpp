// Generic iHopf star product a*b = sum phi(b2, a1) a2 b1 over a Hopf context,
// its Borel instances, the diagonal type with its Hopf structure, xi and Psi.
#pragma once

#include <array>
#include <concepts>
#include <cstdlib>
#include <string>
#include <unordered_map>
#include <vector>

#include "ihopf/borel.hpp"

namespace ihopf {

template <class M>
struct CopTerm {
  M a, b;
  Scalar c;
};

template <class M>
struct MonoPair {
  M a, b;
  bool operator==(const MonoPair& o) const { return a == o.a && b == o.b; }
  std::size_t hash() const { return hash_mix(a.hash(), b.hash() * 31u); }
};

// A context supplies the Hopf data the star product needs. The pairing used by
// the star is P(b2, a1); grade_left(a1) == grade_right(b2) whenever it is nonzero.
template <class C>
concept HopfContext = requires(C& c, const typename C::Mono& m, typename C::Elem& out, const Scalar& s) {
  typename C::Grade;
  { c.coproduct_terms(m) } -> std::convertible_to<const std::vector<CopTerm<typename C::Mono>>&>;
  { c.star_pairing(m, m) } -> std::same_as<Scalar>;
  { c.grade_left(m) } -> std::same_as<typename C::Grade>;
  { c.grade_right(m) } -> std::same_as<typename C::Grade>;
  c.mul_into(m, m, s, out);
};

template <HopfContext C>
class StarEngine {
 public:
  using Mono = typename C::Mono;
  using Elem = typename C::Elem;

  explicit StarEngine(C& ctx) : ctx_(ctx) {}
  C& context() { return ctx_; }

  const Elem& star_mono(const Mono& a, const Mono& b) {
    MonoPair<Mono> key{a, b};
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    Elem out;
    std::unordered_map<typename C::Grade, std::vector<const CopTerm<Mono>*>, KeyHash> by_grade;
    for (const auto& t : ctx_.coproduct_terms(a)) by_grade[ctx_.grade_left(t.a)].push_back(&t);
    // cached coproduct vectors live in node-based maps, so references stay valid
    for (const auto& tb : ctx_.coproduct_terms(b)) {
      auto g = by_grade.find(ctx_.grade_right(tb.b));
      if (g == by_grade.end()) continue;
      for (const CopTerm<Mono>* ta : g->second) {
        Scalar p = ctx_.star_pairing(tb.b, ta->a);
        if (p.is_zero()) continue;
        ctx_.mul_into(ta->b, tb.a, p * ta->c * tb.c, out);
      }
    }
    return memo_.emplace(key, std::move(out)).first->second;
  }

  Elem star(const Elem& a, const Elem& b) {
    Elem out;
    for (const auto& [ma, ca] : a)
      for (const auto& [mb, cb] : b) out.add(star_mono(ma, mb), ca * cb);
    return out;
  }

  // a *' b = sum phi(a2, b1) b2 a1
  Elem star_opposite(const Elem& a, const Elem& b) {
    Elem out;
    for (const auto& [ma, ca] : a)
      for (const auto& [mb, cb] : b) {
        const auto& at = ctx_.coproduct_terms(ma);
        const auto& bt = ctx_.coproduct_terms(mb);
        for (const auto& ta : at)
          for (const auto& tb : bt) {
            if (ctx_.grade_right(ta.b) != ctx_.grade_left(tb.a)) continue;
            Scalar p = ctx_.star_pairing(ta.b, tb.a);
            if (p.is_zero()) continue;
            ctx_.mul_into(tb.b, ta.a, ca * cb * p * ta.c * tb.c, out);
          }
      }
    return out;
  }

  void clear() { memo_.clear(); }

 private:
  C& ctx_;
  std::unordered_map<MonoPair<Mono>, Elem, KeyHash> memo_;
};

// B~ with P(b2, a1) = phi(tau b2, a1); twisted = false gives the untwisted B~^i.
class BorelStarContext {
 public:
  using Mono = BorelMono;
  using Elem = BorelElem;
  using Grade = Weight;

  BorelStarContext(BorelAlgebra& B, bool twisted) : B_(B), twisted_(twisted) {}
  BorelAlgebra& borel() { return B_; }
  bool twisted() const { return twisted_; }

  const std::vector<CopTerm<Mono>>& coproduct_terms(const Mono& m);
  Scalar star_pairing(const Mono& b2, const Mono& a1) { return B_.pairing_mono(b2, a1, twisted_); }
  Grade grade_left(const Mono& a1) const { return a1.w.weight(); }
  Grade grade_right(const Mono& b2) const { return twisted_ ? B_.cartan().tau(b2.w.weight()) : b2.w.weight(); }
  void mul_into(const Mono& a, const Mono& b, const Scalar& c, Elem& out) { B_.mul_mono_into(a, b, c, out); }

 private:
  BorelAlgebra& B_;
  bool twisted_;
  std::unordered_map<Mono, std::vector<CopTerm<Mono>>, KeyHash> cop_;
};

struct GradePair {
  Weight a, b;
  bool operator==(const GradePair& o) const { return a == o.a && b == o.b; }
  bool operator!=(const GradePair& o) const { return !(*this == o); }
  std::size_t hash() const { return hash_mix(a.hash(), b.hash()); }
};

using TensorMono = TensorKey<2>;
using TensorElem = BorelTensor<2>;

// B~ (x) B~ with the twisted pairing phi#(c (x) d, a (x) b) = phi(a, d) phi(c, b).
class DiagonalContext {
 public:
  using Mono = TensorMono;
  using Elem = TensorElem;
  using Grade = GradePair;

  explicit DiagonalContext(BorelAlgebra& B) : B_(B) {}
  BorelAlgebra& borel() { return B_; }

  const std::vector<CopTerm<Mono>>& coproduct_terms(const Mono& m);
  Scalar star_pairing(const Mono& b2, const Mono& a1) {
    Scalar p = B_.pairing_mono(a1.f[0], b2.f[1]);
    if (p.is_zero()) return p;
    return p * B_.pairing_mono(b2.f[0], a1.f[1]);
  }
  Grade grade_left(const Mono& a1) const { return {a1.f[0].w.weight(), a1.f[1].w.weight()}; }
  Grade grade_right(const Mono& b2) const { return {b2.f[1].w.weight(), b2.f[0].w.weight()}; }
  void mul_into(const Mono& a, const Mono& b, const Scalar& c, Elem& out);

 private:
  BorelAlgebra& B_;
  std::unordered_map<Mono, std::vector<CopTerm<Mono>>, KeyHash> cop_;
};

TensorElem tensor(const BorelElem& a, const BorelElem& b);
// "lhs || rhs" per term
std::string format_tensor_elem(const TensorElem& x, int rank);

// ------------------------------------------------------------ formal words

// Word in letters gen_i, tor_i, tor_i^{-1}; used both for star-words in B~^i_tau
// (t_i, h_i) and for words in U^i (B_i, k_i).
struct GenWord {
  static constexpr int kCap = 31;
  std::uint8_t n = 0;
  std::array<std::int8_t, kCap> a{};

  enum Kind { Gen = 0, Tor = 1, TorInv = 2 };
  static std::int8_t code(Kind k, int i) { return static_cast<std::int8_t>(k * 16 + i); }
  static Kind kind_of(std::int8_t c) { return static_cast<Kind>(c / 16); }
  static int index_of(std::int8_t c) { return c % 16; }

  static GenWord gen(int i) { return GenWord().pushed(code(Gen, i)); }
  static GenWord tor(int i, int e = 1) {
    GenWord w;
    for (int k = 0; k < std::abs(e); ++k) w.push_back(code(e > 0 ? Tor : TorInv, i));
    return w;
  }
  static GenWord torus(const Weight& mu, int rank) {
    GenWord w;
    for (int i = 0; i < rank; ++i) w = w + tor(i, mu[i]);
    return w;
  }

  int size() const { return n; }
  bool empty() const { return n == 0; }
  std::int8_t operator[](int p) const { return a[static_cast<std::size_t>(p)]; }
  void push_back(std::int8_t c);
  GenWord pushed(std::int8_t c) const {
    GenWord w = *this;
    w.push_back(c);
    return w;
  }
  // concatenation, cancelling adjacent tor_i tor_i^{-1}
  GenWord operator+(const GenWord& o) const;
  bool operator==(const GenWord& o) const;
  bool operator<(const GenWord& o) const;
  std::size_t hash() const;
  // number of Gen letters
  int degree() const;
  // weight of the Gen letters
  Weight gen_weight() const;
  std::string to_string(const char* gen_sym, const char* tor_sym, const char* sep) const;
};

using GenWordElem = Lin<GenWord>;
GenWordElem word_product(const GenWordElem& x, const GenWordElem& y);
std::string format_words(const GenWordElem& x, const char* gen_sym, const char* tor_sym, const char* sep);

// ------------------------------------------------------------ B~^i_tau

class IQuantumBorel {
 public:
  explicit IQuantumBorel(BorelAlgebra& B) : B_(B), ctx_(B, true), engine_(ctx_) {}
  BorelAlgebra& borel() { return B_; }
  const CartanData& cartan() const { return B_.cartan(); }

  BorelElem star_generic(const BorelElem& a, const BorelElem& b) { return engine_.star(a, b); }
  BorelElem star_opposite(const BorelElem& a, const BorelElem& b) { return engine_.star_opposite(a, b); }
  // dispatches to the generator formulas when a factor is a single generator
  BorelElem star(const BorelElem& a, const BorelElem& b);

  BorelElem theta_star(int i, const BorelElem& x);   // t_i * x
  BorelElem star_theta(const BorelElem& x, int i);   // x * t_i
  BorelElem torus_star(const Weight& lam, const BorelElem& x);  // h^lam * x
  BorelElem star_torus(const BorelElem& x, const Weight& lam);  // x * h^lam
  // star-inverse of h_i is v^{(tau a_i, a_i)} h_i^{-1}
  BorelElem star_torus_inv(const BorelElem& x, int i);

  BorelElem eval(const GenWordElem& w);
  BorelElem eval_word(const GenWord& w);
  GenWordElem star_decompose(const BorelElem& x);

 private:
  BorelAlgebra& B_;
  BorelStarContext ctx_;
  StarEngine<BorelStarContext> engine_;
  std::unordered_map<GenWord, BorelElem, KeyHash> eval_cache_;
};

// ------------------------------------------------------------ diagonal type

using Tensor4 = BorelTensor<4>;
using Tensor3 = BorelTensor<3>;

class DiagonalIHopf {
 public:
  explicit DiagonalIHopf(BorelAlgebra& B) : B_(B), ctx_(B), engine_(ctx_) {}
  BorelAlgebra& borel() { return B_; }
  const CartanData& cartan() const { return B_.cartan(); }

  TensorElem star(const TensorElem& a, const TensorElem& b) { return engine_.star(a, b); }
  TensorElem star_opposite(const TensorElem& a, const TensorElem& b) { return engine_.star_opposite(a, b); }
  const TensorElem& star_mono(const TensorMono& a, const TensorMono& b) { return engine_.star_mono(a, b); }

  // Hopf structure of the diagonal type
  Tensor4 delta(const TensorElem& x);
  Scalar counit(const TensorElem& x);
  TensorElem antipode(const TensorElem& x);
  // factorwise star on (B~ (x) B~) (x) (B~ (x) B~)
  Tensor4 star4(const Tensor4& a, const Tensor4& b);

  // xi(a) = sum chi(a2) tau(a3) (x) a1
  TensorElem xi(const BorelElem& a);
  // Psi(a) = sum phi(tau(a4), a2) a3 (x) (tau(a5) (x) a1)
  Tensor3 psi(const BorelElem& a);

 private:
  BorelAlgebra& B_;
  DiagonalContext ctx_;
  StarEngine<DiagonalContext> engine_;
};

// Untwisted B~^i (tau = id in the pairing).
class UntwistedIHopf {
 public:
  explicit UntwistedIHopf(BorelAlgebra& B) : ctx_(B, false), engine_(ctx_) {}
  BorelElem star(const BorelElem& a, const BorelElem& b) { return engine_.star(a, b); }

 private:
  BorelStarContext ctx_;
  StarEngine<BorelStarContext> engine_;
};

}  // namespace ihopf
