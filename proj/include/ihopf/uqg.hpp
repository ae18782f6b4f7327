// The Drinfeld double U~ (and U^) in triangular normal form E * K^mu K'^nu * F,
// the isomorphisms Phi_sharp and Phi^i, the universal iquantum group U~^i as
// words in B_i, k~_i embedded into U~, and the involutions on both sides.
#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "ihopf/ihopf.hpp"

namespace ihopf {

struct UMono {
  Word e;
  Weight k, kp;
  Word f;

  bool operator==(const UMono& o) const { return e == o.e && k == o.k && kp == o.kp && f == o.f; }
  bool operator<(const UMono& o) const;
  std::size_t hash() const { return hash_mix(hash_mix(e.hash(), k.hash()), hash_mix(kp.hash() * 7u, f.hash())); }
  // Z^I degree: wt e - wt f
  Weight degree() const { return e.weight() - f.weight(); }
  std::string to_string(int rank) const;
};

using UElem = Lin<UMono>;
// E[1]E[2]*K[1]^2K'[2]^-1*F[1]
std::string format_u(const UElem& x, int rank);

class UAlgebra {
 public:
  explicit UAlgebra(FreeAlgebra& f, bool hat_mode = false) : f_(f), hat_(hat_mode) {}
  FreeAlgebra& free() { return f_; }
  const CartanData& cartan() const { return f_.cartan(); }
  int rank() const { return f_.rank(); }
  bool hat_mode() const { return hat_; }

  static UElem E(int i) { return UElem(UMono{Word::letter(i), {}, {}, {}}); }
  static UElem F(int i) { return UElem(UMono{{}, {}, {}, Word::letter(i)}); }
  static UElem K(const Weight& mu) { return UElem(UMono{{}, mu, {}, {}}); }
  static UElem Kp(const Weight& nu) { return UElem(UMono{{}, {}, nu, {}}); }
  static UElem one() { return UElem(UMono{}); }
  UElem E_word(const Word& w);
  UElem F_word(const Word& w);
  // E_i^r / [r]_{v_i}!
  UElem E_divided(int i, int r);
  UElem F_divided(int i, int r);

  // reduces E and F words to the Serre basis
  UElem normalize(const UElem& x);
  UElem mul(const UElem& x, const UElem& y);
  void mul_mono_into(const UMono& a, const UMono& b, const Scalar& c, UElem& out);
  UElem commutator(const UElem& x, const UElem& y) { return mul(x, y) - mul(y, x); }

  // anti-involution fixing E_i, F_i, K_i, K_i' and inverting v^{1/2}
  UElem bar(const UElem& x);
  // anti-involution fixing E_i, F_i and swapping K_i, K_i'
  UElem sigma(const UElem& x);
  // K_i, K_i', E_i scale by s_i; F_i fixed
  UElem psi_rescale(const UElem& x, const std::vector<Scalar>& s) const;
  // square roots s_i = v^{-(a_i, a_{tau i})/2} of the distinguished parameter
  std::vector<Scalar> distinguished_roots() const;

  // Defining relations of U~ as formal sums of products of generators, so that
  // they can be evaluated in any algebra receiving the generators.
  struct Relation {
    std::string name;
    std::vector<std::pair<Scalar, std::vector<UElem>>> terms;
  };
  std::vector<Relation> defining_relations() const;
  UElem evaluate(const Relation& r);

  void check_mode(const Weight& h) const {
    if (hat_ && !h.nonnegative()) throw NegativeTorusExponent();
  }

 private:
  // F-word f times E-word e, straightened; words on output are reduced.
  const UElem& straighten(const Word& f, const Word& e);
  void add_reduced(const Word& e, const Weight& k, const Weight& kp, const Word& f, const Scalar& c, UElem& out);
  UElem reversed_product(const UMono& m, bool swap_torus);

  FreeAlgebra& f_;
  bool hat_;
  std::unordered_map<WordPair, UElem, KeyHash> straighten_;
};

// Phi_sharp: U~ -> (B~ (x) B~)^i, E_i -> t_i (x) 1, F_i -> 1 (x) t_i, K_i -> h_i (x) 1, K_i' -> 1 (x) h_i.
class DoubleRealization {
 public:
  DoubleRealization(UAlgebra& U, DiagonalIHopf& D) : U_(U), D_(D) {}
  TensorElem forward(const UElem& x);
  const TensorElem& forward_mono(const UMono& m);
  // triangular elimination, highest total height first
  UElem inverse(const TensorElem& y);

 private:
  UAlgebra& U_;
  DiagonalIHopf& D_;
  std::unordered_map<UMono, TensorElem, KeyHash> memo_;
};

// Words in B_i, k~_i^{+-1} (GenWord Gen / Tor / TorInv letters).
using IWordElem = GenWordElem;
std::string format_iword(const IWordElem& x);

// gen_i^m / [m]_{v_i}! as a formal word combination; zero for m < 0
GenWordElem divided_word(const CartanData& cd, int i, int m);
// idivided power for tau i = i with torus letter tor_i, parity p in {0 = even, 1 = odd};
// read as B_{i,p}^{(m)} in U~^i and as theta_{i,p}^{(m)} in B~^i_tau. Zero for m < 0.
GenWordElem idivided_word(const CartanData& cd, int i, int m, int parity);

class IQuantumGroup {
 public:
  explicit IQuantumGroup(UAlgebra& U) : U_(U) {}
  UAlgebra& algebra() { return U_; }
  const CartanData& cartan() const { return U_.cartan(); }

  static IWordElem B(int i) { return IWordElem(GenWord::gen(i)); }
  static IWordElem k(int i, int e = 1) { return IWordElem(GenWord::tor(i, e)); }
  // K_i = v^{(a_i, a_{tau i})/2} k~_i
  IWordElem bbK(int i) const;
  // B_i^m / [m]_{v_i}!
  IWordElem divided(int i, int m) const;
  // idivided power B_{i,p}^{(m)} for tau i = i, parity p in {0 = even, 1 = odd}
  IWordElem idivided(int i, int m, int parity) const;

  // B_i -> F_i + E_{tau i} K_i', k~_i -> K_i K'_{tau i}
  UElem embed(const IWordElem& x);
  const UElem& embed_word(const GenWord& w);
  bool equal(const IWordElem& x, const IWordElem& y) { return embed(x - y).is_zero(); }

  // Phi^i on star-words: t_i -> B_i, h_i -> k~_{tau i}
  IWordElem phi_i(const GenWordElem& star_words) const;

  IWordElem sigma_i(const IWordElem& x) const;
  IWordElem bar_i(const IWordElem& x) const;
  IWordElem psi_i(const IWordElem& x) const;

  // Serre-type relations as "lhs - rhs"; an empty result means the family does
  // not apply to the given indices.
  IWordElem relation1_kk(int i, int l) const;
  IWordElem relation1_kb(int i, int l) const;
  IWordElem relation2(int i, int j) const;
  IWordElem relation3(int i, int j) const;
  // use_vi selects v_i^{c_{i,tau i}} instead of v^{c_{i,tau i}} in the k~_i term
  IWordElem relation5(int i, bool use_vi) const;
  IWordElem relation6(int i, int j, int parity) const;

 private:
  UAlgebra& U_;
  std::unordered_map<GenWord, UElem, KeyHash> embed_cache_;
};

// Letter-wise transport of a U~ monomial to iwords on the doubled diagram:
// E_i -> B_i, F_i -> B_{i+n}, K_i -> k~_{i+n}, K_i' -> k~_i.
IWordElem doubled_image(const UElem& x, int n);

}  // namespace ihopf
