// Lusztig braid operators on U~, relative braid operators on U~^i, root vectors
// of the three rank-one local types, the truncated quasi K-matrix, and the
// comparison of the two braid actions through B~^i_tau.
#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "ihopf/uqg.hpp"

namespace ihopf {

struct WrongLocalType : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NonReducedWord : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NonUniqueSolution : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InadmissibleParameters : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// ------------------------------------------------------------ Lusztig T on U~

// Prime is T'_{i,e}, DoublePrime is T''_{i,e}.
enum class LusztigVariant { Prime, DoublePrime };

class LusztigBraid {
 public:
  explicit LusztigBraid(UAlgebra& U);
  UAlgebra& algebra() { return U_; }

  // Generator images; e in {+1, -1}. Requires tilde mode.
  UElem image_E(int i, LusztigVariant var, int e, int j);
  UElem image_F(int i, LusztigVariant var, int e, int j);
  // extended monomial-wise as ordered products of generator images;
  // script conjugates by the distinguished rescaling Psi
  UElem apply(int i, LusztigVariant var, int e, const UElem& x, bool script = false);

  // T~_i = T'_{i,1} and T~_i^{-1} = T''_{i,-1}
  UElem T(int i, const UElem& x, bool script = false) { return apply(i, LusztigVariant::Prime, 1, x, script); }
  UElem T_inv(int i, const UElem& x, bool script = false) {
    return apply(i, LusztigVariant::DoublePrime, -1, x, script);
  }
  // T_{i_1} ... T_{i_r}(x) for a reduced word; inverse applies T^{-1}_{i_1} first
  UElem apply_word(const std::vector<int>& word, const UElem& x, bool inverse = false, bool script = false);
  // T~_{r_i} and its inverse
  UElem T_r(int i, const UElem& x, bool script = false);
  UElem T_r_inv(int i, const UElem& x, bool script = false);

 private:
  struct Key {
    int i, var, e, side;
    Word w;
    bool operator==(const Key& o) const { return i == o.i && var == o.var && e == o.e && side == o.side && w == o.w; }
    std::size_t hash() const { return hash_mix(w.hash(), static_cast<std::size_t>(((i * 4 + var) * 4 + e + 1) * 2 + side)); }
  };
  const UElem& word_image(int i, LusztigVariant var, int e, int side, const Word& w);
  UElem apply_plain(int i, LusztigVariant var, int e, const UElem& x);

  UAlgebra& U_;
  std::vector<Scalar> roots_, roots_inv_;
  std::unordered_map<Key, UElem, KeyHash> memo_;
};

// Throws NonReducedWord unless every prefix step sends the next simple root positive.
void check_reduced(const CartanData& cd, const std::vector<int>& word);

// ------------------------------------------------------------ B~^i_tau bridge

// Moves elements between U~^i words, star words and B~^i_tau through Phi^i.
class IStarBridge {
 public:
  IStarBridge(IQuantumBorel& Bi, IQuantumGroup& Ui) : Bi_(Bi), Ui_(Ui) {}
  IQuantumBorel& borel() { return Bi_; }
  IQuantumGroup& iquantum() { return Ui_; }

  // iword -> element of B~^i_tau (inverse of Phi^i, then star evaluation)
  BorelElem to_borel(const IWordElem& x) { return Bi_.eval(Ui_.phi_i(x)); }
  // element of B~^i_tau -> canonical iword
  IWordElem to_iword(const BorelElem& x) { return Ui_.phi_i(Bi_.star_decompose(x)); }
  // canonical representative of an iword
  IWordElem canonical(const IWordElem& x) { return to_iword(to_borel(x)); }
  bool equal(const IWordElem& x, const IWordElem& y) { return to_borel(x - y).is_zero(); }

 private:
  IQuantumBorel& Bi_;
  IQuantumGroup& Ui_;
};

// ------------------------------------------------------------ relative braid

// T'_{i,1} = T_i, T''_{i,-1} = T_i^{-1}, T'_{i,-1} = psi T_i psi, T''_{i,1} = psi T_i^{-1} psi
enum class RelVariant { Prime1, DoublePrimeM1, PrimeM1, DoublePrime1 };

class RelativeBraid {
 public:
  // parity is the idivided parity used in the split-type formulas
  explicit RelativeBraid(IQuantumGroup& Ui, int parity = 0) : Ui_(Ui), parity_(parity) {}
  const CartanData& cartan() const { return Ui_.cartan(); }

  // T_i on the letter B_j, k~_j or k~_j^{-1}
  IWordElem image_B(int i, int j);
  IWordElem image_k(int i, int j, int e = 1);
  // K_alpha = prod K_k^{a_k} with K_k = v^{(a_k, a_{tau k})/2} k~_k
  IWordElem bbK_weight(const Weight& alpha) const;

  // letterwise substitution, products of words (no normal form)
  IWordElem apply(int i, const IWordElem& w);
  IWordElem apply_inverse(int i, const IWordElem& w) { return Ui_.sigma_i(apply(i, Ui_.sigma_i(w))); }
  IWordElem apply_variant(int i, RelVariant var, const IWordElem& w);

 private:
  void check_type(int i) const;
  const IWordElem& letter_image(int i, std::int8_t code);

  IQuantumGroup& Ui_;
  int parity_;
  std::map<std::pair<int, int>, IWordElem> letters_;
};

// ------------------------------------------------------------ root vectors

enum class RootType { Split, C0, Cm1 };

struct RootVectorSpec {
  RootType type = RootType::Split;
  int i = 0, j = 1;
  std::vector<int> params;  // (m) | (m, n) | (a, b, c)
  bool primed = false;
  std::string to_string() const;
};

// Local type of i: Split (tau i = i), C0 (c_{i,tau i} = 0) or Cm1 (c_{i,tau i} = -1).
RootType local_root_type(const CartanData& cd, int i);

// The alternating-sum definition as an element of f (normal form).
// literal_c0_exponent reproduces the printed r_2 (c_{tau i,j} n - 1) exponent.
FreeElem root_vector(FreeAlgebra& f, const RootVectorSpec& rv, bool literal_c0_exponent = false);
// The star-word expansion in B~^i_tau through divided and idivided powers.
// literal reproduces two printed forms: the split Kronecker symbol delta_{r,p} in
// every case (fails once c_ij = -3), and the unprimed torus letters h_i^w, h_{tau i}^u
// in the c_{i,tau i} = -1 case. The split expansion holds for 0 <= m <= 1 - c_ij;
// beyond that f_m vanishes while the generalized binomials do not.
GenWordElem root_vector_expansion(const CartanData& cd, const RootVectorSpec& rv, int parity = 0,
                                  bool literal = false);

// f -> U^+ (theta_i -> E_i) and f -> B~^i_tau (canonical embedding)
UElem to_u_plus(const FreeElem& x);
BorelElem iota(const FreeElem& x);
// inverse of to_u_plus on elements of U^+; throws if x has torus or F parts
FreeElem from_u_plus(const UElem& x);

// ------------------------------------------------------------ quasi K-matrix

struct QuasiK {
  int height = 0;
  std::vector<int> scope;
  std::map<Weight, FreeElem> comp;  // nonzero components, weight 0 included
  UElem as_u() const;
};

// Solves B_i Y = Y B_i^sigma (i in scope) weight by weight up to the given height.
QuasiK quasi_k_solve(UAlgebra& U, const std::vector<int>& scope, int height);
// Components of lhs - rhs whose E-height is at most max_e_height.
UElem truncate_e_height(const UElem& x, int max_e_height);
// B_i Y - Y B_i^sigma restricted to the exactly determined range
UElem quasi_k_residual(UAlgebra& U, const QuasiK& Y, int i);
// x Y - Y x for x = k~_i (the U~^{i0} centrality), exactly determined range
UElem quasi_k_torus_residual(UAlgebra& U, const QuasiK& Y, int i);

}  // namespace ihopf
