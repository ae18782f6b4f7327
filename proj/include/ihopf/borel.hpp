// The Borel Hopf algebra B~ (and B^ in hat mode): words in t_i times torus h^mu.
#pragma once

#include <array>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "ihopf/freealg.hpp"

namespace ihopf {

struct NegativeTorusExponent : std::domain_error {
  NegativeTorusExponent() : std::domain_error("negative torus exponent in hat mode") {}
};

// Normal-form monomial w h^mu, torus to the right.
struct BorelMono {
  Word w;
  Weight h;
  bool operator==(const BorelMono& o) const { return w == o.w && h == o.h; }
  bool operator!=(const BorelMono& o) const { return !(*this == o); }
  bool operator<(const BorelMono& o) const { return w == o.w ? h < o.h : w < o.w; }
  std::size_t hash() const { return hash_mix(w.hash(), h.hash()); }
  Weight weight() const { return w.weight(); }
  std::string to_string(int rank, const char* sym = "t", const char* tor = "h") const;
};

template <int N>
struct TensorKey {
  std::array<BorelMono, N> f;
  bool operator==(const TensorKey& o) const { return f == o.f; }
  bool operator<(const TensorKey& o) const { return f < o.f; }
  std::size_t hash() const {
    std::size_t h = 0x51ed27u;
    for (const auto& m : f) h = hash_mix(h, m.hash());
    return h;
  }
};

using BorelElem = Lin<BorelMono>;
template <int N>
using BorelTensor = Lin<TensorKey<N>>;

std::string torus_to_string(const Weight& h, int rank, const char* tor = "h");
std::string format_borel(const BorelElem& x, int rank, const char* sym = "t", const char* tor = "h");
template <int N>
std::string format_tensor(const BorelTensor<N>& x, int rank) {
  if (x.is_zero()) return "0";
  std::string s;
  for (const auto& [k, c] : x.sorted()) {
    if (!s.empty()) s += " + ";
    s += coeff_prefix(c) + "(";
    for (int i = 0; i < N; ++i) s += (i ? " ⊗ " : "") + k.f[static_cast<std::size_t>(i)].to_string(rank);
    s += ")";
  }
  return s;
}

class BorelAlgebra {
 public:
  explicit BorelAlgebra(FreeAlgebra& f, bool hat_mode = false) : f_(f), hat_(hat_mode) {}

  FreeAlgebra& free() { return f_; }
  const CartanData& cartan() const { return f_.cartan(); }
  int rank() const { return f_.rank(); }
  bool hat_mode() const { return hat_; }

  static BorelElem theta(int i) { return BorelElem(BorelMono{Word::letter(i), Weight()}); }
  static BorelElem torus(const Weight& mu) { return BorelElem(BorelMono{Word(), mu}); }
  static BorelElem one() { return torus(Weight()); }

  // Serre-reduce the word parts; checks torus exponents in hat mode
  BorelElem normalize(const BorelElem& x);
  BorelElem mul(const BorelElem& x, const BorelElem& y);
  void mul_mono_into(const BorelMono& a, const BorelMono& b, const Scalar& c, BorelElem& out);

  // r on a basis word with both factors reduced (cached)
  const std::vector<std::tuple<Word, Word, Scalar>>& word_coproduct(const Word& w);
  template <class F>
  void for_each_coproduct(const BorelMono& m, F&& f) {
    for (const auto& [l, r, c] : word_coproduct(m.w)) f(BorelMono{l, r.weight() + m.h}, BorelMono{r, m.h}, c);
  }
  BorelTensor<2> coproduct(const BorelElem& x);
  // Delta^{(N-1)}, N tensor factors
  template <int N>
  BorelTensor<N> coproduct_iter(const BorelElem& x);

  Scalar counit(const BorelElem& x) const;
  BorelElem antipode(const BorelElem& x);
  BorelElem antipode_inv(const BorelElem& x);

  // phi(x, y), or phi(tau x, y) when twisted
  Scalar pairing(const BorelElem& x, const BorelElem& y, bool twisted = false);
  Scalar pairing_mono(const BorelMono& a, const BorelMono& b, bool twisted = false);

  BorelElem tau(const BorelElem& x);
  BorelMono tau_mono(const BorelMono& m) const;

  Scalar chi(const BorelElem& x);
  Scalar chi_mono(const BorelMono& m);
  // chi(h^mu), multiplied out left to right over the factors h_i^{+-1}
  Scalar chi_torus(const Weight& mu) const;

  void check_mode(const Weight& h) const {
    if (hat_ && !h.nonnegative()) throw NegativeTorusExponent();
  }

 private:
  BorelElem antipode_word(const Word& w, bool inverse);

  FreeAlgebra& f_;
  bool hat_;
  std::unordered_map<Word, std::vector<std::tuple<Word, Word, Scalar>>, KeyHash> cop_;
  std::unordered_map<Word, BorelElem, KeyHash> s_cache_, sinv_cache_;
  std::unordered_map<BorelMono, Scalar, KeyHash> chi_cache_;
};

template <int N>
BorelTensor<N> BorelAlgebra::coproduct_iter(const BorelElem& x) {
  static_assert(N >= 1);
  BorelTensor<N> out;
  if constexpr (N == 1) {
    for (const auto& [m, c] : x) out.add(TensorKey<1>{{m}}, c);
  } else {
    for (const auto& [m, c] : x) {
      for_each_coproduct(m, [&](const BorelMono& a, const BorelMono& b, const Scalar& e) {
        for (const auto& [k, c2] : coproduct_iter<N - 1>(BorelElem(a))) {
          TensorKey<N> key;
          for (int i = 0; i < N - 1; ++i) key.f[static_cast<std::size_t>(i)] = k.f[static_cast<std::size_t>(i)];
          key.f[N - 1] = b;
          out.add(key, c * e * c2);
        }
      });
    }
  }
  return out;
}

}  // namespace ihopf
