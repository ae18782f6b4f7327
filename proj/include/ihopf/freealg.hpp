// The free algebra 'f on generators t_i, its Serre quotient f with per-weight
// normal forms, Lusztig's twisted coproduct r, the pairing, skew derivations and ad.
#pragma once

#include <array>
#include <initializer_list>
#include <memory>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "ihopf/cartan.hpp"
#include "ihopf/lin.hpp"

namespace ihopf {

constexpr int kMaxWord = 23;

struct TruncationExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Word in the letters 0..rank-1.
struct Word {
  std::uint8_t n = 0;
  std::array<std::uint8_t, kMaxWord> a{};

  Word() = default;
  Word(std::initializer_list<int> letters) {
    for (int x : letters) push_back(x);
  }
  static Word letter(int i) { return Word{i}; }
  static Word power(int i, int m) {
    Word w;
    for (int k = 0; k < m; ++k) w.push_back(i);
    return w;
  }

  int size() const { return n; }
  bool empty() const { return n == 0; }
  int operator[](int p) const { return a[static_cast<std::size_t>(p)]; }
  void push_back(int x) {
    if (n >= kMaxWord) throw TruncationExceeded("word longer than " + std::to_string(kMaxWord));
    a[n++] = static_cast<std::uint8_t>(x);
  }
  Word operator+(const Word& o) const {
    Word r = *this;
    for (int p = 0; p < o.n; ++p) r.push_back(o[p]);
    return r;
  }
  Word erased(int pos) const {
    Word r;
    for (int p = 0; p < n; ++p)
      if (p != pos) r.a[r.n++] = a[static_cast<std::size_t>(p)];
    return r;
  }
  Word sub(int b, int e) const {
    Word r;
    for (int p = b; p < e; ++p) r.a[r.n++] = a[static_cast<std::size_t>(p)];
    return r;
  }
  Word mapped(const std::vector<int>& perm) const {
    Word r = *this;
    for (int p = 0; p < n; ++p) r.a[static_cast<std::size_t>(p)] = static_cast<std::uint8_t>(perm[a[static_cast<std::size_t>(p)]]);
    return r;
  }
  Weight weight() const {
    Weight w;
    for (int p = 0; p < n; ++p) ++w[a[static_cast<std::size_t>(p)]];
    return w;
  }
  bool operator==(const Word& o) const {
    if (n != o.n) return false;
    for (int p = 0; p < n; ++p)
      if (a[static_cast<std::size_t>(p)] != o.a[static_cast<std::size_t>(p)]) return false;
    return true;
  }
  bool operator!=(const Word& o) const { return !(*this == o); }
  // shorter first, then lexicographic
  bool operator<(const Word& o) const {
    if (n != o.n) return n < o.n;
    for (int p = 0; p < n; ++p)
      if (a[static_cast<std::size_t>(p)] != o.a[static_cast<std::size_t>(p)]) return a[static_cast<std::size_t>(p)] < o.a[static_cast<std::size_t>(p)];
    return false;
  }
  std::size_t hash() const {
    std::uint64_t h = 0x84222325cbf29ce4ull ^ n;
    for (int p = 0; p < n; ++p) h = (h ^ a[static_cast<std::size_t>(p)]) * 0x100000001b3ull;
    return static_cast<std::size_t>(h);
  }
  // t[1]t[2] with 1-based indices; "1" for the empty word
  std::string to_string(const char* sym = "t") const;
};

struct WordPair {
  Word a, b;
  bool operator==(const WordPair& o) const { return a == o.a && b == o.b; }
  bool operator<(const WordPair& o) const { return a == o.a ? b < o.b : a < o.a; }
  std::size_t hash() const { return hash_mix(a.hash(), b.hash()); }
};

using FreeElem = Lin<Word>;
using FreeTensor = Lin<WordPair>;

enum class Side { L, R };

std::string format_free(const FreeElem& x, const char* sym = "t");

class FreeAlgebra {
 public:
  explicit FreeAlgebra(CartanData cd, int truncation = 8);

  const CartanData& cartan() const { return cd_; }
  int truncation() const { return trunc_; }
  int rank() const { return cd_.rank(); }

  static FreeElem gen(int i) { return FreeElem(Word::letter(i)); }
  // concatenation product of 'f
  static FreeElem multiply_free(const FreeElem& x, const FreeElem& y);
  // product in f, normal form
  FreeElem mul(const FreeElem& x, const FreeElem& y);
  FreeElem reduce(const FreeElem& x);
  void reduce_word_into(const Word& w, const Scalar& c, FreeElem& out);
  const std::vector<Word>& basis(const Weight& mu);
  int dim(const Weight& mu) { return static_cast<int>(basis(mu).size()); }
  bool is_standard(const Word& w);

  FreeElem serre_element(int i, int j) const;

  // r on a single word of 'f, factors unreduced
  std::vector<std::tuple<Word, Word, Scalar>> coproduct_word(const Word& w) const;
  // r on f, both factors in normal form
  FreeTensor coproduct(const FreeElem& x);

  Scalar pairing(const FreeElem& x, const FreeElem& y);
  Scalar pairing_words(const Word& x, const Word& y);

  // skew derivations on a word of 'f (unreduced) and on f (reduced)
  FreeElem derivative_word(Side side, int i, const Word& w) const;
  FreeElem derivative(Side side, int i, const FreeElem& x);

  // ad(t_i)^power (x), and ad(t_i^{(m)}) = ad(t_i)^m / [m]_i!
  FreeElem ad(int i, int power, const FreeElem& x);
  FreeElem ad_divided(int i, int m, const FreeElem& x);
  FreeElem divided_power(int i, int m);

  Scalar vi_minus(int i) const { return Scalar::v_pow(cd_.d(i)) - Scalar::v_pow(-cd_.d(i)); }

 private:
  struct Component {
    std::vector<Word> words;
    std::unordered_map<Word, int, KeyHash> index;
    std::vector<Word> basis;
    std::vector<int> basis_col;  // column of each basis word
    std::vector<int> basis_of_col;  // -1 for non-standard
    std::vector<SparseRow> red;  // expansion of each word in basis indices
  };
  const Component& component(const Weight& mu);
  void check_height(const Weight& mu) const;

  CartanData cd_;
  int trunc_;
  std::unordered_map<Weight, std::unique_ptr<Component>, KeyHash> comps_;
  std::unordered_map<WordPair, Scalar, KeyHash> pair_memo_;
};

}  // namespace ihopf
