#include "ihopf/expr.hpp"

#include <cctype>
#include <functional>
#include <optional>
#include <set>

#include "ihopf/uqg.hpp"

namespace ihopf {

namespace {

// Recursive-descent parser over an algebra adapter A providing
//   Elem, one(), scalar(c), add(a, b, sign), mul(a, b), gen(name, i, e), as_scalar(x)
template <class A>
class Parser {
 public:
  using Elem = typename A::Elem;
  Parser(const std::string& s, A& alg, int rank) : s_(s), a_(alg), rank_(rank) {}

  Elem parse() {
    Elem r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("parse error at column " + std::to_string(pos_ + 1) + ": " + what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool eat(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  int integer() {
    skip();
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    skip();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected an integer");
    long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_++] - '0');
      if (v > 1000000) fail("integer too large");
    }
    return static_cast<int>(neg ? -v : v);
  }

  Elem expr() {
    Elem r;
    bool first = true;
    for (;;) {
      int sign = 1;
      if (eat('-')) sign = -1;
      else if (!eat('+') && !first) break;
      r = a_.add(r, term(), sign);
      first = false;
    }
    return r;
  }

  bool starts_factor() {
    skip();
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    return c == '(' || std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c));
  }

  Elem term() {
    Elem r = factor();
    for (;;) {
      if (eat('*')) {
        r = a_.mul(r, factor());
      } else if (eat('/')) {
        const Elem d = factor();
        const auto c = a_.as_scalar(d);
        if (!c) fail("division by a non-scalar");
        if (c->is_zero()) fail("division by zero");
        r = a_.mul(r, a_.scalar(c->inv()));
      } else if (starts_factor()) {
        r = a_.mul(r, factor());
      } else {
        break;
      }
    }
    return r;
  }

  Elem factor() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Elem inner = expr();
      if (!eat(')')) fail("expected ')'");
      return power(inner);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t b = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return power(a_.scalar(Scalar(Rational::parse(s_.substr(b, pos_ - b)))));
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) fail("unexpected '" + std::string(1, c) + "'");
    std::string name(1, c);
    ++pos_;
    if (pos_ < s_.size() && s_[pos_] == '\'') {
      name += '\'';
      ++pos_;
    }
    if (!peek('[')) {
      if (name == "u" || name == "q" || name == "v") {
        const int unit = name == "u" ? 1 : name == "q" ? 2 : 4;
        int e = 1;
        if (eat('^')) e = integer();
        return a_.scalar(Scalar::u_pow(unit * e));
      }
      fail("unknown symbol '" + name + "'");
    }
    eat('[');
    const int idx = integer();
    if (!eat(']')) fail("expected ']'");
    if (idx < 1 || idx > rank_) fail("index " + std::to_string(idx) + " out of range 1.." + std::to_string(rank_));
    int e = 1;
    if (eat('^')) e = integer();
    std::optional<Elem> g = a_.gen(name, idx - 1, e);
    if (!g) fail("generator '" + name + "' not available here or negative power of a non-torus generator");
    return *g;
  }

  Elem power(const Elem& x) {
    if (!eat('^')) return x;
    const int e = integer();
    if (e < 0) {
      const auto c = a_.as_scalar(x);
      if (!c || c->is_zero()) fail("negative power of a non-scalar");
      return a_.scalar(c->pow(e));
    }
    Elem r = a_.one();
    for (int k = 0; k < e; ++k) r = a_.mul(r, x);
    return r;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
  A& a_;
  int rank_;
};

template <class E, class K>
std::optional<Scalar> scalar_of(const E& x, const K& unit_key) {
  if (x.is_zero()) return Scalar();
  if (x.size() != 1 || !(x.begin()->first == unit_key)) return std::nullopt;
  return x.begin()->second;
}

template <class E>
E add_signed(const E& a, const E& b, int sign) {
  return sign > 0 ? a + b : a - b;
}

template <class E, class M>
E repeat(const E& g, int e, M&& mul, const E& one) {
  E r = one;
  for (int k = 0; k < e; ++k) r = mul(r, g);
  return r;
}

struct FreeAdapter {
  using Elem = FreeElem;
  FreeAlgebra& f;
  Elem one() const { return FreeElem(Word()); }
  Elem scalar(const Scalar& c) const { return FreeElem(Word(), c); }
  Elem add(const Elem& a, const Elem& b, int s) const { return add_signed(a, b, s); }
  Elem mul(const Elem& a, const Elem& b) { return f.mul(a, b); }
  std::optional<Scalar> as_scalar(const Elem& x) const { return scalar_of(x, Word()); }
  std::optional<Elem> gen(const std::string& name, int i, int e) {
    if (name != "t" || e < 0) return std::nullopt;
    return repeat(FreeAlgebra::gen(i), e, [&](const Elem& a, const Elem& b) { return mul(a, b); }, one());
  }
};

// ordinary (twisted = false) or star product (twisted = true) on B~
struct BorelAdapter {
  using Elem = BorelElem;
  BorelAlgebra& B;
  IQuantumBorel* star = nullptr;
  Elem one() const { return BorelAlgebra::one(); }
  Elem scalar(const Scalar& c) const { return BorelAlgebra::one().scaled(c); }
  Elem add(const Elem& a, const Elem& b, int s) const { return add_signed(a, b, s); }
  Elem mul(const Elem& a, const Elem& b) { return star ? star->star(a, b) : B.mul(a, b); }
  std::optional<Scalar> as_scalar(const Elem& x) const { return scalar_of(x, BorelMono{}); }
  std::optional<Elem> gen(const std::string& name, int i, int e) {
    auto m = [&](const Elem& a, const Elem& b) { return mul(a, b); };
    if (name == "t") {
      if (e < 0) return std::nullopt;
      return repeat(BorelAlgebra::theta(i), e, m, one());
    }
    if (name != "h") return std::nullopt;
    if (e >= 0) return repeat(BorelAlgebra::torus(Weight::unit(i)), e, m, one());
    // inverse with respect to the product in use
    Elem inv = star ? star->star_torus_inv(one(), i) : BorelAlgebra::torus(-Weight::unit(i));
    return repeat(inv, -e, m, one());
  }
};

struct UAdapter {
  using Elem = UElem;
  UAlgebra& U;
  Elem one() const { return UAlgebra::one(); }
  Elem scalar(const Scalar& c) const { return UAlgebra::one().scaled(c); }
  Elem add(const Elem& a, const Elem& b, int s) const { return add_signed(a, b, s); }
  Elem mul(const Elem& a, const Elem& b) { return U.mul(a, b); }
  std::optional<Scalar> as_scalar(const Elem& x) const { return scalar_of(x, UMono{}); }
  std::optional<Elem> gen(const std::string& name, int i, int e) {
    if (name == "K") return UAlgebra::K(Weight::unit(i, e));
    if (name == "K'") return UAlgebra::Kp(Weight::unit(i, e));
    if (e < 0) return std::nullopt;
    auto m = [&](const Elem& a, const Elem& b) { return mul(a, b); };
    if (name == "E") return repeat(UAlgebra::E(i), e, m, one());
    if (name == "F") return repeat(UAlgebra::F(i), e, m, one());
    return std::nullopt;
  }
};

struct IWordAdapter {
  using Elem = IWordElem;
  Elem one() const { return IWordElem(GenWord{}); }
  Elem scalar(const Scalar& c) const { return IWordElem(GenWord{}, c); }
  Elem add(const Elem& a, const Elem& b, int s) const { return add_signed(a, b, s); }
  Elem mul(const Elem& a, const Elem& b) const { return word_product(a, b); }
  std::optional<Scalar> as_scalar(const Elem& x) const { return scalar_of(x, GenWord{}); }
  std::optional<Elem> gen(const std::string& name, int i, int e) const {
    if (name == "k") return IQuantumGroup::k(i, e);
    if (name != "B" || e < 0) return std::nullopt;
    return repeat(IQuantumGroup::B(i), e, [&](const Elem& a, const Elem& b) { return mul(a, b); }, one());
  }
};

template <class E, class G>
std::vector<std::string> gradings(const E& x, G&& grade) {
  std::set<std::string> s;
  for (const auto& [m, c] : x.sorted()) s.insert(grade(m));
  return {s.begin(), s.end()};
}

}  // namespace

const std::vector<std::string>& eval_contexts() {
  static const std::vector<std::string> c = {"f", "borel", "star", "u", "iword"};
  return c;
}

EvalResult eval_expression(const std::string& expr, const std::string& context, const CartanData& cd, int truncation) {
  const int n = cd.rank();
  FreeAlgebra f(cd, truncation);
  EvalResult out;
  if (context == "f") {
    FreeAdapter a{f};
    const FreeElem x = Parser<FreeAdapter>(expr, a, n).parse();
    out.normal_form = format_free(x);
    out.gradings = gradings(x, [&](const Word& w) { return w.weight().to_string(n); });
    return out;
  }
  if (context == "borel" || context == "star") {
    BorelAlgebra B(f);
    IQuantumBorel Bi(B);
    BorelAdapter a{B, context == "star" ? &Bi : nullptr};
    const BorelElem x = Parser<BorelAdapter>(expr, a, n).parse();
    out.normal_form = format_borel(x, n);
    out.gradings = gradings(x, [&](const BorelMono& m) { return m.weight().to_string(n); });
    return out;
  }
  if (context == "u") {
    UAlgebra U(f);
    UAdapter a{U};
    const UElem x = Parser<UAdapter>(expr, a, n).parse();
    out.normal_form = format_u(x, n);
    out.gradings = gradings(x, [&](const UMono& m) { return m.degree().to_string(n); });
    return out;
  }
  if (context == "iword") {
    IWordAdapter a;
    const IWordElem x = Parser<IWordAdapter>(expr, a, n).parse();
    UAlgebra U(f);
    IQuantumGroup Ui(U);
    out.normal_form = format_iword(x);
    out.gradings = gradings(x, [&](const GenWord& w) { return w.gen_weight().to_string(n); });
    out.embedding = format_u(Ui.embed(x), n);
    return out;
  }
  throw ParseError("unknown context '" + context + "' (expected f, borel, star, u or iword)");
}

}  // namespace ihopf
