#include <doctest.h>

#include "helpers.hpp"

using namespace ihopf;
using namespace testutil;

namespace {

Scalar v(int k) { return Scalar::v_pow(k); }

// independent oracle: phi(xy, z) = sum phi(x, z1) phi(y, z2), splitting x at its middle
Scalar pairing_oracle(FreeAlgebra& f, const Word& x, const Word& y) {
  if (x.size() != y.size() || x.weight() != y.weight()) return Scalar();
  if (x.empty()) return Scalar(1);
  if (x.size() == 1) return x == y ? f.vi_minus(x[0]) : Scalar();
  const int mid = x.size() / 2;
  Word x1 = x.sub(0, mid), x2 = x.sub(mid, x.size());
  Scalar acc;
  for (const auto& [l, r, c] : f.coproduct_word(y)) {
    if (l.weight() != x1.weight()) continue;
    acc += c * pairing_oracle(f, x1, l) * pairing_oracle(f, x2, r);
  }
  return acc;
}

FreeTensor twisted_product(const CartanData& cd, FreeAlgebra& f, const FreeTensor& a, const FreeTensor& b) {
  FreeTensor out;
  for (const auto& [p, ca] : a)
    for (const auto& [q, cb] : b) {
      Scalar tw = v(cd.form(p.b.weight(), q.a.weight()));
      FreeElem l = f.mul(FreeElem(p.a), FreeElem(q.a));
      FreeElem r = f.mul(FreeElem(p.b), FreeElem(q.b));
      for (const auto& [x, cx] : l)
        for (const auto& [y, cy] : r) out.add(WordPair{x, y}, ca * cb * tw * cx * cy);
    }
  return out;
}

}  // namespace

TEST_CASE("free product is concatenation") {
  FreeElem a = FreeAlgebra::gen(0), b = FreeAlgebra::gen(1);
  CHECK(FreeAlgebra::multiply_free(a, b) == FreeElem(Word{0, 1}));
  FreeElem s = FreeAlgebra::multiply_free(a + b, a);
  CHECK(s == FreeElem(Word{0, 0}) + FreeElem(Word{1, 0}));
  CHECK(format_free(s) == "t[1]t[1] + t[2]t[1]");
}

TEST_CASE("Serre reduction") {
  FreeAlgebra f(preset("A2"));
  FreeElem s = FreeElem(Word{0, 0, 1}) - FreeElem(Word{0, 1, 0}, qint(2)) + FreeElem(Word{1, 0, 0});
  CHECK(f.reduce(s).is_zero());
  CHECK(f.reduce(f.serre_element(1, 0)).is_zero());
  CHECK(f.reduce(FreeAlgebra::gen(0)) == FreeAlgebra::gen(0));
  Weight a12 = Weight::unit(0) + Weight::unit(1);
  CHECK(f.dim(a12) == 2);
  CHECK_THROWS_AS(f.basis(Weight::unit(0, 9)), TruncationExceeded);
}

TEST_CASE("dimensions of f match the Kostant partition function") {
  for (const char* name : {"A2", "A3", "B2", "G2", "A1xA1", "DI4"}) {
    CAPTURE(std::string(name));
    CartanData cd = preset(name);
    FreeAlgebra f(cd, 6);
    auto roots = positive_roots(cd);
    std::mt19937_64 rng(1);
    for (int h = 1; h <= (cd.rank() > 3 ? 4 : 6); ++h)
      for (int k = 0; k < 6; ++k) {
        Weight mu = random_weight(rng, cd.rank(), h);
        CHECK(f.dim(mu) == kostant(roots, 0, mu));
      }
  }
}

TEST_CASE("reduction is a ring congruence") {
  for (const char* name : {"A2", "B2", "G2"}) {
    CAPTURE(std::string(name));
    CartanData cd = preset(name);
    FreeAlgebra f(cd, 7);
    std::mt19937_64 rng(2);
    for (int k = 0; k < 15; ++k) {
      FreeElem x = random_homogeneous(rng, random_weight(rng, 2, 3), 2);
      FreeElem y = random_homogeneous(rng, random_weight(rng, 2, 4), 2);
      FreeElem lhs = f.reduce(FreeAlgebra::multiply_free(x, y));
      CHECK(lhs == f.mul(f.reduce(x), f.reduce(y)));
      CHECK(f.reduce(lhs) == lhs);
    }
  }
}

TEST_CASE("pairing values and oracle") {
  FreeAlgebra f(preset("A2"));
  CHECK(f.pairing_words(Word{0}, Word{0}) == v(1) - v(-1));
  CHECK(f.pairing_words(Word{0}, Word{1}).is_zero());
  CHECK(f.pairing_words(Word{}, Word{}) == Scalar(1));
  Scalar d = v(1) - v(-1);
  CHECK(f.pairing_words(Word{0, 1}, Word{0, 1}) == d * d);
  CHECK(f.pairing_words(Word{0, 1}, Word{1, 0}) == d * d * v(-1));
  for (const char* name : {"A2", "B2", "G2", "A3"}) {
    CAPTURE(std::string(name));
    CartanData cd = preset(name);
    FreeAlgebra g(cd);
    std::mt19937_64 rng(3);
    for (int k = 0; k < 20; ++k) {
      Weight mu = random_weight(rng, cd.rank(), 4);
      FreeElem x = random_homogeneous(rng, mu, cd.rank(), 1), y = random_homogeneous(rng, mu, cd.rank(), 1);
      const Word& a = x.begin()->first;
      const Word& b = y.begin()->first;
      CHECK(g.pairing_words(a, b) == pairing_oracle(g, a, b));
      CHECK(g.pairing_words(a, b) == g.pairing_words(b, a));
    }
  }
}

TEST_CASE("pairing radical is the Serre ideal") {
  for (const char* name : {"A2", "B2", "G2", "A2tau"}) {
    CAPTURE(std::string(name));
    CartanData cd = preset(name);
    FreeAlgebra f(cd);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        if (i == j) continue;
        FreeElem s = f.serre_element(i, j);
        for (int extra = 0; extra < 2; ++extra) {
          Weight mu = s.begin()->first.weight() + Weight::unit(extra);
          FreeElem su = FreeAlgebra::multiply_free(s, FreeAlgebra::gen(extra));
          std::vector<Word> words;
          for (const auto& [w, c] : FreeAlgebra::multiply_free(FreeAlgebra::gen(extra), s)) words.push_back(w);
          for (const auto& w : words) CHECK(f.pairing(su, FreeElem(w)).is_zero());
          // Gram matrix on the standard basis is nondegenerate
          const auto& basis = f.basis(mu);
          Echelon ech;
          for (const auto& a : basis) {
            SparseRow row;
            for (std::size_t k = 0; k < basis.size(); ++k) {
              Scalar p = f.pairing_words(a, basis[k]);
              if (!p.is_zero()) row.emplace_back(static_cast<int>(k), p);
            }
            ech.add(row);
          }
          CHECK(ech.rank() == basis.size());
        }
      }
  }
}

TEST_CASE("coproduct calibration and multiplicativity") {
  CartanData cd = preset("B2");
  FreeAlgebra f(cd);
  FreeTensor r1 = f.coproduct(FreeAlgebra::gen(0));
  CHECK(r1 == FreeTensor(WordPair{Word{0}, Word{}}) + FreeTensor(WordPair{Word{}, Word{0}}));
  CHECK(f.coproduct(FreeElem(Word{})) == FreeTensor(WordPair{Word{}, Word{}}));
  for (int i = 0; i < 2; ++i)
    for (int n = 1; n <= 4; ++n) {
      FreeTensor expect;
      for (int a = 0; a <= n; ++a) {
        const int b = n - a;
        Scalar c = Scalar::v_pow(cd.d(i) * a * b) * qfact(a, cd.d(i)).inv() * qfact(b, cd.d(i)).inv();
        expect.add(WordPair{Word::power(i, a), Word::power(i, b)}, c);
      }
      CHECK(f.coproduct(f.divided_power(i, n)) == expect);
    }
  std::mt19937_64 rng(4);
  for (int k = 0; k < 10; ++k) {
    FreeElem x = f.reduce(random_homogeneous(rng, random_weight(rng, 2, 2), 2));
    FreeElem y = f.reduce(random_homogeneous(rng, random_weight(rng, 2, 3), 2));
    CHECK(f.coproduct(f.mul(x, y)) == twisted_product(cd, f, f.coproduct(x), f.coproduct(y)));
  }
}

TEST_CASE("skew derivations") {
  CartanData cd = preset("A2");
  FreeAlgebra f(cd);
  CHECK(f.derivative(Side::R, 0, FreeElem(Word{})).is_zero());
  CHECK(f.derivative(Side::L, 0, FreeAlgebra::gen(0)) == FreeElem(Word{}));
  CHECK(f.derivative(Side::L, 1, FreeAlgebra::gen(0)).is_zero());
  CHECK(f.derivative(Side::L, 0, FreeElem(Word{1, 0})) == FreeElem(Word{1}));
  CHECK(f.derivative(Side::R, 0, FreeElem(Word{1, 0})) == FreeElem(Word{1}, v(cd.form(0, 1))));
  for (const char* name : {"A2", "G2", "A3"}) {
    CAPTURE(std::string(name));
    CartanData c2 = preset(name);
    FreeAlgebra g(c2);
    std::mt19937_64 rng(5);
    for (int k = 0; k < 10; ++k) {
      Weight mu = random_weight(rng, c2.rank(), 2), nu = random_weight(rng, c2.rank(), 3);
      FreeElem x = g.reduce(random_homogeneous(rng, mu, c2.rank())), y = g.reduce(random_homogeneous(rng, nu, c2.rank()));
      FreeTensor r = g.coproduct(x);
      for (int i = 0; i < c2.rank(); ++i) {
        FreeElem viaR, viaL;
        for (const auto& [p, c] : r) {
          if (p.a == Word::letter(i)) viaR.add(p.b, c);
          if (p.b == Word::letter(i)) viaL.add(p.a, c);
        }
        CHECK(g.derivative(Side::R, i, x) == viaR);
        CHECK(g.derivative(Side::L, i, x) == viaL);
        FreeElem lr = g.mul(g.derivative(Side::R, i, x), y) + g.mul(x, g.derivative(Side::R, i, y)).scaled(v(c2.form_alpha(i, mu)));
        CHECK(g.derivative(Side::R, i, g.mul(x, y)) == lr);
        FreeElem ll = g.mul(g.derivative(Side::L, i, x), y).scaled(v(c2.form_alpha(i, nu))) + g.mul(x, g.derivative(Side::L, i, y));
        CHECK(g.derivative(Side::L, i, g.mul(x, y)) == ll);
      }
    }
  }
}

TEST_CASE("adjoint action") {
  CartanData cd = preset("A2");
  FreeAlgebra f(cd);
  CHECK(f.ad(0, 1, FreeElem(Word{})).is_zero());
  CHECK(f.ad(0, 1, FreeAlgebra::gen(1)) == FreeElem(Word{0, 1}) - FreeElem(Word{1, 0}, v(cd.form(0, 1))));
  // Serre relation: ad(t_i)^{1-c_ij}(t_j) = 0
  for (const char* name : {"A2", "B2", "G2"}) {
    CartanData c2 = preset(name);
    FreeAlgebra g(c2);
    for (int i = 0; i < 2; ++i) CHECK(g.ad(i, 1 - c2.c(i, 1 - i), FreeAlgebra::gen(1 - i)).is_zero());
    for (int i = 0; i < 2; ++i) CHECK_FALSE(g.ad(i, -c2.c(i, 1 - i), FreeAlgebra::gen(1 - i)).is_zero());
  }
}
