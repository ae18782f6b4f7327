#include <doctest.h>

#include "helpers.hpp"
#include "ihopf/ihopf.hpp"

using namespace ihopf;
using namespace testutil;

namespace {

Scalar v(int k) { return Scalar::v_pow(k); }

BorelElem random_borel(std::mt19937_64& rng, BorelAlgebra& B, int height, int terms = 2) {
  std::uniform_int_distribution<int> tor(-1, 1);
  BorelElem x;
  for (int t = 0; t < terms; ++t) {
    Weight h;
    for (int i = 0; i < B.rank(); ++i) h[i] = static_cast<std::int16_t>(tor(rng));
    x.add(BorelMono{random_word(rng, B.rank(), height), h}, small_coeff(rng));
  }
  return B.normalize(x);
}

TensorElem random_tensor(std::mt19937_64& rng, BorelAlgebra& B, int height) {
  std::uniform_int_distribution<int> split(0, height);
  const int a = split(rng);
  return tensor(random_borel(rng, B, a, 1), random_borel(rng, B, height - a, 1)) +
         tensor(random_borel(rng, B, height - a, 1), random_borel(rng, B, a, 1));
}

BorelMono mono(Word w, Weight h = {}) { return BorelMono{w, h}; }
TensorElem tens(BorelMono a, BorelMono b, Scalar c = 1) { return TensorElem(TensorMono{{a, b}}, c); }

}  // namespace

TEST_CASE("star product in B~^i_tau: unit and generator values") {
  CartanData cd = preset("A2tau");
  FreeAlgebra f(cd);
  BorelAlgebra B(f);
  IQuantumBorel Bi(B);
  std::mt19937_64 rng(1);
  BorelElem x = random_borel(rng, B, 3);
  CHECK(Bi.star_generic(x, BorelAlgebra::one()) == x);
  CHECK(Bi.star_generic(BorelAlgebra::one(), x) == x);
  for (int i = 0; i < 2; ++i) {
    const int ti = cd.tau(i);
    BorelElem expect = BorelElem(mono(Word{i, ti})) + BorelElem(mono(Word{}, Weight::unit(ti)), f.vi_minus(i));
    CHECK(Bi.star_generic(BorelAlgebra::theta(i), BorelAlgebra::theta(ti)) == expect);
    // t_i * t_i has no correction when tau i != i
    CHECK(Bi.star_generic(BorelAlgebra::theta(i), BorelAlgebra::theta(i)) == BorelElem(mono(Word{i, i})));
    for (int j = 0; j < 2; ++j)
      CHECK(Bi.star_generic(BorelAlgebra::torus(Weight::unit(i)), BorelAlgebra::torus(Weight::unit(j))) ==
            BorelAlgebra::torus(Weight::unit(i) + Weight::unit(j)).scaled(v(cd.form(cd.tau(Weight::unit(j)), Weight::unit(i)))));
  }
  // split A2: t_1 * t_1 = t_1^2 + (v - v^{-1}) h_1
  CartanData sp = preset("A2");
  FreeAlgebra fs(sp);
  BorelAlgebra Bs(fs);
  IQuantumBorel Bis(Bs);
  CHECK(Bis.star(BorelAlgebra::theta(0), BorelAlgebra::theta(0)) ==
        BorelElem(mono(Word{0, 0})) + BorelElem(mono(Word{}, Weight::unit(0)), fs.vi_minus(0)));
  CHECK(Bis.star(BorelAlgebra::theta(0), BorelAlgebra::theta(1)) == BorelElem(mono(Word{0, 1})));
}

TEST_CASE("generator star formulas agree with the generic star") {
  for (const char* name : {"AIII3", "B2", "A2tau"}) {
    CAPTURE(std::string(name));
    CartanData cd = preset(name);
    FreeAlgebra f(cd);
    BorelAlgebra B(f);
    IQuantumBorel Bi(B);
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<int> pick(0, cd.rank() - 1), hgt(0, 5);
    for (int k = 0; k < 70; ++k) {
      const int i = pick(rng);
      BorelElem x = random_borel(rng, B, hgt(rng), 1);
      CHECK(Bi.theta_star(i, x) == Bi.star_generic(BorelAlgebra::theta(i), x));
      CHECK(Bi.star_theta(x, i) == Bi.star_generic(x, BorelAlgebra::theta(i)));
      Weight lam = Weight::unit(i) - Weight::unit(pick(rng));
      CHECK(Bi.torus_star(lam, x) == Bi.star_generic(BorelAlgebra::torus(lam), x));
      CHECK(Bi.star_torus(x, lam) == Bi.star_generic(x, BorelAlgebra::torus(lam)));
    }
  }
}

TEST_CASE("star associativity and opposite product") {
  for (const char* name : {"A2", "A2tau", "B2"}) {
    CAPTURE(std::string(name));
    CartanData cd = preset(name);
    FreeAlgebra f(cd);
    BorelAlgebra B(f);
    IQuantumBorel Bi(B);
    UntwistedIHopf U(B);
    std::mt19937_64 rng(3);
    for (int k = 0; k < 6; ++k) {
      BorelElem a = random_borel(rng, B, 1), b = random_borel(rng, B, 2), c = random_borel(rng, B, 1);
      CHECK(Bi.star_generic(Bi.star_generic(a, b), c) == Bi.star_generic(a, Bi.star_generic(b, c)));
      CHECK(Bi.star_opposite(a, b) == Bi.star_generic(b, a));
      CHECK(U.star(U.star(a, b), c) == U.star(a, U.star(b, c)));
      // tau is multiplicative for the untwisted star
      CHECK(B.tau(U.star(a, b)) == U.star(B.tau(a), B.tau(b)));
    }
    for (int i = 0; i < cd.rank(); ++i)
      CHECK(Bi.star_opposite(BorelAlgebra::theta(i), BorelAlgebra::theta(cd.tau(i))) ==
            Bi.star_generic(BorelAlgebra::theta(cd.tau(i)), BorelAlgebra::theta(i)));
  }
}

TEST_CASE("star decomposition round trip") {
  for (const char* name : {"A2tau", "AIII3", "G2"}) {
    CAPTURE(std::string(name));
    CartanData cd = preset(name);
    FreeAlgebra f(cd);
    BorelAlgebra B(f);
    IQuantumBorel Bi(B);
    CHECK(Bi.star_decompose(BorelAlgebra::theta(0)) == GenWordElem(GenWord::gen(0)));
    const int t0 = cd.tau(0);
    GenWordElem expect = GenWordElem(GenWord::gen(0) + GenWord::gen(t0)) - GenWordElem(GenWord::tor(t0), f.vi_minus(0));
    // only meaningful when t_1 t_{tau 1} is a standard word
    if (f.is_standard(Word{0, t0})) CHECK(Bi.star_decompose(BorelElem(mono(Word{0, t0}))) == expect);
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<int> hgt(0, 5);
    for (int k = 0; k < 30; ++k) {
      BorelElem x = random_borel(rng, B, hgt(rng), 2);
      CHECK(Bi.eval(Bi.star_decompose(x)) == x);
    }
  }
}

TEST_CASE("diagonal type: star values") {
  CartanData cd = preset("A2");
  FreeAlgebra f(cd);
  BorelAlgebra B(f);
  DiagonalIHopf D(B);
  CHECK(D.star(tens(mono(Word{0}), mono(Word{})), tens(mono(Word{}), mono(Word{1})))  == tens(mono(Word{0}), mono(Word{1})));
  CHECK(D.star(tens(mono(Word{0}), mono(Word{})), tens(mono(Word{}), mono(Word{0}))) ==
        tens(mono(Word{0}), mono(Word{0})) + tens(mono(Word{}), mono(Word{}, Weight::unit(0)), f.vi_minus(0)));
  Weight mu = Weight::unit(0) - Weight::unit(1) * 2, nu = Weight::unit(1);
  CHECK(D.star(tens(mono(Word{}, mu), mono(Word{})), tens(mono(Word{}), mono(Word{}, nu))) ==
        tens(mono(Word{}, mu), mono(Word{}, nu), v(cd.form(mu, nu))));
  CHECK(format_tensor_elem(tens(mono(Word{0}), mono(Word{}, nu)), 2) == "(t[1] || h[2])");
}

TEST_CASE("diagonal type: Hopf structure") {
  CartanData cd = preset("A2");
  FreeAlgebra f(cd);
  BorelAlgebra B(f);
  DiagonalIHopf D(B);
  CHECK(D.counit(tens(mono(Word{}), mono(Word{}))) == Scalar(1));
  CHECK(D.counit(tens(mono(Word{0}), mono(Word{}))).is_zero());
  const Weight h0 = Weight::unit(0), h1 = Weight::unit(1);
  Tensor4 expect(Tensor4::Map::key_type{{mono(Word{}, h0), mono(Word{}, h1), mono(Word{}, h0), mono(Word{}, h1)}}, v(cd.form(0, 1)));
  CHECK(D.delta(tens(mono(Word{}, h0), mono(Word{}, h1))) == expect);
  std::mt19937_64 rng(5);
  for (int k = 0; k < 4; ++k) {
    TensorElem x = random_tensor(rng, B, 2), y = random_tensor(rng, B, 1);
    CHECK(D.delta(D.star(x, y)) == D.star4(D.delta(x), D.delta(y)));
    // counit
    TensorElem l, r;
    for (const auto& [kk, c] : D.delta(x)) {
      l.add(TensorMono{{kk.f[2], kk.f[3]}}, c * D.counit(TensorElem(TensorMono{{kk.f[0], kk.f[1]}})));
      r.add(TensorMono{{kk.f[0], kk.f[1]}}, c * D.counit(TensorElem(TensorMono{{kk.f[2], kk.f[3]}})));
    }
    CHECK(l == x);
    CHECK(r == x);
    // antipode
    TensorElem s;
    for (const auto& [kk, c] : D.delta(x))
      s += D.star(D.antipode(TensorElem(TensorMono{{kk.f[0], kk.f[1]}})), TensorElem(TensorMono{{kk.f[2], kk.f[3]}})).scaled(c);
    CHECK(s == tens(mono(Word{}), mono(Word{}), D.counit(x)));
  }
}

TEST_CASE("xi and Psi") {
  for (const char* name : {"A2tau", "AIII3", "A2"}) {
    CAPTURE(std::string(name));
    CartanData cd = preset(name);
    FreeAlgebra f(cd);
    BorelAlgebra B(f);
    DiagonalIHopf D(B);
    IQuantumBorel Bi(B);
    CHECK(D.xi(BorelAlgebra::one()) == tens(mono(Word{}), mono(Word{})));
    for (int i = 0; i < cd.rank(); ++i) {
      const int ti = cd.tau(i);
      TensorElem rhs = tens(mono(Word{}), mono(Word{i})) +
                       D.star(tens(mono(Word{ti}), mono(Word{})), tens(mono(Word{}), mono(Word{}, Weight::unit(i))));
      CHECK(D.xi(BorelAlgebra::theta(i)) == rhs);
      CHECK(D.xi(BorelAlgebra::torus(Weight::unit(i))) ==
            D.star(tens(mono(Word{}, Weight::unit(ti)), mono(Word{})), tens(mono(Word{}), mono(Word{}, Weight::unit(i)))));
      Tensor3 pe(Tensor3::Map::key_type{{mono(Word{}, Weight::unit(i)), mono(Word{}, Weight::unit(ti)), mono(Word{}, Weight::unit(i))}},
                 v(cd.form(ti, i)));
      CHECK(D.psi(BorelAlgebra::torus(Weight::unit(i))) == pe);
    }
    CHECK(D.psi(BorelAlgebra::one()) == Tensor3(Tensor3::Map::key_type{{mono(Word{}), mono(Word{}), mono(Word{})}}));
    std::mt19937_64 rng(6);
    for (int k = 0; k < 4; ++k) {
      BorelElem a = random_borel(rng, B, 1, 1), b = random_borel(rng, B, 2, 1);
      CHECK(D.xi(Bi.star_generic(a, b)) == D.star(D.xi(a), D.xi(b)));
      // (xi (x) 1 (x) 1) Psi = Delta^i xi
      Tensor4 lhs;
      for (const auto& [kk, c] : D.psi(b))
        for (const auto& [xk, xc] : D.xi(BorelElem(kk.f[0]))) lhs.add(Tensor4::Map::key_type{{xk.f[0], xk.f[1], kk.f[1], kk.f[2]}}, c * xc);
      CHECK(lhs == D.delta(D.xi(b)));
    }
  }
}
