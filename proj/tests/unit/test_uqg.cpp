#include <doctest.h>

#include "helpers.hpp"
#include "ihopf/uqg.hpp"

using namespace ihopf;
using namespace testutil;

namespace {

Scalar v(int k) { return Scalar::v_pow(k); }

UElem random_u(std::mt19937_64& rng, UAlgebra& U, int height, int terms = 2) {
  std::uniform_int_distribution<int> tor(-1, 1), split(0, height);
  UElem x;
  for (int t = 0; t < terms; ++t) {
    Weight k, kp;
    for (int i = 0; i < U.rank(); ++i) {
      k[i] = static_cast<std::int16_t>(tor(rng));
      kp[i] = static_cast<std::int16_t>(tor(rng));
    }
    const int a = split(rng);
    x.add(UMono{random_word(rng, U.rank(), a), k, kp, random_word(rng, U.rank(), height - a)}, small_coeff(rng));
  }
  return U.normalize(x);
}

GenWord random_gen_word(std::mt19937_64& rng, int rank, int gens, int tors) {
  std::uniform_int_distribution<int> pick(0, rank - 1), sign(0, 1);
  std::vector<GenWord> letters;
  for (int k = 0; k < gens; ++k) letters.push_back(GenWord::gen(pick(rng)));
  for (int k = 0; k < tors; ++k) letters.push_back(GenWord::tor(pick(rng), sign(rng) ? 1 : -1));
  std::shuffle(letters.begin(), letters.end(), rng);
  GenWord w;
  for (const auto& l : letters) w = w + l;
  return w;
}

TensorElem tens(BorelMono a, BorelMono b, Scalar c = 1) { return TensorElem(TensorMono{{a, b}}, c); }

}  // namespace

TEST_CASE("U~ straightening examples") {
  CartanData cd = preset("A2");
  FreeAlgebra f(cd);
  UAlgebra U(f);
  const Weight a0 = Weight::unit(0);
  UElem expect = UElem(UMono{Word{0}, {}, {}, Word{0}}) - (UAlgebra::K(a0) - UAlgebra::Kp(a0)).scaled(v(-1) - v(1));
  CHECK(U.mul(UAlgebra::F(0), UAlgebra::E(0)) == expect);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      CHECK(U.mul(UAlgebra::K(Weight::unit(i)), UAlgebra::E(j)) ==
            UElem(UMono{Word{j}, Weight::unit(i), {}, {}}, v(cd.d(i) * cd.c(i, j))));
  // the E-Serre element reduces to zero
  UElem serre;
  for (const auto& [w, c] : f.serre_element(0, 1)) serre.add(UMono{w, {}, {}, {}}, c);
  CHECK(U.normalize(serre).is_zero());
  CHECK(format_u(UElem(UMono{Word{0, 1}, Weight::unit(0, 2), -Weight::unit(1), Word{0}}), 2) == "E[1]E[2]*K[1]^2K'[2]^-1*F[1]");
  UAlgebra hat(f, true);
  CHECK_THROWS_AS(hat.mul(UAlgebra::K(-a0), UAlgebra::one()), NegativeTorusExponent);
}

TEST_CASE("U~ multiplication is associative and lands in the reduced basis") {
  for (const char* name : {"A2", "B2", "A2tau"}) {
    CAPTURE(std::string(name));
    CartanData cd = preset(name);
    FreeAlgebra f(cd);
    UAlgebra U(f);
    std::mt19937_64 rng(11);
    for (int k = 0; k < 10; ++k) {
      UElem x = random_u(rng, U, 2), y = random_u(rng, U, 2), z = random_u(rng, U, 1);
      const UElem xy = U.mul(x, y);
      CHECK(U.mul(xy, z) == U.mul(x, U.mul(y, z)));
      for (const auto& [m, c] : xy) {
        CHECK(f.is_standard(m.e));
        CHECK(f.is_standard(m.f));
      }
    }
    for (const auto& r : U.defining_relations()) {
      CAPTURE(r.name);
      CHECK(U.evaluate(r).is_zero());
    }
  }
}

TEST_CASE("U~ involutions") {
  for (const char* name : {"A2", "B2", "A2tau"}) {
    CAPTURE(std::string(name));
    CartanData cd = preset(name);
    FreeAlgebra f(cd);
    UAlgebra U(f);
    std::mt19937_64 rng(12);
    const auto s = U.distinguished_roots();
    for (int k = 0; k < 8; ++k) {
      UElem x = random_u(rng, U, 2), y = random_u(rng, U, 2);
      CHECK(U.bar(U.mul(x, y)) == U.mul(U.bar(y), U.bar(x)));
      CHECK(U.sigma(U.mul(x, y)) == U.mul(U.sigma(y), U.sigma(x)));
      CHECK(U.psi_rescale(U.mul(x, y), s) == U.mul(U.psi_rescale(x, s), U.psi_rescale(y, s)));
      CHECK(U.bar(U.bar(x)) == x);
      CHECK(U.sigma(U.sigma(x)) == x);
    }
    // both anti-involutions preserve the defining relations
    for (const auto& r : U.defining_relations()) {
      UAlgebra::Relation rb = r, rs = r;
      for (auto& [c, fac] : rb.terms) {
        c = c.bar();
        std::reverse(fac.begin(), fac.end());
      }
      for (auto& [c, fac] : rs.terms) {
        std::reverse(fac.begin(), fac.end());
        for (auto& g : fac) g = U.sigma(g);
      }
      CAPTURE(r.name);
      CHECK(U.evaluate(rb).is_zero());
      CHECK(U.evaluate(rs).is_zero());
    }
    for (int i = 0; i < cd.rank(); ++i) {
      CHECK(U.sigma(UAlgebra::K(Weight::unit(i))) == UAlgebra::Kp(Weight::unit(i)));
      CHECK(U.psi_rescale(UAlgebra::E(i), s) == UAlgebra::E(i).scaled(Scalar::u_pow(-cd.form(i, cd.tau(i)))));
      CHECK(U.psi_rescale(UAlgebra::F(i), s) == UAlgebra::F(i));
    }
  }
  CartanData cd = preset("A1");
  FreeAlgebra f(cd);
  UAlgebra U(f);
  const UElem ef = UElem(UMono{Word{0}, {}, {}, Word{0}}, Scalar::v_half(1));
  CHECK(U.bar(ef) == U.mul(UAlgebra::F(0), UAlgebra::E(0)).scaled(Scalar::v_half(-1)));
}

TEST_CASE("Phi_sharp realizes U~ inside the diagonal iHopf algebra") {
  for (const char* name : {"A2", "B2"}) {
    CAPTURE(std::string(name));
    CartanData cd = preset(name);
    FreeAlgebra f(cd);
    UAlgebra U(f);
    BorelAlgebra B(f);
    DiagonalIHopf D(B);
    DoubleRealization P(U, D);
    for (int i = 0; i < 2; ++i) {
      CHECK(P.forward(UAlgebra::E(i)) == tens(BorelMono{Word{i}, {}}, BorelMono{}));
      CHECK(P.forward(UAlgebra::F(i)) == tens(BorelMono{}, BorelMono{Word{i}, {}}));
      for (int j = 0; j < 2; ++j)
        CHECK(P.forward(UElem(UMono{{}, Weight::unit(i), Weight::unit(j), {}})) ==
              tens(BorelMono{{}, Weight::unit(i)}, BorelMono{{}, Weight::unit(j)}, v(cd.form(i, j))));
    }
    // images of the defining relations vanish under the star product
    for (const auto& r : U.defining_relations()) {
      TensorElem img;
      for (const auto& [c, fac] : r.terms) {
        TensorElem p = tens(BorelMono{}, BorelMono{});
        for (const auto& g : fac) p = D.star(p, P.forward(g));
        img.add(p, c);
      }
      CAPTURE(r.name);
      CHECK(img.is_zero());
    }
    std::mt19937_64 rng(13);
    for (int k = 0; k < 6; ++k) {
      UElem x = random_u(rng, U, 2), y = random_u(rng, U, 1);
      CHECK(P.forward(U.mul(x, y)) == D.star(P.forward(x), P.forward(y)));
      CHECK(P.inverse(P.forward(x)) == x);
    }
  }
}

TEST_CASE("iquantum group embedding and generators") {
  CartanData cd = preset("A2tau");
  FreeAlgebra f(cd);
  UAlgebra U(f);
  IQuantumGroup Ui(U);
  const Weight a0 = Weight::unit(0), a1 = Weight::unit(1);
  CHECK(Ui.embed(IQuantumGroup::B(0)) == UAlgebra::F(0) + UElem(UMono{Word{1}, {}, a0, {}}));
  CHECK(Ui.embed(word_product(IQuantumGroup::k(0), IQuantumGroup::k(0, -1))) == UAlgebra::one());
  CHECK(Ui.embed(IQuantumGroup::k(0)) == UElem(UMono{{}, a0, a1, {}}));
  CHECK(Ui.embed(Ui.bbK(0)) == UElem(UMono{{}, a0, a1, {}}, Scalar::v_half(cd.form(0, 1))));
  CHECK(format_iword(word_product(IQuantumGroup::B(0), IQuantumGroup::k(1, -1))) == "B[1]k[2]^-1");
  UAlgebra hat(f, true);
  IQuantumGroup Hi(hat);
  CHECK_THROWS_AS(Hi.embed(IQuantumGroup::k(0, -1)), NegativeTorusExponent);
}

TEST_CASE("Phi^i and the commuting square") {
  for (const char* name : {"A2", "A2tau", "AIII3", "B2"}) {
    CAPTURE(std::string(name));
    CartanData cd = preset(name);
    FreeAlgebra f(cd);
    UAlgebra U(f);
    BorelAlgebra B(f);
    DiagonalIHopf D(B);
    IQuantumBorel Bi(B);
    DoubleRealization P(U, D);
    IQuantumGroup Ui(U);
    for (int i = 0; i < cd.rank(); ++i) {
      const int ti = cd.tau(i);
      CHECK(Ui.phi_i(GenWordElem(GenWord::gen(i))) == IQuantumGroup::B(i));
      CHECK(Ui.phi_i(GenWordElem(GenWord::tor(i))) == IQuantumGroup::k(ti));
      CHECK(P.inverse(D.xi(BorelAlgebra::theta(i))) == UAlgebra::F(i) + UElem(UMono{Word{ti}, {}, Weight::unit(i), {}}));
      CHECK(P.inverse(D.xi(BorelAlgebra::torus(Weight::unit(i)))) == UElem(UMono{{}, Weight::unit(ti), Weight::unit(i), {}}));
    }
    std::mt19937_64 rng(14);
    for (int k = 0; k < 12; ++k) {
      const GenWord w = random_gen_word(rng, cd.rank(), k % 4, k % 3);
      CAPTURE(w.to_string("t", "h", "*"));
      const BorelElem x = Bi.eval(GenWordElem(w));
      CHECK(P.inverse(D.xi(x)) == Ui.embed(Ui.phi_i(GenWordElem(w))));
    }
  }
}

TEST_CASE("iword involutions") {
  for (const char* name : {"A2tau", "AIII3", "A2"}) {
    CAPTURE(std::string(name));
    CartanData cd = preset(name);
    FreeAlgebra f(cd);
    UAlgebra U(f);
    IQuantumGroup Ui(U);
    CHECK(Ui.sigma_i(word_product(IQuantumGroup::B(0), IQuantumGroup::B(1))) ==
          word_product(IQuantumGroup::B(1), IQuantumGroup::B(0)));
    for (int i = 0; i < cd.rank(); ++i) {
      const int c = cd.c(i, cd.tau(i));
      CHECK(Ui.bar_i(IQuantumGroup::k(i)) == IQuantumGroup::k(i).scaled(v(cd.d(i) * c)));
      CHECK(Ui.bar_i(Ui.bbK(i)) == Ui.bbK(i));
      CHECK(Ui.sigma_i(IQuantumGroup::k(i)) == IQuantumGroup::k(cd.tau(i)));
    }
    std::mt19937_64 rng(15);
    for (int k = 0; k < 10; ++k) {
      IWordElem x(random_gen_word(rng, cd.rank(), 3, 2), small_coeff(rng));
      CHECK(Ui.psi_i(Ui.psi_i(x)) == x);
      CHECK(Ui.bar_i(Ui.bar_i(x)) == x);
      CHECK(Ui.sigma_i(Ui.sigma_i(x)) == x);
    }
    // the maps send relations to relations
    std::vector<IWordElem> rels;
    for (int i = 0; i < cd.rank(); ++i)
      for (int l = 0; l < cd.rank(); ++l) rels.push_back(Ui.relation1_kb(i, l));
    for (int i = 0; i < cd.rank(); ++i) {
      rels.push_back(Ui.relation5(i, true));
      for (int j = 0; j < cd.rank(); ++j) {
        rels.push_back(Ui.relation3(i, j));
        rels.push_back(Ui.relation6(i, j, 0));
      }
    }
    for (const auto& r : rels) {
      CHECK(Ui.embed(Ui.sigma_i(r)).is_zero());
      CHECK(Ui.embed(Ui.bar_i(r)).is_zero());
      CHECK(Ui.embed(Ui.psi_i(r)).is_zero());
    }
  }
}

TEST_CASE("Serre presentation of U~^i") {
  SUBCASE("relation1 on every listed preset") {
    for (const char* name : {"A2", "A2tau", "AIII3", "B2", "G2"}) {
      CAPTURE(std::string(name));
      CartanData cd = preset(name);
      FreeAlgebra f(cd);
      UAlgebra U(f);
      IQuantumGroup Ui(U);
      for (int i = 0; i < cd.rank(); ++i)
        for (int l = 0; l < cd.rank(); ++l) {
          CHECK(Ui.embed(Ui.relation1_kk(i, l)).is_zero());
          CHECK(Ui.embed(Ui.relation1_kb(i, l)).is_zero());
        }
    }
  }
  SUBCASE("relation2 on split A1 x A1") {
    CartanData cd = preset("A1xA1");
    FreeAlgebra f(cd);
    UAlgebra U(f);
    IQuantumGroup Ui(U);
    REQUIRE_FALSE(Ui.relation2(0, 1).is_zero());
    CHECK(Ui.embed(Ui.relation2(0, 1)).is_zero());
  }
  SUBCASE("relation3 on AIII3") {
    CartanData cd = preset("AIII3");
    FreeAlgebra f(cd);
    UAlgebra U(f);
    IQuantumGroup Ui(U);
    REQUIRE_FALSE(Ui.relation3(0, 1).is_zero());
    CHECK(Ui.embed(Ui.relation3(0, 1)).is_zero());
  }
  SUBCASE("relation5 on A2 with tau = (12)") {
    CartanData cd = preset("A2tau");
    FreeAlgebra f(cd);
    UAlgebra U(f);
    IQuantumGroup Ui(U);
    for (int i = 0; i < 2; ++i) {
      CHECK(Ui.embed(Ui.relation5(i, true)).is_zero());
      CHECK(Ui.embed(Ui.relation5(i, false)).is_zero());
    }
    // control: B_1 and B_2 do not commute
    CHECK_FALSE(Ui.embed(word_product(IQuantumGroup::B(0), IQuantumGroup::B(1)) -
                         word_product(IQuantumGroup::B(1), IQuantumGroup::B(0)))
                    .is_zero());
  }
  SUBCASE("relation5 with c = 0 on AIII3") {
    CartanData cd = preset("AIII3");
    FreeAlgebra f(cd);
    UAlgebra U(f);
    IQuantumGroup Ui(U);
    CHECK(Ui.embed(Ui.relation5(0, true)).is_zero());
    CHECK(Ui.embed(Ui.relation5(0, false)).is_zero());
  }
  SUBCASE("relation6 on split A2, both parities") {
    CartanData cd = preset("A2");
    FreeAlgebra f(cd);
    UAlgebra U(f);
    IQuantumGroup Ui(U);
    for (int p = 0; p < 2; ++p)
      for (int i = 0; i < 2; ++i) CHECK(Ui.embed(Ui.relation6(i, 1 - i, p)).is_zero());
  }
}

TEST_CASE("idivided powers: low cases") {
  CartanData cd = preset("A1");
  FreeAlgebra f(cd);
  UAlgebra U(f);
  IQuantumGroup Ui(U);
  for (int p = 0; p < 2; ++p) {
    CHECK(Ui.idivided(0, 0, p) == IWordElem(GenWord{}));
    CHECK(Ui.idivided(0, 1, p) == IQuantumGroup::B(0));
  }
  CHECK(Ui.idivided(0, 2, 0) == Ui.divided(0, 2));
  const Scalar vm = v(1) - v(-1);
  CHECK(Ui.idivided(0, 2, 1) == Ui.divided(0, 2) + IQuantumGroup::k(0).scaled(v(1) * vm * vm * qfact(2).inv()));
}

TEST_CASE("quantum groups as iquantum groups of diagonal type") {
  for (const char* base : {"A1", "A2"}) {
    CAPTURE(std::string(base));
    CartanData single = preset(base);
    CartanData dbl = diagonal_double(single, "double");
    FreeAlgebra f1(single), f2(dbl);
    UAlgebra U1(f1), U2(f2);
    IQuantumGroup Ui(U2);
    const int n = single.rank();
    for (const auto& r : U1.defining_relations()) {
      IWordElem img;
      for (const auto& [c, fac] : r.terms) {
        IWordElem p(GenWord{});
        for (const auto& g : fac) p = word_product(p, doubled_image(g, n));
        img.add(p, c);
      }
      CAPTURE(r.name);
      CHECK(Ui.embed(img).is_zero());
    }
  }
}
