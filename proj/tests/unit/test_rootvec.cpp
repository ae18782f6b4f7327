#include <doctest.h>

#include "ihopf/checks.hpp"

using namespace ihopf;

namespace {

bool all_pass(const std::vector<CheckRecord>& rs, std::string* first_failure = nullptr) {
  for (const auto& r : rs)
    if (!r.pass) {
      if (first_failure) *first_failure = r.id + " " + r.params + ": " + r.witness.substr(0, 300);
      return false;
    }
  return !rs.empty();
}

}  // namespace

TEST_CASE("root vectors: low parameters and homogeneity") {
  for (const std::string name : {"A2split", "B2", "G2"}) {
    const CartanData cd = preset(name);
    FreeAlgebra f(cd, 10);
    for (int i : {0, 1}) {
      const int j = 1 - i;
      CAPTURE(name);
      CAPTURE(i);
      for (bool primed : {false, true}) {
        // m = 0 is theta_j itself
        CHECK(root_vector(f, {RootType::Split, i, j, {0}, primed}) == FreeAlgebra::gen(j));
        for (int m = 1; m <= -cd.c(i, j); ++m) {
          const FreeElem x = root_vector(f, {RootType::Split, i, j, {m}, primed});
          CHECK_FALSE(x.is_zero());
          Weight w = Weight::unit(j);
          w[i] += m;
          for (const auto& [word, c] : x.sorted()) CHECK(word.weight() == w);
        }
        // at the Serre degree the alternating sum is the Serre element
        CHECK(root_vector(f, {RootType::Split, i, j, {1 - cd.c(i, j)}, primed}).is_zero());
      }
    }
  }
}

TEST_CASE("root vectors: star expansions equal definitions, printed forms do not") {
  SUBCASE("split, c_ij = -3") {
    Workspace ws(preset("G2"), 10);
    const CartanData& cd = ws.cartan();
    // i = 2 (short root), j = 1: c_21 = -3
    const int i = 1, j = 0;
    REQUIRE(cd.c(i, j) == -3);
    bool literal_differs = false;
    for (int m = 0; m <= 4; ++m)
      for (bool primed : {false, true})
        for (int parity : {0, 1}) {
          const RootVectorSpec s{RootType::Split, i, j, {m}, primed};
          const BorelElem def = iota(root_vector(ws.f, s));
          CAPTURE(s.to_string());
          CAPTURE(parity);
          CHECK((ws.Bi.eval(root_vector_expansion(cd, s, parity)) - def).is_zero());
          if (!(ws.Bi.eval(root_vector_expansion(cd, s, parity, true)) - def).is_zero()) literal_differs = true;
        }
    CHECK(literal_differs);
  }
  SUBCASE("c_{i,tau i} = -1") {
    Workspace ws(preset("AIII4"), 8);
    const CartanData& cd = ws.cartan();
    const int i = 1, j = 0;
    REQUIRE(local_root_type(cd, i) == RootType::Cm1);
    bool literal_differs = false;
    for (const std::vector<int>& p : {std::vector<int>{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {1, 1, 1}}) {
      const RootVectorSpec s{RootType::Cm1, i, j, p, false};
      const BorelElem def = iota(root_vector(ws.f, s));
      CAPTURE(s.to_string());
      CHECK((ws.Bi.eval(root_vector_expansion(cd, s)) - def).is_zero());
      if (!(ws.Bi.eval(root_vector_expansion(cd, s, 0, true)) - def).is_zero()) literal_differs = true;
    }
    CHECK(literal_differs);
  }
}

TEST_CASE("quasi K-matrix: normalization, tau-fixed support, intertwining") {
  for (const std::string name : {"A1", "A2tau", "AIII3"}) {
    const CartanData cd = preset(name);
    FreeAlgebra f(cd, 6);
    UAlgebra U(f);
    std::vector<int> scope;
    for (int i = 0; i < cd.rank(); ++i) scope.push_back(i);
    const QuasiK Y = quasi_k_solve(U, scope, 4);
    CAPTURE(name);
    REQUIRE(Y.comp.count(Weight()) == 1);
    CHECK(Y.comp.at(Weight()) == FreeElem(Word()));
    for (const auto& [mu, x] : Y.comp) CHECK(cd.tau(mu) == mu);
    for (int i = 0; i < cd.rank(); ++i) {
      CHECK(quasi_k_residual(U, Y, i).is_zero());
      CHECK(quasi_k_torus_residual(U, Y, i).is_zero());
    }
  }
}

TEST_CASE("braid suites pass on small presets") {
  SuiteOptions opt;
  for (const std::string name : {"A2split", "A2tau", "AIII3", "G2"})
    for (const std::string suite : {"braid", "ibraid", "root-vectors", "quasi-k", "main-theorem"}) {
      const CartanData cd = preset(name);
      if (!suite_applies(suite, cd)) continue;
      std::string why;
      CAPTURE(name);
      CAPTURE(suite);
      CHECK_MESSAGE(all_pass(run_suite(suite, cd, opt), &why), why);
    }
}
