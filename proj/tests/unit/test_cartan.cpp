#include <doctest.h>

#include <random>

#include "ihopf/cartan.hpp"

using namespace ihopf;

namespace {

Weight random_weight(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> co(-4, 4);
  Weight w;
  for (int i = 0; i < n; ++i) w[i] = static_cast<std::int16_t>(co(rng));
  return w;
}

}  // namespace

TEST_CASE("every preset is a valid Satake datum") {
  for (const auto& p : preset_list()) {
    CartanData cd = preset(p.name);
    CAPTURE(p.name);
    CHECK_FALSE(cd.validate().has_value());
  }
  CHECK(preset("A2").name() == "A2split");
  CHECK_THROWS_AS(preset("Z9"), ConfigError);
}

TEST_CASE("symmetrizer conventions") {
  CartanData b2 = preset("B2");
  CHECK(b2.d(0) == 2);
  CHECK(b2.d(1) == 1);
  CHECK(b2.c(0, 1) == -1);
  CHECK(b2.c(1, 0) == -2);
  CartanData g2 = preset("G2");
  CHECK(g2.form(0, 1) == -3);
  CHECK(g2.form(1, 0) == -3);
  CHECK(g2.form(0, 0) == 6);
}

TEST_CASE("validation reports violations") {
  CartanData bad("bad", {{2, -1}, {-2, 2}}, {1, 1});
  auto err = bad.validate();
  REQUIRE(err.has_value());
  CHECK(err->find("symmetric") != std::string::npos);
  CartanData badtau = finite_type('B', 2).with_tau({1, 0}, "x");
  CHECK(badtau.validate().has_value());
  CartanData a3 = finite_type('A', 3);
  CHECK(a3.with_tau({1, 0, 2}, "x").validate().has_value());
}

TEST_CASE("reflections preserve the form; relative reflections are involutions commuting with tau") {
  std::mt19937_64 rng(5);
  for (const auto& p : preset_list()) {
    CartanData cd = preset(p.name);
    const int n = cd.rank();
    for (int k = 0; k < 20; ++k) {
      Weight a = random_weight(rng, n), b = random_weight(rng, n);
      for (int i = 0; i < n; ++i) {
        CHECK(cd.form(cd.s(i, a), cd.s(i, b)) == cd.form(a, b));
        CHECK(cd.s(i, cd.s(i, a)) == a);
        CHECK(cd.r(i, cd.r(i, a)) == a);
        CHECK(cd.tau(cd.r(i, a)) == cd.r(i, cd.tau(a)));
        CHECK(cd.r(i, a) == cd.r(cd.tau(i), a));
        CHECK(cd.form(cd.tau(a), cd.tau(b)) == cd.form(a, b));
      }
    }
  }
}

TEST_CASE("tau_i by local type") {
  CartanData a2 = preset("A2tau");
  CHECK(a2.local_type(0) == -1);
  CHECK(a2.tau_i(0, 0) == 1);
  CHECK(a2.tau_i(0, 1) == 0);
  CartanData dbl = preset("DoubleA1");
  CHECK(dbl.local_type(0) == 0);
  // s_1 s_2 (alpha_1) = -alpha_1 when the two nodes are orthogonal
  CHECK(dbl.tau_i(0, 0) == 0);
  CHECK(dbl.tau_i(0, 1) == 1);
  CartanData a3 = preset("A3");
  CHECK(a3.tau_i(1, 1) == 1);
  CHECK(a3.relative_word(1) == std::vector<int>{1});
}

TEST_CASE("config reader and Satake loader") {
  auto t = parse_config(
      "# comment\n"
      "name = \"mine\"\n"
      "cartan = {type = \"A\", rank = 3}\n"
      "tau = [[1, 3]]\n"
      "[run]\n"
      "height = 4\n");
  CartanData cd = load_satake(t);
  CHECK(cd.name() == "mine");
  CHECK(cd.tau(0) == 2);
  CHECK(cd.tau(1) == 1);
  REQUIRE(config_find(t, "run.height"));
  CHECK(config_find(t, "run.height")->as_int() == 4);

  auto m = parse_config("cartan = {matrix = [[2,-1],[-2,2]], d = [2,1]}\n");
  CartanData b2 = load_satake(m);
  CHECK(b2.d(0) == 2);
  CHECK_THROWS_AS(load_satake(parse_config("cartan = {matrix = [[2,-1],[-2,2]], d = [1,1]}\n")), ConfigError);
  CHECK_THROWS_AS(parse_config("x = [1, 2\n"), ConfigError);
}
