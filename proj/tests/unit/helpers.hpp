#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "ihopf/freealg.hpp"

namespace testutil {

using namespace ihopf;

inline Scalar small_coeff(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> co(-3, 3), ex(-2, 2);
  int c = co(rng);
  if (c == 0) c = 1;
  return Scalar::u_pow(4 * ex(rng), Rational(c));
}

inline Weight random_weight(std::mt19937_64& rng, int rank, int height) {
  std::uniform_int_distribution<int> pick(0, rank - 1);
  Weight w;
  for (int k = 0; k < height; ++k) ++w[pick(rng)];
  return w;
}

inline Word random_word(std::mt19937_64& rng, int rank, int len) {
  std::uniform_int_distribution<int> pick(0, rank - 1);
  Word w;
  for (int k = 0; k < len; ++k) w.push_back(pick(rng));
  return w;
}

// random homogeneous element of 'f of the given weight (a few words)
inline FreeElem random_homogeneous(std::mt19937_64& rng, const Weight& mu, int rank, int terms = 3) {
  std::vector<int> letters;
  for (int i = 0; i < rank; ++i)
    for (int k = 0; k < mu[i]; ++k) letters.push_back(i);
  FreeElem x;
  for (int t = 0; t < terms; ++t) {
    std::shuffle(letters.begin(), letters.end(), rng);
    Word w;
    for (int l : letters) w.push_back(l);
    x.add(w, small_coeff(rng));
  }
  return x;
}

// positive roots by reflection closure, used for the Kostant partition count
inline std::vector<Weight> positive_roots(const CartanData& cd) {
  std::vector<Weight> roots;
  for (int i = 0; i < cd.rank(); ++i) roots.push_back(Weight::unit(i));
  for (std::size_t k = 0; k < roots.size(); ++k)
    for (int i = 0; i < cd.rank(); ++i) {
      Weight r = cd.s(i, roots[k]);
      if (r.nonnegative() && !r.is_zero() && std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
    }
  return roots;
}

inline long kostant(const std::vector<Weight>& roots, std::size_t from, const Weight& mu) {
  if (mu.is_zero()) return 1;
  if (from == roots.size() || !mu.nonnegative()) return 0;
  long total = 0;
  Weight rest = mu;
  while (rest.nonnegative()) {
    total += kostant(roots, from + 1, rest);
    rest = rest - roots[from];
  }
  return total;
}

}  // namespace testutil
