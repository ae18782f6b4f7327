// Exact arithmetic in Q(u), u = v^{1/4}.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ihopf {

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero") {}
};
struct PoleAtPoint : std::domain_error {
  PoleAtPoint() : std::domain_error("denominator vanishes at the evaluation point") {}
};
struct NegativeArgument : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Rational number with an int64 fast path; falls back to GMP on overflow.
// Canonical: a value that fits in int64/int64 is always stored small.
class Rational {
 public:
  Rational() = default;
  Rational(long long n) : n_(n) {}  // NOLINT(implicit)
  Rational(long long n, long long d);
  explicit Rational(const mpq_class& q);

  static Rational parse(const std::string& s);

  bool is_zero() const { return !big_ && n_ == 0; }
  bool is_one() const { return !big_ && n_ == 1 && d_ == 1; }
  bool is_small() const { return !big_; }
  int sign() const;
  mpq_class to_mpq() const;
  std::string to_string() const;
  std::size_t hash() const;

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  friend bool operator==(const Rational& a, const Rational& b);
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b);

  // residue modulo the Mersenne prime 2^61-1; false if the denominator vanishes there
  bool mod_p(std::uint64_t& out) const;

 private:
  static Rational from_i128(__int128 n, __int128 d);
  static Rational from_mpq(mpq_class q);
  std::int64_t n_ = 0;
  std::int64_t d_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

// Sparse Laurent polynomial in u with rational coefficients, exponents ascending.
class LPoly {
 public:
  using Term = std::pair<int, Rational>;
  LPoly() = default;
  LPoly(Rational c) {  // NOLINT(implicit)
    if (!c.is_zero()) t_.emplace_back(0, std::move(c));
  }
  static LPoly monomial(int e, Rational c = 1);

  const std::vector<Term>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_one() const { return t_.size() == 1 && t_[0].first == 0 && t_[0].second.is_one(); }
  int low() const { return t_.front().first; }
  int high() const { return t_.back().first; }
  const Rational& lc() const { return t_.back().second; }
  LPoly shifted(int k) const;
  LPoly scaled(const Rational& c) const;
  LPoly reflected() const;  // u -> u^{-1}

  friend LPoly operator+(const LPoly& a, const LPoly& b);
  friend LPoly operator-(const LPoly& a, const LPoly& b);
  friend LPoly operator*(const LPoly& a, const LPoly& b);
  LPoly operator-() const;
  friend bool operator==(const LPoly& a, const LPoly& b) { return a.t_ == b.t_; }
  friend bool operator==(const LPoly::Term& a, const LPoly::Term& b);

  std::string to_string(int unit = 1, const char* var = "u") const;
  std::size_t hash() const;

  std::vector<Term> t_;
};

inline bool operator==(const LPoly::Term& a, const LPoly::Term& b) {
  return a.first == b.first && a.second == b.second;
}

enum class ScalarStyle { Canonical, Pretty };

// Element of Q(u) in canonical form num/den: den is a monic polynomial with
// nonzero constant term and gcd(num, den) = 1.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long long n) : num_(Rational(n)) {}  // NOLINT(implicit)
  Scalar(Rational c) : num_(std::move(c)) {}  // NOLINT(implicit)
  Scalar(LPoly p) : num_(std::move(p)) {}     // NOLINT(implicit)
  static Scalar fraction(const LPoly& num, const LPoly& den);

  static Scalar u_pow(int k, Rational c = 1) { return Scalar(LPoly::monomial(k, std::move(c))); }
  static Scalar v_pow(int k) { return u_pow(4 * k); }
  // v^{k/2}
  static Scalar v_half(int k) { return u_pow(2 * k); }

  const LPoly& num() const { return num_; }
  const LPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_laurent() const { return den_.is_one(); }

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b);
  Scalar& operator-=(const Scalar& b);
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  Scalar& operator/=(const Scalar& b) { return *this = *this / b; }
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Scalar inv() const;
  Scalar bar() const;
  Scalar pow(int k) const;
  Rational specialize(const Rational& u0) const;

  std::string to_string(ScalarStyle style = ScalarStyle::Canonical) const;
  static Scalar parse(const std::string& text);
  std::size_t hash() const;

 private:
  LPoly num_;
  LPoly den_ = LPoly(Rational(1));
};

// Quantum numbers with base t = v^{vexp}.
Scalar qint(int n, int vexp = 1);
Scalar qfact(int n, int vexp = 1);
Scalar qbinom(int m, int r, int vexp = 1);
Scalar pochhammer(const Scalar& a, const Scalar& x, int n);

namespace detail {
// gcd of polynomials with nonzero constant terms (exponents >= 0); result monic
LPoly poly_gcd(const LPoly& a, const LPoly& b);
// exact quotient a / b, throws if not exact
LPoly poly_divexact(const LPoly& a, const LPoly& b);
}  // namespace detail

}  // namespace ihopf
