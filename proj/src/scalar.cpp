#include "ihopf/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <functional>
#include <numeric>

namespace ihopf {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr std::uint64_t kP = (std::uint64_t{1} << 61) - 1;

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    if ((a >> 64) == 0 && (b >> 64) == 0) return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits64(i128 x) { return x >= INT64_MIN && x <= INT64_MAX; }

mpz_class to_mpz(i128 x) {
  bool neg = x < 0;
  u128 ux = neg ? -static_cast<u128>(x) : static_cast<u128>(x);
  mpz_class r(static_cast<unsigned long>(ux >> 64));
  r <<= 64;
  r += mpz_class(static_cast<unsigned long>(ux & ~std::uint64_t{0}));
  return neg ? mpz_class(-r) : r;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  u128 p = static_cast<u128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(p & kP);
  std::uint64_t hi = static_cast<std::uint64_t>(p >> 61);
  std::uint64_t s = lo + hi;
  if (s >= kP) s -= kP;
  return s;
}
std::uint64_t submod(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kP - b; }
std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1;
  }
  return r;
}
std::uint64_t invmod(std::uint64_t a) { return powmod(a, kP - 2); }

std::uint64_t mod_signed(std::int64_t x) {
  std::int64_t r = x % static_cast<std::int64_t>(kP);
  if (r < 0) r += static_cast<std::int64_t>(kP);
  return static_cast<std::uint64_t>(r);
}

}  // namespace

// ---------------------------------------------------------------- Rational

Rational::Rational(long long n, long long d) {
  if (d == 0) throw DivisionByZero();
  *this = from_i128(n, d);
}

Rational::Rational(const mpq_class& q) { *this = from_mpq(q); }

Rational Rational::from_i128(i128 n, i128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (n == 0) return Rational();
  u128 g = gcd128(n < 0 ? -static_cast<u128>(n) : static_cast<u128>(n), static_cast<u128>(d));
  if (g != 1) {
    n /= static_cast<i128>(g);
    d /= static_cast<i128>(g);
  }
  Rational r;
  if (fits64(n) && fits64(d)) {
    r.n_ = static_cast<std::int64_t>(n);
    r.d_ = static_cast<std::int64_t>(d);
    return r;
  }
  mpq_class q(to_mpz(n), to_mpz(d));
  r.big_ = std::make_shared<const mpq_class>(std::move(q));
  r.n_ = 0;
  r.d_ = 1;
  return r;
}

Rational Rational::from_mpq(mpq_class q) {
  q.canonicalize();
  Rational r;
  if (mpz_fits_slong_p(q.get_num_mpz_t()) && mpz_fits_slong_p(q.get_den_mpz_t())) {
    r.n_ = q.get_num().get_si();
    r.d_ = q.get_den().get_si();
    return r;
  }
  r.big_ = std::make_shared<const mpq_class>(std::move(q));
  return r;
}

Rational Rational::parse(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  if (q.get_den() == 0) throw DivisionByZero();
  return from_mpq(q);
}

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (n_ > 0) - (n_ < 0);
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(n_)), mpz_class(static_cast<long>(d_)));
}

std::string Rational::to_string() const {
  if (big_) return big_->get_str();
  if (d_ == 1) return std::to_string(n_);
  return std::to_string(n_) + "/" + std::to_string(d_);
}

std::size_t Rational::hash() const {
  if (big_) return std::hash<std::string>()(big_->get_str());
  return std::hash<std::int64_t>()(n_) * 1000003u ^ std::hash<std::int64_t>()(d_);
}

Rational Rational::operator-() const {
  if (!big_ && n_ != INT64_MIN) {
    Rational r = *this;
    r.n_ = -n_;
    return r;
  }
  return from_mpq(-to_mpq());
}

Rational operator+(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.d_ == 1 && b.d_ == 1) {
      i128 s = static_cast<i128>(a.n_) + b.n_;
      if (fits64(s)) {
        Rational r;
        r.n_ = static_cast<std::int64_t>(s);
        return r;
      }
    }
    return Rational::from_i128(static_cast<i128>(a.n_) * b.d_ + static_cast<i128>(b.n_) * a.d_,
                               static_cast<i128>(a.d_) * b.d_);
  }
  return Rational::from_mpq(a.to_mpq() + b.to_mpq());
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.d_ == 1 && b.d_ == 1) {
      i128 p = static_cast<i128>(a.n_) * b.n_;
      if (fits64(p)) {
        Rational r;
        r.n_ = static_cast<std::int64_t>(p);
        return r;
      }
    }
    return Rational::from_i128(static_cast<i128>(a.n_) * b.n_, static_cast<i128>(a.d_) * b.d_);
  }
  return Rational::from_mpq(a.to_mpq() * b.to_mpq());
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (!a.big_ && !b.big_)
    return Rational::from_i128(static_cast<i128>(a.n_) * b.d_, static_cast<i128>(a.d_) * b.n_);
  return Rational::from_mpq(a.to_mpq() / b.to_mpq());
}

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.n_ == b.n_ && a.d_ == b.d_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;
}

bool operator<(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return static_cast<i128>(a.n_) * b.d_ < static_cast<i128>(b.n_) * a.d_;
  return a.to_mpq() < b.to_mpq();
}

bool Rational::mod_p(std::uint64_t& out) const {
  std::uint64_t n, d;
  if (big_) {
    mpz_class nn = big_->get_num() % mpz_class(static_cast<unsigned long>(kP));
    if (nn < 0) nn += mpz_class(static_cast<unsigned long>(kP));
    n = nn.get_ui();
    d = mpz_fdiv_ui(big_->get_den_mpz_t(), kP);
  } else {
    n = mod_signed(n_);
    d = mod_signed(d_);
  }
  if (d == 0) return false;
  out = d == 1 ? n : mulmod(n, invmod(d));
  return true;
}

// ------------------------------------------------------------------- LPoly

LPoly LPoly::monomial(int e, Rational c) {
  LPoly p;
  if (!c.is_zero()) p.t_.emplace_back(e, std::move(c));
  return p;
}

LPoly LPoly::shifted(int k) const {
  LPoly p = *this;
  for (auto& t : p.t_) t.first += k;
  return p;
}

LPoly LPoly::scaled(const Rational& c) const {
  if (c.is_zero()) return {};
  LPoly p = *this;
  for (auto& t : p.t_) t.second *= c;
  return p;
}

LPoly LPoly::reflected() const {
  LPoly p;
  p.t_.reserve(t_.size());
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) p.t_.emplace_back(-it->first, it->second);
  return p;
}

LPoly LPoly::operator-() const { return scaled(Rational(-1)); }

LPoly operator+(const LPoly& a, const LPoly& b) {
  if (a.t_.empty()) return b;
  if (b.t_.empty()) return a;
  LPoly r;
  r.t_.reserve(a.t_.size() + b.t_.size());
  auto i = a.t_.begin(), j = b.t_.begin();
  while (i != a.t_.end() && j != b.t_.end()) {
    if (i->first < j->first) {
      r.t_.push_back(*i++);
    } else if (j->first < i->first) {
      r.t_.push_back(*j++);
    } else {
      Rational c = i->second + j->second;
      if (!c.is_zero()) r.t_.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  r.t_.insert(r.t_.end(), i, a.t_.end());
  r.t_.insert(r.t_.end(), j, b.t_.end());
  return r;
}

LPoly operator-(const LPoly& a, const LPoly& b) { return a + (-b); }

LPoly operator*(const LPoly& a, const LPoly& b) {
  if (a.t_.empty() || b.t_.empty()) return {};
  if (a.t_.size() == 1) return b.scaled(a.t_[0].second).shifted(a.t_[0].first);
  if (b.t_.size() == 1) return a.scaled(b.t_[0].second).shifted(b.t_[0].first);
  const int lo = a.low() + b.low();
  const long range = static_cast<long>(a.high()) + b.high() - lo + 1;
  LPoly r;
  if (range <= 8192) {
    std::vector<Rational> acc(static_cast<std::size_t>(range));
    for (const auto& x : a.t_)
      for (const auto& y : b.t_) acc[static_cast<std::size_t>(x.first + y.first - lo)] += x.second * y.second;
    for (long k = 0; k < range; ++k)
      if (!acc[static_cast<std::size_t>(k)].is_zero()) r.t_.emplace_back(static_cast<int>(k) + lo, std::move(acc[static_cast<std::size_t>(k)]));
    return r;
  }
  std::vector<LPoly::Term> all;
  for (const auto& x : a.t_)
    for (const auto& y : b.t_) all.emplace_back(x.first + y.first, x.second * y.second);
  std::stable_sort(all.begin(), all.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
  for (auto& t : all) {
    if (!r.t_.empty() && r.t_.back().first == t.first) {
      r.t_.back().second += t.second;
      if (r.t_.back().second.is_zero()) r.t_.pop_back();
    } else {
      r.t_.push_back(std::move(t));
    }
  }
  return r;
}

std::string LPoly::to_string(int unit, const char* var) const {
  if (t_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    Rational c = it->second;
    const int e = it->first / unit;
    bool neg = c.sign() < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      s += c.to_string();
      continue;
    }
    if (!c.is_one()) s += c.to_string() + "*";
    s += var;
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

std::size_t LPoly::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (const auto& t : t_) h = (h ^ (std::hash<int>()(t.first) + t.second.hash())) * 0x100000001b3ull;
  return h;
}

// --------------------------------------------------------------- poly gcd

namespace detail {
namespace {

using Dense = std::vector<Rational>;

Dense to_dense(const LPoly& p) {
  Dense d(static_cast<std::size_t>(p.high() + 1));
  for (const auto& t : p.terms()) d[static_cast<std::size_t>(t.first)] = t.second;
  return d;
}

LPoly from_dense(const Dense& d) {
  LPoly p;
  for (std::size_t k = 0; k < d.size(); ++k)
    if (!d[k].is_zero()) p.t_.emplace_back(static_cast<int>(k), d[k]);
  return p;
}

void trim(Dense& d) {
  while (!d.empty() && d.back().is_zero()) d.pop_back();
}

// a <- a mod b, b nonzero
void rem_inplace(Dense& a, const Dense& b) {
  const std::size_t db = b.size() - 1;
  const Rational inv_lc = Rational(1) / b.back();
  while (a.size() >= b.size()) {
    Rational q = a.back() * inv_lc;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t k = 0; k < db; ++k) a[shift + k] -= q * b[k];
    a.pop_back();
    trim(a);
  }
}

using ModPoly = std::vector<std::uint64_t>;

bool to_mod(const LPoly& p, ModPoly& out) {
  out.assign(static_cast<std::size_t>(p.high() + 1), 0);
  for (const auto& t : p.terms()) {
    std::uint64_t r;
    if (!t.second.mod_p(r)) return false;
    out[static_cast<std::size_t>(t.first)] = r;
  }
  return out.back() != 0;
}

void mod_trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::size_t mod_gcd_degree(ModPoly a, ModPoly b) {
  mod_trim(a);
  mod_trim(b);
  while (!b.empty()) {
    const std::uint64_t inv_lc = invmod(b.back());
    while (a.size() >= b.size()) {
      const std::uint64_t q = mulmod(a.back(), inv_lc);
      const std::size_t shift = a.size() - b.size();
      for (std::size_t k = 0; k + 1 < b.size(); ++k) a[shift + k] = submod(a[shift + k], mulmod(q, b[k]));
      a.pop_back();
      mod_trim(a);
    }
    std::swap(a, b);
  }
  return a.size() - 1;
}

}  // namespace

LPoly poly_gcd(const LPoly& a, const LPoly& b) {
  if (a.high() == 0 || b.high() == 0) return LPoly(Rational(1));
  ModPoly ma, mb;
  if (to_mod(a, ma) && to_mod(b, mb) && mod_gcd_degree(ma, mb) == 0) return LPoly(Rational(1));
  Dense x = to_dense(a), y = to_dense(b);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    rem_inplace(x, y);
    std::swap(x, y);
  }
  const Rational inv_lc = Rational(1) / x.back();
  for (auto& c : x) c *= inv_lc;
  return from_dense(x);
}

LPoly poly_divexact(const LPoly& a, const LPoly& b) {
  Dense x = to_dense(a);
  const Dense y = to_dense(b);
  if (x.size() < y.size()) throw std::logic_error("inexact polynomial division");
  Dense q(x.size() - y.size() + 1);
  const Rational inv_lc = Rational(1) / y.back();
  while (x.size() >= y.size()) {
    const std::size_t shift = x.size() - y.size();
    Rational c = x.back() * inv_lc;
    for (std::size_t k = 0; k < y.size(); ++k) x[shift + k] -= c * y[k];
    q[shift] = c;
    x.pop_back();
    trim(x);
    if (x.empty()) break;
  }
  if (!x.empty()) throw std::logic_error("inexact polynomial division");
  return from_dense(q);
}

}  // namespace detail

// ------------------------------------------------------------------ Scalar

namespace {

// split a nonzero Laurent polynomial into u^low * core with core(0) != 0
std::pair<int, LPoly> split_core(const LPoly& p) {
  const int s = p.low();
  return {s, s == 0 ? p : p.shifted(-s)};
}

}  // namespace

Scalar Scalar::fraction(const LPoly& num, const LPoly& den) {
  if (den.is_zero()) throw DivisionByZero();
  Scalar r;
  if (num.is_zero()) return r;
  const int s = den.low();
  LPoly d = den.shifted(-s);
  LPoly n = num.shifted(-s);
  if (d.terms().size() == 1) {
    r.num_ = n.scaled(Rational(1) / d.lc());
    return r;
  }
  auto [t, core] = split_core(n);
  LPoly g = detail::poly_gcd(core, d);
  if (!g.is_one()) {
    core = detail::poly_divexact(core, g);
    d = detail::poly_divexact(d, g);
  }
  if (!d.lc().is_one()) {
    const Rational ic = Rational(1) / d.lc();
    core = core.scaled(ic);
    d = d.scaled(ic);
  }
  if (d.terms().size() == 1) {
    r.num_ = core.shifted(t);
    return r;
  }
  r.num_ = core.shifted(t);
  r.den_ = std::move(d);
  return r;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -num_;
  return r;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const bool a1 = a.den_.is_one(), b1 = b.den_.is_one();
  Scalar r;
  if (a1 && b1) {
    r.num_ = a.num_ + b.num_;
    return r;
  }
  if (a1 || b1) {
    // gcd(a.num*b.den + b.num, b.den) = gcd(b.num, b.den) = 1
    const Scalar& p = a1 ? a : b;
    const Scalar& q = a1 ? b : a;
    r.num_ = p.num_ * q.den_ + q.num_;
    if (r.num_.is_zero()) return Scalar();
    r.den_ = q.den_;
    return r;
  }
  if (a.den_ == b.den_) return Scalar::fraction(a.num_ + b.num_, a.den_);
  LPoly g = detail::poly_gcd(a.den_, b.den_);
  if (g.is_one()) {
    r.num_ = a.num_ * b.den_ + b.num_ * a.den_;
    if (r.num_.is_zero()) return Scalar();
    r.den_ = a.den_ * b.den_;
    return r;
  }
  LPoly ad = detail::poly_divexact(a.den_, g), bd = detail::poly_divexact(b.den_, g);
  return Scalar::fraction(a.num_ * bd + b.num_ * ad, a.den_ * bd);
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar& Scalar::operator+=(const Scalar& b) {
  if (den_.is_one() && b.den_.is_one()) {
    num_ = num_ + b.num_;
    return *this;
  }
  return *this = *this + b;
}

Scalar& Scalar::operator-=(const Scalar& b) { return *this += -b; }

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero()) return Scalar();
  const bool a1 = a.den_.is_one(), b1 = b.den_.is_one();
  Scalar r;
  if (a1 && b1) {
    r.num_ = a.num_ * b.num_;
    return r;
  }
  // cross-cancel: gcd(a.num, b.den) and gcd(b.num, a.den)
  LPoly an = a.num_, bn = b.num_, ad = a.den_, bd = b.den_;
  if (!b1) {
    auto [s, core] = split_core(an);
    LPoly g = detail::poly_gcd(core, bd);
    if (!g.is_one()) {
      an = detail::poly_divexact(core, g).shifted(s);
      bd = detail::poly_divexact(bd, g);
    }
  }
  if (!a1) {
    auto [s, core] = split_core(bn);
    LPoly g = detail::poly_gcd(core, ad);
    if (!g.is_one()) {
      bn = detail::poly_divexact(core, g).shifted(s);
      ad = detail::poly_divexact(ad, g);
    }
  }
  r.num_ = an * bn;
  r.den_ = ad * bd;
  return r;
}

Scalar Scalar::inv() const {
  if (is_zero()) throw DivisionByZero();
  return fraction(den_, num_);
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inv(); }

Scalar Scalar::bar() const {
  if (den_.is_one()) return Scalar(num_.reflected());
  return fraction(num_.reflected(), den_.reflected());
}

Scalar Scalar::pow(int k) const {
  if (k < 0) return inv().pow(-k);
  Scalar r(1), b = *this;
  while (k) {
    if (k & 1) r *= b;
    k >>= 1;
    if (k) b *= b;
  }
  return r;
}

Rational Scalar::specialize(const Rational& u0) const {
  if (u0.is_zero()) throw std::invalid_argument("specialization point must be nonzero");
  auto eval = [&](const LPoly& p) {
    Rational s;
    for (const auto& t : p.terms()) {
      Rational x = 1;
      const Rational base = t.first >= 0 ? u0 : Rational(1) / u0;
      for (int k = 0; k < std::abs(t.first); ++k) x *= base;
      s += t.second * x;
    }
    return s;
  };
  Rational d = eval(den_);
  if (d.is_zero()) throw PoleAtPoint();
  return eval(num_) / d;
}

std::string Scalar::to_string(ScalarStyle style) const {
  if (style == ScalarStyle::Canonical) return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
  auto divisible = [](const LPoly& p, int m) {
    return std::all_of(p.terms().begin(), p.terms().end(), [m](const auto& t) { return t.first % m == 0; });
  };
  int unit = 1;
  const char* var = "u";
  if (divisible(num_, 4) && divisible(den_, 4)) {
    unit = 4;
    var = "v";
  } else if (divisible(num_, 2) && divisible(den_, 2)) {
    unit = 2;
    var = "q";
  }
  std::string n = num_.to_string(unit, var);
  if (den_.is_one()) return num_.terms().size() > 1 ? "(" + n + ")" : n;
  return "(" + n + ")/(" + den_.to_string(unit, var) + ")";
}

std::size_t Scalar::hash() const { return num_.hash() * 31u ^ den_.hash(); }

// --------------------------------------------------------------- parsing

namespace {

struct ScalarParser {
  const std::string& s;
  std::size_t pos = 0;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("scalar parse error at " + std::to_string(pos) + ": " + what);
  }
  int signed_int() {
    skip();
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    skip();
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) fail("expected exponent");
    long v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) v = v * 10 + (s[pos++] - '0');
    return static_cast<int>(neg ? -v : v);
  }
  Scalar primary() {
    skip();
    if (pos >= s.size()) fail("unexpected end");
    char c = s[pos];
    if (c == '(') {
      ++pos;
      Scalar r = expr();
      if (!eat(')')) fail("expected )");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t b = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      return Scalar(Rational::parse(s.substr(b, pos - b)));
    }
    ++pos;
    if (c == 'u') return Scalar::u_pow(1);
    if (c == 'q') return Scalar::u_pow(2);
    if (c == 'v') return Scalar::u_pow(4);
    --pos;
    fail(std::string("unexpected character '") + c + "'");
  }
  Scalar factor() {
    Scalar b = primary();
    if (eat('^')) return b.pow(signed_int());
    return b;
  }
  bool starts_factor() {
    skip();
    if (pos >= s.size()) return false;
    char c = s[pos];
    return c == '(' || c == 'u' || c == 'v' || c == 'q' || std::isdigit(static_cast<unsigned char>(c));
  }
  Scalar term() {
    Scalar r = factor();
    for (;;) {
      if (eat('*')) r *= factor();
      else if (eat('/')) r /= factor();
      else if (starts_factor()) r *= factor();
      else return r;
    }
  }
  Scalar expr() {
    Scalar r;
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    r = term();
    if (neg) r = -r;
    for (;;) {
      if (eat('+')) r += term();
      else if (eat('-')) r -= term();
      else return r;
    }
  }
};

}  // namespace

Scalar Scalar::parse(const std::string& text) {
  ScalarParser p{text};
  Scalar r = p.expr();
  p.skip();
  if (p.pos != text.size()) p.fail("trailing input");
  return r;
}

// ------------------------------------------------------ q-combinatorics

Scalar qint(int n, int vexp) {
  if (n == 0) return Scalar();
  const int m = std::abs(n);
  LPoly p;
  for (int k = m - 1; k >= 0; --k) p = p + LPoly::monomial(4 * vexp * (m - 1 - 2 * k), Rational(1));
  Scalar r(p);
  return n < 0 ? -r : r;
}

Scalar qfact(int n, int vexp) {
  if (n < 0) throw NegativeArgument("qfact of a negative integer");
  Scalar r(1);
  for (int k = 2; k <= n; ++k) r *= qint(k, vexp);
  return r;
}

Scalar qbinom(int m, int r, int vexp) {
  if (r < 0) return Scalar();
  Scalar num(1);
  for (int k = 0; k < r; ++k) num *= qint(m - k, vexp);
  return num / qfact(r, vexp);
}

Scalar pochhammer(const Scalar& a, const Scalar& x, int n) {
  if (n < 0) throw NegativeArgument("pochhammer length must be nonnegative");
  Scalar r(1), ax = a;
  for (int k = 0; k < n; ++k) {
    r *= Scalar(1) - ax;
    ax *= x;
  }
  return r;
}

}  // namespace ihopf
