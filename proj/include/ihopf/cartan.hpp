// Cartan matrices, symmetrizers, Satake involutions and relative reflections.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ihopf {

constexpr int kMaxRank = 8;

struct UnsupportedLocalType : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Element of the root lattice Z^I (0-based coordinates).
struct Weight {
  std::array<std::int16_t, kMaxRank> c{};

  static Weight unit(int i, int k = 1) {
    Weight w;
    w.c[static_cast<std::size_t>(i)] = static_cast<std::int16_t>(k);
    return w;
  }
  std::int16_t operator[](int i) const { return c[static_cast<std::size_t>(i)]; }
  std::int16_t& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
  Weight operator+(const Weight& o) const {
    Weight r;
    for (int i = 0; i < kMaxRank; ++i) r[i] = static_cast<std::int16_t>(c[i] + o.c[i]);
    return r;
  }
  Weight operator-(const Weight& o) const {
    Weight r;
    for (int i = 0; i < kMaxRank; ++i) r[i] = static_cast<std::int16_t>(c[i] - o.c[i]);
    return r;
  }
  Weight operator-() const { return Weight() - *this; }
  Weight operator*(int k) const {
    Weight r;
    for (int i = 0; i < kMaxRank; ++i) r[i] = static_cast<std::int16_t>(c[i] * k);
    return r;
  }
  Weight& operator+=(const Weight& o) { return *this = *this + o; }
  Weight& operator-=(const Weight& o) { return *this = *this - o; }
  bool operator==(const Weight& o) const { return c == o.c; }
  bool operator!=(const Weight& o) const { return c != o.c; }
  bool operator<(const Weight& o) const { return c < o.c; }
  bool is_zero() const { return *this == Weight(); }
  bool nonnegative() const {
    for (auto x : c)
      if (x < 0) return false;
    return true;
  }
  int height() const {
    int h = 0;
    for (auto x : c) h += x;
    return h;
  }
  std::size_t hash() const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (auto x : c) h = (h ^ static_cast<std::uint16_t>(x)) * 0x100000001b3ull;
    return static_cast<std::size_t>(h);
  }
  std::string to_string(int rank) const;
};

class CartanData {
 public:
  CartanData() = default;
  // tau is 0-based; an empty tau means the identity.
  CartanData(std::string name, std::vector<std::vector<int>> c, std::vector<int> d, std::vector<int> tau = {});

  const std::string& name() const { return name_; }
  int rank() const { return n_; }
  int c(int i, int j) const { return c_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  int d(int i) const { return d_[static_cast<std::size_t>(i)]; }
  int tau(int i) const { return tau_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& tau_perm() const { return tau_; }
  const std::vector<std::vector<int>>& matrix() const { return c_; }
  const std::vector<int>& symmetrizer() const { return d_; }

  // (alpha_i, alpha_j) = d_i c_ij
  int form(int i, int j) const { return d(i) * c(i, j); }
  int form(const Weight& a, const Weight& b) const;
  int form_alpha(int i, const Weight& b) const;
  Weight alpha(int i) const { return Weight::unit(i); }

  Weight s(int i, const Weight& w) const;
  Weight tau(const Weight& w) const;
  int local_type(int i) const { return c(i, tau(i)); }
  bool is_split() const;

  // r_i as a word of simple reflections (applied right to left)
  std::vector<int> relative_word(int i) const;
  Weight r(int i, const Weight& w) const;
  // tau_i(k) for k in {i, tau i}, defined by r_i(alpha_i) = -alpha_{tau_i(i)}
  int tau_i(int i, int k) const;
  // representatives of tau-orbits (smallest index in each orbit)
  std::vector<int> orbit_representatives() const;

  // nullopt when all invariants hold, otherwise the first violation
  std::optional<std::string> validate() const;

  CartanData with_tau(std::vector<int> tau, std::string name) const;
  std::string describe() const;

 private:
  std::string name_;
  int n_ = 0;
  std::vector<std::vector<int>> c_;
  std::vector<int> d_;
  std::vector<int> tau_;
};

// Cartan matrix of a finite type, Bourbaki-style labels; D is the minimal symmetrizer.
CartanData finite_type(char type, int rank);
// Gamma disjoint union Gamma' with tau swapping the copies.
CartanData diagonal_double(const CartanData& base, const std::string& name);

struct PresetInfo {
  std::string name;
  std::string summary;
};
const std::vector<PresetInfo>& preset_list();
CartanData preset(const std::string& name);

// ---------------------------------------------------------------- config

// Minimal reader for `key = value` files with arrays, inline tables and [sections].
struct ConfigValue {
  enum class Kind { Int, Bool, String, Array, Table } kind = Kind::Int;
  long long i = 0;
  bool b = false;
  std::string s;
  std::vector<ConfigValue> arr;
  std::vector<std::pair<std::string, ConfigValue>> table;

  const ConfigValue* find(const std::string& key) const;
  long long as_int() const;
  const std::string& as_string() const;
  std::vector<long long> as_int_list() const;
};

using ConfigTable = std::vector<std::pair<std::string, ConfigValue>>;
ConfigTable parse_config(const std::string& text);
ConfigTable load_config_file(const std::string& path);
const ConfigValue* config_find(const ConfigTable& t, const std::string& key);

// Satake block: `cartan = {type = "A", rank = 3}` or `cartan = {matrix = [[..]], d = [..]}`,
// optional `tau = [[1,3]]` (1-based cycles), optional `name`.
CartanData load_satake(const ConfigTable& t);

}  // namespace ihopf
