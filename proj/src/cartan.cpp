#include "ihopf/cartan.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace ihopf {

std::string Weight::to_string(int rank) const {
  std::string s = "[";
  for (int i = 0; i < rank; ++i) {
    if (i) s += ",";
    s += std::to_string(c[static_cast<std::size_t>(i)]);
  }
  return s + "]";
}

CartanData::CartanData(std::string name, std::vector<std::vector<int>> c, std::vector<int> d, std::vector<int> tau)
    : name_(std::move(name)), n_(static_cast<int>(c.size())), c_(std::move(c)), d_(std::move(d)), tau_(std::move(tau)) {
  if (n_ > kMaxRank) throw ConfigError("rank " + std::to_string(n_) + " exceeds the supported maximum " + std::to_string(kMaxRank));
  if (tau_.empty())
    for (int i = 0; i < n_; ++i) tau_.push_back(i);
}

int CartanData::form(const Weight& a, const Weight& b) const {
  int s = 0;
  for (int i = 0; i < n_; ++i) {
    if (!a[i]) continue;
    for (int j = 0; j < n_; ++j)
      if (b[j]) s += a[i] * b[j] * form(i, j);
  }
  return s;
}

int CartanData::form_alpha(int i, const Weight& b) const {
  int s = 0;
  for (int j = 0; j < n_; ++j) s += b[j] * form(i, j);
  return s;
}

Weight CartanData::s(int i, const Weight& w) const {
  int pairing = 0;
  for (int j = 0; j < n_; ++j) pairing += c(i, j) * w[j];
  Weight r = w;
  r[i] = static_cast<std::int16_t>(r[i] - pairing);
  return r;
}

Weight CartanData::tau(const Weight& w) const {
  Weight r;
  for (int i = 0; i < n_; ++i) r[tau(i)] = w[i];
  return r;
}

bool CartanData::is_split() const {
  for (int i = 0; i < n_; ++i)
    if (tau(i) != i) return false;
  return true;
}

std::vector<int> CartanData::relative_word(int i) const {
  const int t = tau(i);
  switch (local_type(i)) {
    case 2: return {i};
    case 0: return {i, t};
    case -1: return {i, t, i};
    default: throw UnsupportedLocalType("c_{i,tau i} = " + std::to_string(local_type(i)) + " is not a supported local type");
  }
}

Weight CartanData::r(int i, const Weight& w) const {
  auto word = relative_word(i);
  Weight x = w;
  for (auto it = word.rbegin(); it != word.rend(); ++it) x = s(*it, x);
  return x;
}

int CartanData::tau_i(int i, int k) const {
  for (int cand : {i, tau(i)}) {
    if (r(i, alpha(k)) == -alpha(cand)) return cand;
  }
  throw UnsupportedLocalType("r_i does not permute the simple roots of the rank-one subdiagram");
}

std::vector<int> CartanData::orbit_representatives() const {
  std::vector<int> out;
  for (int i = 0; i < n_; ++i)
    if (i <= tau(i)) out.push_back(i);
  return out;
}

std::optional<std::string> CartanData::validate() const {
  if (n_ == 0) return "empty index set";
  if (static_cast<int>(d_.size()) != n_) return "symmetrizer length differs from rank";
  if (static_cast<int>(tau_.size()) != n_) return "tau length differs from rank";
  for (int i = 0; i < n_; ++i) {
    if (static_cast<int>(c_[static_cast<std::size_t>(i)].size()) != n_) return "Cartan matrix is not square";
    if (d(i) <= 0) return "symmetrizer entry d_" + std::to_string(i + 1) + " is not positive";
  }
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      if (i == j && c(i, j) != 2) return "c_ii != 2 at i=" + std::to_string(i + 1);
      if (i != j && c(i, j) > 0) return "positive off-diagonal entry c_" + std::to_string(i + 1) + std::to_string(j + 1);
      if (i != j && (c(i, j) == 0) != (c(j, i) == 0)) return "c_ij = 0 but c_ji != 0";
      if (d(i) * c(i, j) != d(j) * c(j, i)) return "DC is not symmetric at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
    }
  std::vector<bool> seen(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) {
    int t = tau(i);
    if (t < 0 || t >= n_) return "tau maps outside the index set";
    if (seen[static_cast<std::size_t>(t)]) return "tau is not a permutation";
    seen[static_cast<std::size_t>(t)] = true;
  }
  for (int i = 0; i < n_; ++i) {
    if (tau(tau(i)) != i) return "tau is not an involution";
    if (d(tau(i)) != d(i)) return "tau does not preserve the symmetrizer";
    for (int j = 0; j < n_; ++j)
      if (c(tau(i), tau(j)) != c(i, j)) return "tau does not preserve the Cartan matrix";
    const int lt = local_type(i);
    if (lt != 2 && lt != 0 && lt != -1) return "unsupported local type c_{i,tau i} = " + std::to_string(lt);
  }
  return std::nullopt;
}

CartanData CartanData::with_tau(std::vector<int> tau, std::string name) const {
  return CartanData(std::move(name), c_, d_, std::move(tau));
}

std::string CartanData::describe() const {
  std::ostringstream os;
  os << name_ << ": rank " << n_ << ", C = [";
  for (int i = 0; i < n_; ++i) {
    if (i) os << "; ";
    for (int j = 0; j < n_; ++j) os << (j ? " " : "") << c(i, j);
  }
  os << "], D = (";
  for (int i = 0; i < n_; ++i) os << (i ? "," : "") << d(i);
  os << "), tau = (";
  for (int i = 0; i < n_; ++i) os << (i ? "," : "") << tau(i) + 1;
  os << ")";
  return os.str();
}

CartanData finite_type(char type, int n) {
  type = static_cast<char>(std::toupper(static_cast<unsigned char>(type)));
  std::vector<std::vector<int>> c(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  std::vector<int> d(static_cast<std::size_t>(n), 1);
  auto link = [&](int i, int j, int cij = -1, int cji = -1) {
    c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = cij;
    c[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = cji;
  };
  for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 2;
  const std::string name = std::string(1, type) + std::to_string(n);
  switch (type) {
    case 'A':
      if (n < 1) break;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      return CartanData(name, c, d);
    case 'B':
      if (n < 2) break;
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 2, n - 1, -1, -2);
      for (int i = 0; i + 1 < n; ++i) d[static_cast<std::size_t>(i)] = 2;
      return CartanData(name, c, d);
    case 'C':
      if (n < 2) break;
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 2, n - 1, -2, -1);
      d[static_cast<std::size_t>(n - 1)] = 2;
      return CartanData(name, c, d);
    case 'D':
      if (n < 4) break;
      for (int i = 0; i + 3 < n; ++i) link(i, i + 1);
      link(n - 3, n - 2);
      link(n - 3, n - 1);
      return CartanData(name, c, d);
    case 'E':
      if (n < 6 || n > 8) break;
      // 1-2-3-5-6 chain with 4 attached to 3 (E6); longer tails for E7/E8
      link(0, 1);
      link(1, 2);
      link(2, 3);
      link(2, 4);
      link(4, 5);
      if (n >= 7) link(5, 6);
      if (n == 8) link(6, 7);
      return CartanData(name, c, d);
    case 'F':
      if (n != 4) break;
      link(0, 1);
      link(1, 2, -1, -2);
      link(2, 3);
      d = {2, 2, 1, 1};
      return CartanData(name, c, d);
    case 'G':
      if (n != 2) break;
      link(0, 1, -1, -3);
      d = {3, 1};
      return CartanData(name, c, d);
    default:
      break;
  }
  throw ConfigError("unsupported finite type " + name);
}

CartanData diagonal_double(const CartanData& base, const std::string& name) {
  const int n = base.rank();
  std::vector<std::vector<int>> c(static_cast<std::size_t>(2 * n), std::vector<int>(static_cast<std::size_t>(2 * n), 0));
  std::vector<int> d(static_cast<std::size_t>(2 * n));
  std::vector<int> tau(static_cast<std::size_t>(2 * n));
  for (int i = 0; i < n; ++i) {
    d[static_cast<std::size_t>(i)] = d[static_cast<std::size_t>(i + n)] = base.d(i);
    tau[static_cast<std::size_t>(i)] = i + n;
    tau[static_cast<std::size_t>(i + n)] = i;
    for (int j = 0; j < n; ++j) {
      c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = base.c(i, j);
      c[static_cast<std::size_t>(i + n)][static_cast<std::size_t>(j + n)] = base.c(i, j);
    }
  }
  return CartanData(name, c, d, tau);
}

const std::vector<PresetInfo>& preset_list() {
  static const std::vector<PresetInfo> list = {
      {"A1", "split A1"},
      {"A2split", "split A2 (alias A2)"},
      {"A3", "split A3"},
      {"B2", "split B2, D = (2,1), c12 = -1, c21 = -2"},
      {"G2", "split G2, D = (3,1), c12 = -1, c21 = -3"},
      {"A1xA1", "split A1 x A1"},
      {"A2tau", "A2 with tau = (1 2) (AIII, even rank 2)"},
      {"AIII3", "A3 with tau = (1 3)"},
      {"AIII4", "A4 with tau = (1 4)(2 3)"},
      {"DI4", "D4 with tau = (3 4)"},
      {"EII6", "E6 with tau = (1 6)(2 5)"},
      {"DoubleA1", "diagonal double of A1 (A1 x A1 with swap)"},
      {"DoubleA2", "diagonal double of A2 with swap"},
  };
  return list;
}

CartanData preset(const std::string& raw) {
  std::string name = raw;
  if (name == "A2" || name == "A2split") return finite_type('A', 2).with_tau({}, "A2split");
  if (name == "A1" || name == "A1split") return finite_type('A', 1).with_tau({}, "A1");
  if (name == "A3" || name == "A3split") return finite_type('A', 3).with_tau({}, "A3");
  if (name == "B2" || name == "B2split") return finite_type('B', 2).with_tau({}, "B2");
  if (name == "G2" || name == "G2split") return finite_type('G', 2).with_tau({}, "G2");
  if (name == "A1xA1") return CartanData("A1xA1", {{2, 0}, {0, 2}}, {1, 1});
  if (name == "A2tau") return finite_type('A', 2).with_tau({1, 0}, "A2tau");
  if (name == "AIII3") return finite_type('A', 3).with_tau({2, 1, 0}, "AIII3");
  if (name == "AIII4") return finite_type('A', 4).with_tau({3, 2, 1, 0}, "AIII4");
  if (name == "DI4") return finite_type('D', 4).with_tau({0, 1, 3, 2}, "DI4");
  if (name == "EII6") return finite_type('E', 6).with_tau({5, 4, 2, 3, 1, 0}, "EII6");
  if (name == "DoubleA1") return diagonal_double(finite_type('A', 1), "DoubleA1");
  if (name == "DoubleA2") return diagonal_double(finite_type('A', 2), "DoubleA2");
  throw ConfigError("unknown preset '" + raw + "'");
}

// ---------------------------------------------------------------- config

namespace {

struct ConfigParser {
  const std::string& s;
  std::size_t pos = 0;
  int line = 1;

  [[noreturn]] void fail(const std::string& what) const {
    throw ConfigError("config line " + std::to_string(line) + ": " + what);
  }
  void skip_inline() {
    while (pos < s.size()) {
      char c = s[pos];
      if (c == ' ' || c == '\t' || c == '\r') {
        ++pos;
      } else if (c == '#') {
        while (pos < s.size() && s[pos] != '\n') ++pos;
      } else {
        break;
      }
    }
  }
  void skip_all() {
    for (;;) {
      skip_inline();
      if (pos < s.size() && s[pos] == '\n') {
        ++pos;
        ++line;
      } else {
        return;
      }
    }
  }
  std::string key() {
    skip_inline();
    std::size_t b = pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_' || s[pos] == '-' || s[pos] == '.')) ++pos;
    if (b == pos) fail("expected a key");
    return s.substr(b, pos - b);
  }
  void expect(char c) {
    skip_all();
    if (pos >= s.size() || s[pos] != c) fail(std::string("expected '") + c + "'");
    ++pos;
  }
  ConfigValue value() {
    skip_all();
    if (pos >= s.size()) fail("missing value");
    ConfigValue v;
    char c = s[pos];
    if (c == '"') {
      ++pos;
      v.kind = ConfigValue::Kind::String;
      while (pos < s.size() && s[pos] != '"') v.s += s[pos++];
      if (pos >= s.size()) fail("unterminated string");
      ++pos;
      return v;
    }
    if (c == '[') {
      ++pos;
      v.kind = ConfigValue::Kind::Array;
      skip_all();
      if (pos < s.size() && s[pos] == ']') {
        ++pos;
        return v;
      }
      for (;;) {
        v.arr.push_back(value());
        skip_all();
        if (pos < s.size() && s[pos] == ',') {
          ++pos;
          skip_all();
          if (pos < s.size() && s[pos] == ']') {
            ++pos;
            return v;
          }
          continue;
        }
        expect(']');
        return v;
      }
    }
    if (c == '{') {
      ++pos;
      v.kind = ConfigValue::Kind::Table;
      skip_all();
      if (pos < s.size() && s[pos] == '}') {
        ++pos;
        return v;
      }
      for (;;) {
        skip_all();
        std::string k = key();
        expect('=');
        v.table.emplace_back(k, value());
        skip_all();
        if (pos < s.size() && s[pos] == ',') {
          ++pos;
          continue;
        }
        expect('}');
        return v;
      }
    }
    if (s.compare(pos, 4, "true") == 0) {
      pos += 4;
      v.kind = ConfigValue::Kind::Bool;
      v.b = true;
      return v;
    }
    if (s.compare(pos, 5, "false") == 0) {
      pos += 5;
      v.kind = ConfigValue::Kind::Bool;
      return v;
    }
    if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t b = pos++;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      v.kind = ConfigValue::Kind::Int;
      try {
        v.i = std::stoll(s.substr(b, pos - b));
      } catch (const std::exception&) {
        fail("bad integer");
      }
      return v;
    }
    // bare words are accepted as strings (e.g. preset = A2split)
    std::size_t b = pos;
    while (pos < s.size() && !std::isspace(static_cast<unsigned char>(s[pos])) && s[pos] != ',' && s[pos] != ']' && s[pos] != '}' && s[pos] != '#') ++pos;
    v.kind = ConfigValue::Kind::String;
    v.s = s.substr(b, pos - b);
    return v;
  }
};

}  // namespace

const ConfigValue* ConfigValue::find(const std::string& key) const {
  for (const auto& [k, v] : table)
    if (k == key) return &v;
  return nullptr;
}

long long ConfigValue::as_int() const {
  if (kind != Kind::Int) throw ConfigError("expected an integer");
  return i;
}

const std::string& ConfigValue::as_string() const {
  if (kind != Kind::String) throw ConfigError("expected a string");
  return s;
}

std::vector<long long> ConfigValue::as_int_list() const {
  if (kind != Kind::Array) throw ConfigError("expected an array");
  std::vector<long long> out;
  for (const auto& x : arr) out.push_back(x.as_int());
  return out;
}

ConfigTable parse_config(const std::string& text) {
  ConfigParser p{text};
  ConfigTable out;
  std::string section;
  for (;;) {
    p.skip_all();
    if (p.pos >= text.size()) break;
    if (text[p.pos] == '[') {
      ++p.pos;
      section = p.key();
      p.expect(']');
      continue;
    }
    std::string k = p.key();
    p.expect('=');
    ConfigValue v = p.value();
    p.skip_inline();
    if (p.pos < text.size() && text[p.pos] != '\n') p.fail("trailing characters after value");
    out.emplace_back(section.empty() ? k : section + "." + k, std::move(v));
  }
  return out;
}

ConfigTable load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

const ConfigValue* config_find(const ConfigTable& t, const std::string& key) {
  for (const auto& [k, v] : t)
    if (k == key) return &v;
  return nullptr;
}

CartanData load_satake(const ConfigTable& t) {
  const ConfigValue* cart = config_find(t, "cartan");
  if (!cart) cart = config_find(t, "satake.cartan");
  if (!cart || cart->kind != ConfigValue::Kind::Table) throw ConfigError("missing `cartan = {...}` block");
  std::string name = "custom";
  if (const auto* nm = config_find(t, "name")) name = nm->as_string();
  CartanData base;
  if (const auto* ty = cart->find("type")) {
    const auto* rk = cart->find("rank");
    if (!rk) throw ConfigError("cartan block with `type` needs `rank`");
    const std::string& tn = ty->as_string();
    if (tn.size() != 1) throw ConfigError("cartan type must be a single letter");
    base = finite_type(tn[0], static_cast<int>(rk->as_int()));
  } else if (const auto* mat = cart->find("matrix")) {
    std::vector<std::vector<int>> c;
    for (const auto& row : mat->arr) {
      std::vector<int> r;
      for (auto x : row.as_int_list()) r.push_back(static_cast<int>(x));
      c.push_back(r);
    }
    std::vector<int> d(c.size(), 1);
    if (const auto* dv = cart->find("d")) {
      d.clear();
      for (auto x : dv->as_int_list()) d.push_back(static_cast<int>(x));
    }
    base = CartanData(name, c, d);
  } else {
    throw ConfigError("cartan block needs `type`/`rank` or `matrix`");
  }
  std::vector<int> tau;
  for (int i = 0; i < base.rank(); ++i) tau.push_back(i);
  const ConfigValue* tv = config_find(t, "tau");
  if (!tv) tv = config_find(t, "satake.tau");
  if (tv) {
    if (tv->kind != ConfigValue::Kind::Array) throw ConfigError("tau must be a list of cycles");
    for (const auto& cyc : tv->arr) {
      auto idx = cyc.as_int_list();
      if (idx.size() != 2) throw ConfigError("tau cycles must be transpositions");
      const long long a = idx[0] - 1, b = idx[1] - 1;
      if (a < 0 || b < 0 || a >= base.rank() || b >= base.rank()) throw ConfigError("tau index out of range");
      tau[static_cast<std::size_t>(a)] = static_cast<int>(b);
      tau[static_cast<std::size_t>(b)] = static_cast<int>(a);
    }
  }
  CartanData out = base.with_tau(tau, name);
  if (auto err = out.validate()) throw ConfigError("invalid Satake datum: " + *err);
  return out;
}

}  // namespace ihopf
