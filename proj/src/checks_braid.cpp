#include <algorithm>
#include <map>
#include <numeric>

#include "ihopf/checks.hpp"

namespace ihopf {

namespace {

Scalar vp(int k) { return Scalar::v_pow(k); }

struct Local {
  const CartanData& cd;
  int i;
  int di() const { return cd.d(i); }
  // v_i^{k/2}
  Scalar vh(int k) const { return Scalar::v_half(di() * k); }
  Scalar vk(int k) const { return Scalar::v_pow(di() * k); }
  Scalar q(int n) const { return qint(n, di()); }
  Scalar dm() const { return vp(di()) - vp(-di()); }
};

std::string join_params(const std::vector<int>& p) {
  std::string s;
  for (std::size_t k = 0; k < p.size(); ++k) s += (k ? "," : "") + std::to_string(p[k]);
  return s;
}

std::string ij_params(int i, int j, const std::vector<int>& p = {}) {
  std::string s = "i=" + std::to_string(i + 1) + " j=" + std::to_string(j + 1);
  if (!p.empty()) s += " p=(" + join_params(p) + ")";
  return s;
}

std::vector<UElem> u_generators(const CartanData& cd) {
  std::vector<UElem> g;
  for (int k = 0; k < cd.rank(); ++k) {
    g.push_back(UAlgebra::E(k));
    g.push_back(UAlgebra::F(k));
    g.push_back(UAlgebra::K(cd.alpha(k)));
    g.push_back(UAlgebra::Kp(cd.alpha(k)));
  }
  return g;
}

std::vector<IWordElem> i_generators(const CartanData& cd) {
  std::vector<IWordElem> g;
  for (int k = 0; k < cd.rank(); ++k) {
    g.push_back(IQuantumGroup::B(k));
    g.push_back(IQuantumGroup::k(k, 1));
    g.push_back(IQuantumGroup::k(k, -1));
  }
  return g;
}

template <class F>
UElem evaluate_mapped(UAlgebra& U, const UAlgebra::Relation& r, F&& map) {
  UElem out;
  for (const auto& [c, factors] : r.terms) {
    UElem p = UAlgebra::one();
    for (const UElem& g : factors) p = U.mul(p, map(g));
    out.add(p, c);
  }
  return out;
}

// order of r_i r_j on the root lattice (braid relation length)
int relative_order(const CartanData& cd, int i, int j) {
  for (int m = 1; m <= 12; ++m) {
    bool id = true;
    for (int k = 0; k < cd.rank() && id; ++k) {
      Weight w = cd.alpha(k);
      for (int t = 0; t < m; ++t) w = cd.r(i, cd.r(j, w));
      id = w == cd.alpha(k);
    }
    if (id) return m;
  }
  return 0;
}

bool supported_type(const CartanData& cd, int i) {
  const int t = cd.local_type(i);
  return t == 2 || t == 0 || t == -1;
}

// j outside {i, tau i} joined to the orbit of i
std::vector<int> neighbours(const CartanData& cd, int i) {
  std::vector<int> out;
  for (int j = 0; j < cd.rank(); ++j)
    if (j != i && j != cd.tau(i) && (cd.c(i, j) != 0 || cd.c(cd.tau(i), j) != 0)) out.push_back(j);
  return out;
}

int max_f_degree(const UElem& x) {
  int m = 0;
  for (const auto& [mono, c] : x) m = std::max(m, mono.f.size());
  return m;
}

// ------------------------------------------------------------ root vector cache

class RootVectors {
 public:
  RootVectors(Workspace& ws, RootType t, int i, int j, bool literal_c0 = false)
      : ws_(ws), t_(t), i_(i), j_(j), literal_(literal_c0) {}
  const FreeElem& f(const std::vector<int>& p, bool primed = false) {
    auto key = std::make_pair(primed, p);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    RootVectorSpec s{t_, i_, j_, p, primed};
    return cache_.emplace(key, root_vector(ws_.f, s, literal_)).first->second;
  }
  BorelElem b(const std::vector<int>& p, bool primed = false) { return iota(f(p, primed)); }
  UElem u(const std::vector<int>& p, bool primed = false) { return to_u_plus(f(p, primed)); }

 private:
  Workspace& ws_;
  RootType t_;
  int i_, j_;
  bool literal_;
  std::map<std::pair<bool, std::vector<int>>, FreeElem> cache_;
};

// all parameter tuples in [0, P]^k
std::vector<std::vector<int>> boxes(int k, int P) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(k), 0);
  while (true) {
    out.push_back(cur);
    int p = k - 1;
    while (p >= 0 && cur[static_cast<std::size_t>(p)] == P) cur[static_cast<std::size_t>(p--)] = 0;
    if (p < 0) break;
    ++cur[static_cast<std::size_t>(p)];
  }
  return out;
}

std::size_t param_count(RootType t) { return t == RootType::Split ? 1 : t == RootType::C0 ? 2 : 3; }

}  // namespace

// ------------------------------------------------------------ recursions in B~^i_tau

// Recursion identities relating root vectors, theta's and h's in B~^i_tau.
// Returns lhs - rhs for identity `which` (0..3 as displayed; split has 0..1).
// literal selects the printed indices where they are suspected typos.
BorelElem root_vector_recursion(Workspace& ws, RootType t, int i, int j, const std::vector<int>& p, int which,
                                bool literal) {
  const CartanData& cd = ws.cartan();
  IQuantumBorel& Bi = ws.Bi;
  const Local L{cd, i};
  const int ti = cd.tau(i);
  RootVectors R(ws, t, i, j);
  const Scalar d = L.dm();
  auto h_star = [&](int k, const BorelElem& x) { return Bi.torus_star(cd.alpha(k), x); };
  auto star_h = [&](const BorelElem& x, int k) { return Bi.star_torus(x, cd.alpha(k)); };
  if (t == RootType::Split) {
    const int m = p[0], c = cd.c(i, j);
    const bool pr = which == 1;
    const BorelElem fm = R.b({m}, pr);
    const BorelElem lhs = pr ? Bi.theta_star(i, fm) - Bi.star_theta(fm, i).scaled(L.vk(c + 2 * m))
                             : Bi.star_theta(fm, i) - Bi.theta_star(i, fm).scaled(L.vk(c + 2 * m));
    const BorelElem rhs = R.b({m + 1}, pr).scaled(L.vh(-1) * d * L.q(m + 1)) -
                          h_star(i, R.b({m - 1}, pr)).scaled(L.vh(2 * c + 4 * m + 1) * d * L.q(-c - m + 1));
    return lhs - rhs;
  }
  const int c1 = cd.c(i, j), c2 = cd.c(ti, j);
  if (t == RootType::C0) {
    const int m = p[0], n = p[1];
    const BorelElem f = R.b(p, which >= 2);
    switch (which) {
      case 0: {
        const BorelElem lhs = Bi.star_theta(f, i) - Bi.theta_star(i, f).scaled(L.vk(c1 + 2 * m));
        const BorelElem rhs = R.b({m + 1, n}).scaled(L.vh(-1) * d * L.q(m + 1)) -
                              h_star(ti, R.b({m, n - 1})).scaled(L.vh(2 * c1 + 4 * m + 1) * d * L.q(-c2 - n + 1));
        return lhs - rhs;
      }
      case 1: {
        const BorelElem lhs = Bi.star_theta(f, ti) - Bi.theta_star(ti, f).scaled(L.vk(c2 + 2 * n));
        const BorelElem rhs = R.b({m, n + 1}).scaled(L.vh(-1) * d * L.q(n + 1)) -
                              h_star(i, R.b({m - 1, n})).scaled(L.vh(2 * c2 + 4 * n + 1) * d * L.q(-c1 - m + 1));
        return lhs - rhs;
      }
      case 2: {
        // printed leading term f'_{n,m+1,n}; read as f'_{m+1,n}
        const BorelElem lead = literal ? BorelElem() : R.b({m + 1, n}, true);
        const BorelElem lhs = Bi.theta_star(i, f) - Bi.star_theta(f, i).scaled(L.vk(c1 + 2 * m));
        const BorelElem rhs = lead.scaled(L.vh(-1) * d * L.q(m + 1)) -
                              star_h(R.b({m, n - 1}, true), i).scaled(L.vh(2 * c1 + 4 * m + 1) * d * L.q(-c2 - n + 1));
        return lhs - rhs;
      }
      default: {
        const BorelElem lhs = Bi.theta_star(ti, f) - Bi.star_theta(f, ti).scaled(L.vk(c2 + 2 * n));
        const BorelElem rhs = R.b({m, n + 1}, true).scaled(L.vh(-1) * d * L.q(n + 1)) -
                              star_h(R.b({m - 1, n}, true), ti).scaled(L.vh(2 * c2 + 4 * n + 1) * d * L.q(-c1 - m + 1));
        return lhs - rhs;
      }
    }
  }
  const int a = p[0], b = p[1], c = p[2];
  const bool pr = which >= 2;
  const BorelElem f = R.b(p, pr);
  const int e1 = c1 + 2 * (a + c) - b, e2 = c2 + 2 * b - (a + c);
  if (which == 0 || which == 2) {
    const BorelElem lhs = which == 0 ? Bi.star_theta(f, i) - Bi.theta_star(i, f).scaled(L.vk(e1))
                                     : Bi.theta_star(i, f) - Bi.star_theta(f, i).scaled(L.vk(e1));
    const BorelElem low = R.b({a, b - 1, c}, pr);
    const BorelElem corr = which == 0 ? h_star(ti, low) : star_h(low, i);
    const BorelElem rhs = R.b({a + 1, b, c}, pr).scaled(L.vh(-1) * d * L.q(a + 1)) -
                          corr.scaled(L.vh(2 * e1 + 1) * d * L.q(-c2 - b + c + 1));
    return lhs - rhs;
  }
  // theta_{tau i} identities; printed f'_{a-1,b,c} inside the unprimed one is read as f,
  // and the printed right factor theta_i in the primed one is read as theta_{tau i}
  const BorelElem lhs = which == 1 ? Bi.star_theta(f, ti) - Bi.theta_star(ti, f).scaled(L.vk(e2))
                                   : Bi.theta_star(ti, f) - Bi.star_theta(f, literal ? i : ti).scaled(L.vk(e2));
  const BorelElem lead = R.b({a, b + 1, c}, pr).scaled(L.q(b - a + 1)) + R.b({a - 1, b + 1, c + 1}, pr).scaled(L.q(c + 1));
  const bool low_primed = which == 1 ? literal : true;
  const BorelElem low =
      R.b({a - 1, b, c}, low_primed).scaled(L.q(-c1 - a - 2 * c + b + 1)) + R.b({a, b, c - 1}, pr).scaled(L.q(-c1 - c + 1));
  const BorelElem corr = which == 1 ? h_star(i, low) : star_h(low, ti);
  const BorelElem rhs = lead.scaled(L.vh(-1) * d) - corr.scaled(L.vh(2 * e2 + 1) * d);
  return lhs - rhs;
}

// Commutator identities of root vectors with E's and F's in U~ (lhs - rhs).
// literal drops the [-c-m+1] factors that the two-parameter F-commutators print without.
UElem root_vector_commutator(Workspace& ws, RootType t, int i, int j, const std::vector<int>& p, int which,
                             bool literal) {
  const CartanData& cd = ws.cartan();
  UAlgebra& U = ws.U;
  const Local L{cd, i};
  const int ti = cd.tau(i);
  RootVectors R(ws, t, i, j);
  const Scalar d = L.dm();
  const UElem f = R.u(p);
  auto qcomm = [&](const UElem& x, const UElem& y, const Scalar& q) { return U.mul(x, y) - U.mul(y, x).scaled(q); };
  auto Kf = [&](int k, const UElem& x) { return U.mul(UAlgebra::K(cd.alpha(k)), x); };
  if (t == RootType::Split) {
    const int m = p[0], c = cd.c(i, j);
    if (which == 0)
      return qcomm(f, UAlgebra::E(i), L.vk(c + 2 * m)) - R.u({m + 1}).scaled(L.vh(-1) * d * L.q(m + 1));
    return U.commutator(UAlgebra::F(i), f) - Kf(i, R.u({m - 1})).scaled(L.vh(1) * d * L.q(-c - m + 1));
  }
  const int c1 = cd.c(i, j), c2 = cd.c(ti, j);
  if (t == RootType::C0) {
    const int m = p[0], n = p[1];
    switch (which) {
      case 0: return qcomm(f, UAlgebra::E(i), L.vk(c1 + 2 * m)) - R.u({m + 1, n}).scaled(L.vh(-1) * d * L.q(m + 1));
      case 1: return qcomm(f, UAlgebra::E(ti), L.vk(c2 + 2 * n)) - R.u({m, n + 1}).scaled(L.vh(-1) * d * L.q(n + 1));
      case 2:
        return U.commutator(UAlgebra::F(i), f) -
               Kf(i, R.u({m - 1, n})).scaled(L.vh(1) * d * (literal ? Scalar(1) : L.q(-c1 - m + 1)));
      default:
        return U.commutator(UAlgebra::F(ti), f) -
               Kf(ti, R.u({m, n - 1})).scaled(L.vh(1) * d * (literal ? Scalar(1) : L.q(-c2 - n + 1)));
    }
  }
  const int a = p[0], b = p[1], c = p[2];
  switch (which) {
    case 0:
      return qcomm(f, UAlgebra::E(i), L.vk(2 * (a + c) - b + c1)) - R.u({a + 1, b, c}).scaled(L.vh(-1) * d * L.q(a + 1));
    case 1:
      return qcomm(f, UAlgebra::E(ti), L.vk(2 * b - (a + c) + c2)) -
             (R.u({a, b + 1, c}).scaled(L.q(b - a + 1)) + R.u({a - 1, b + 1, c + 1}).scaled(L.q(c + 1))).scaled(L.vh(-1) * d);
    case 2:
      return U.commutator(UAlgebra::F(i), f) -
             Kf(i, R.u({a - 1, b, c}).scaled(L.q(-c1 - a + b - 2 * c + 1)) + R.u({a, b, c - 1}).scaled(L.q(-c1 - c + 1)))
                 .scaled(L.vh(1) * d);
    default:
      return U.commutator(UAlgebra::F(ti), f) - Kf(ti, R.u({a, b - 1, c})).scaled(L.vh(1) * d * L.q(-c2 - b + c + 1));
  }
}

// Parameters of the primed root vector that T~_{r_i} (resp. T_i on B~^i_tau) sends f_p to.
std::vector<int> transported_params(const CartanData& cd, RootType t, int i, int j, const std::vector<int>& p) {
  const int c1 = cd.c(i, j), c2 = cd.c(cd.tau(i), j);
  if (t == RootType::Split) return {c1 * -1 - p[0]};
  if (t == RootType::C0) return {-c1 - p[0], -c2 - p[1]};
  const int a = p[0], b = p[1], c = p[2];
  return {-c2 - b + c, -c2 - c1 - a - c, -c1 - c};
}

namespace {

const char* type_name(RootType t) { return t == RootType::Split ? "split" : t == RootType::C0 ? "c0" : "cm1"; }

}  // namespace

// ------------------------------------------------------------ suite: braid

void suite_braid(Workspace& ws, const SuiteOptions& opt, Report& rep) {
  const CartanData& cd = ws.cartan();
  UAlgebra& U = ws.U;
  LusztigBraid T(U);
  const int n = cd.rank();
  const auto gens = u_generators(cd);
  const auto rels = U.defining_relations();
  auto uz = [&](const std::string& id, const std::string& anchor, const std::string& params, const UElem& d) {
    rep.expect_zero(id, anchor, params, d, n);
  };
  const std::pair<LusztigVariant, const char*> vars[] = {{LusztigVariant::Prime, "T'"}, {LusztigVariant::DoublePrime, "T''"}};
  for (int i = 0; i < n; ++i) {
    for (const auto& [var, vname] : vars)
      for (int e : {1, -1})
        for (bool script : {false, true}) {
          const std::string tag = std::string(script ? "script " : "") + vname + "_{" + std::to_string(i + 1) + "," +
                                  std::to_string(e) + "}";
          for (const auto& r : rels)
            uz("braid/automorphism", "Lusztig operators are algebra automorphisms", tag + " on " + r.name,
               evaluate_mapped(U, r, [&](const UElem& g) { return T.apply(i, var, e, g, script); }));
        }
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const UElem& x = gens[g];
      const std::string gp = "i=" + std::to_string(i + 1) + " g=" + format_u(x, n);
      uz("braid/inverse", "T'_{i,1} and T''_{i,-1} are mutually inverse", gp, T.T(i, T.T_inv(i, x)) - x);
      uz("braid/inverse", "T'_{i,1} and T''_{i,-1} are mutually inverse", gp + " (reverse order)", T.T_inv(i, T.T(i, x)) - x);
      uz("braid/inverse", "T'_{i,-1} and T''_{i,1} are mutually inverse", gp,
         T.apply(i, LusztigVariant::Prime, -1, T.apply(i, LusztigVariant::DoublePrime, 1, x)) - x);
      for (int e : {1, -1}) {
        uz("braid/sigma", "T'_{i,e} is the sigma-conjugate of T''_{i,-e}", gp + " e=" + std::to_string(e),
           T.apply(i, LusztigVariant::Prime, e, x) - U.sigma(T.apply(i, LusztigVariant::DoublePrime, -e, U.sigma(x))));
        for (const auto& [var, vname] : vars)
          uz("braid/bar", "Lusztig operators commute with the bar involution",
             gp + " " + vname + " e=" + std::to_string(e), U.bar(T.apply(i, var, e, x)) - T.apply(i, var, e, U.bar(x)));
      }
    }
  }
  // braid relations on generators for every pair whose Coxeter exponent is within budget
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const int p = cd.c(i, j) * cd.c(j, i);
      const int m = p == 0 ? 2 : p == 1 ? 3 : p == 2 ? 4 : 6;
      if (m == 6 && opt.depth < 2) continue;
      std::vector<int> w1, w2;
      for (int k = 0; k < m; ++k) {
        w1.push_back(k % 2 ? j : i);
        w2.push_back(k % 2 ? i : j);
      }
      for (const UElem& x : gens) {
        const std::string gp = "i=" + std::to_string(i + 1) + " j=" + std::to_string(j + 1) + " g=" + format_u(x, n);
        uz("braid/braid-relation", "Lusztig operators satisfy the braid relations", gp,
           T.apply_word(w1, x) - T.apply_word(w2, x));
        uz("braid/braid-relation", "rescaled Lusztig operators satisfy the braid relations", gp,
           T.apply_word(w1, x, false, true) - T.apply_word(w2, x, false, true));
      }
    }
}

// ------------------------------------------------------------ suite: ibraid

void suite_ibraid(Workspace& ws, const SuiteOptions& opt, Report& rep) {
  (void)opt;
  const CartanData& cd = ws.cartan();
  IQuantumGroup& Ui = ws.Ui;
  RelativeBraid Rb(Ui);
  const auto gens = i_generators(cd);
  auto iz = [&](const std::string& id, const std::string& anchor, const std::string& params, const IWordElem& d) {
    rep.expect_zero(id, anchor, params, ws.bridge.to_borel(d), cd.rank());
  };
  std::vector<int> reps;
  for (int i : cd.orbit_representatives())
    if (supported_type(cd, i)) reps.push_back(i);
  for (int i : reps) {
    const std::string it = "i=" + std::to_string(i + 1) + " type=" + std::to_string(cd.local_type(i));
    for (const IWordElem& x : gens) {
      const std::string gp = it + " g=" + format_iword(x);
      iz("ibraid/inverse", "relative braid operators are mutually inverse", gp, Rb.apply(i, Rb.apply_inverse(i, x)) - x);
      iz("ibraid/inverse", "relative braid operators are mutually inverse", gp + " (reverse order)",
         Rb.apply_inverse(i, Rb.apply(i, x)) - x);
      iz("ibraid/inverse", "psi-conjugate relative braid operators are mutually inverse", gp,
         Rb.apply_variant(i, RelVariant::PrimeM1, Rb.apply_variant(i, RelVariant::DoublePrime1, x)) - x);
      iz("ibraid/bar", "relative braid operators commute with the bar involution", gp,
         Ui.bar_i(Rb.apply(i, x)) - Rb.apply(i, Ui.bar_i(x)));
    }
    for (int j = 0; j < cd.rank(); ++j) {
      const IWordElem kk = word_product(IQuantumGroup::k(j, 1), IQuantumGroup::k(j, -1));
      iz("ibraid/torus", "relative braid operators preserve k_j k_j^{-1} = 1",
         it + " j=" + std::to_string(j + 1), Rb.apply(i, kk) - IWordElem(GenWord{}));
      // T_i(K_j) = K_{r_i(alpha_j)}
      iz("ibraid/torus", "relative braid operators act on K_alpha through r_i", it + " j=" + std::to_string(j + 1),
         Rb.apply(i, Rb.bbK_weight(cd.alpha(j))) - Rb.bbK_weight(cd.r(i, cd.alpha(j))));
    }
  }
  // relative braid relations between orbit representatives
  for (std::size_t a = 0; a < reps.size(); ++a)
    for (std::size_t b = a + 1; b < reps.size(); ++b) {
      const int i = reps[a], j = reps[b];
      const int m = relative_order(cd, i, j);
      if (m == 0 || 2 * m > 8) continue;
      for (const IWordElem& x : gens) {
        IWordElem l = x, r = x;
        // T_i T_j T_i ... and T_j T_i T_j ... with m factors, rightmost first
        for (int k = m - 1; k >= 0; --k) {
          l = ws.bridge.canonical(Rb.apply(k % 2 ? j : i, l));
          r = ws.bridge.canonical(Rb.apply(k % 2 ? i : j, r));
        }
        iz("ibraid/braid-relation", "relative braid operators satisfy the relative braid relations",
           "i=" + std::to_string(i + 1) + " j=" + std::to_string(j + 1) + " m=" + std::to_string(m) + " g=" + format_iword(x),
           l - r);
      }
    }
}

// ------------------------------------------------------------ suite: root-vectors

void suite_root_vectors(Workspace& ws, const SuiteOptions& opt, Report& rep) {
  const CartanData& cd = ws.cartan();
  const int n = cd.rank();
  const int P = 2 * opt.depth;
  LusztigBraid T(ws.U);
  for (int i : cd.orbit_representatives()) {
    if (!supported_type(cd, i)) continue;
    const RootType t = local_root_type(cd, i);
    const std::size_t k = param_count(t);
    if (t == RootType::Split) {
      // star-side idivided recursion
      const Local L{cd, i};
      for (int parity : {0, 1})
        for (int r = 0; r <= 2 * P; ++r) {
          const BorelElem lhs = ws.Bi.theta_star(i, ws.Bi.eval(idivided_word(cd, i, r, parity)));
          BorelElem rhs = ws.Bi.eval(idivided_word(cd, i, r + 1, parity)).scaled(L.q(r + 1));
          if (r % 2 == parity)
            rhs -= ws.Bi.torus_star(cd.alpha(i), ws.Bi.eval(idivided_word(cd, i, r - 1, parity)))
                       .scaled(L.vk(1) * L.dm() * L.dm() * L.q(r));
          rep.expect_zero("root-vectors/idivided", "idivided powers satisfy their recursion",
                          "i=" + std::to_string(i + 1) + " r=" + std::to_string(r) + " parity=" + std::to_string(parity),
                          lhs - rhs, n);
        }
    }
    for (int j : neighbours(cd, i)) {
      RootVectors R(ws, t, i, j);
      const std::string tn = type_name(t);
      for (const auto& p : boxes(static_cast<int>(k), P)) {
        const std::string pp = ij_params(i, j, p);
        // alternating-sum definitions equal the star expansions
        const bool expandable = t != RootType::Split || p[0] <= std::max(2, 1 - cd.c(i, j));
        for (bool primed : {false, true})
          for (int parity : t == RootType::Split ? std::vector<int>{0, 1} : std::vector<int>{0}) {
            if (!expandable) continue;
            const RootVectorSpec s{t, i, j, p, primed};
            const BorelElem ex = ws.Bi.eval(root_vector_expansion(cd, s, parity));
            rep.expect_zero("root-vectors/expansion", std::string("root vector expansion (") + tn + ")",
                            pp + (primed ? " primed" : "") + " parity=" + std::to_string(parity),
                            ex - R.b(p, primed), n);
          }
        // recursions in B~^i_tau
        const int nid = t == RootType::Split ? 2 : 4;
        for (int w = 0; w < nid; ++w)
          rep.expect_zero("root-vectors/recursion", std::string("root vector recursion in B^i_tau (") + tn + ")",
                          pp + " identity=" + std::to_string(w + 1),
                          root_vector_recursion(ws, t, i, j, p, w, false), n);
        // commutators in U~
        for (int w = 0; w < nid; ++w)
          rep.expect_zero("root-vectors/commutator", std::string("root vector commutators in U (") + tn + ")",
                          pp + " identity=" + std::to_string(w + 1),
                          root_vector_commutator(ws, t, i, j, p, w, false), n);
        // transport by T~_{r_i} in U~
        const UElem lhs = T.T_r(i, R.u(p));
        rep.expect_zero("root-vectors/transport", std::string("T_{r_i} sends f to f' in U (") + tn + ")", pp,
                        lhs - R.u(transported_params(cd, t, i, j, p), true), n);
      }
      if (t == RootType::Split) {
        // adjoint-action form of the root vectors
        const Local L{cd, i};
        for (int m = 0; m <= P; ++m) {
          const FreeElem ad = ws.f.ad_divided(i, m, FreeElem(Word::letter(j)));
          const Scalar s = L.vh(m) * (m ? L.dm().inv().pow(m) : Scalar(1));
          FreeElem rev;
          for (const auto& [w, c] : ad) {
            Word r;
            for (int q = w.size(); q-- > 0;) r.push_back(w[q]);
            rev.add(r, c);
          }
          rep.expect_zero("root-vectors/adjoint", "root vectors through the adjoint action", ij_params(i, j, {m}),
                          ws.f.reduce(ad.scaled(s)) - R.f({m}, true));
          rep.expect_zero("root-vectors/adjoint", "root vectors through the adjoint action (sigma form)",
                          ij_params(i, j, {m}), ws.f.reduce(rev.scaled(s)) - R.f({m}));
        }
      }
    }
  }
}

// ------------------------------------------------------------ suite: quasi-k

void suite_quasi_k(Workspace& ws, const SuiteOptions& opt, Report& rep) {
  const CartanData& cd = ws.cartan();
  const int n = cd.rank();
  UAlgebra& U = ws.U;
  const int N = std::min(opt.height, ws.f.truncation());
  std::vector<std::vector<int>> scopes;
  for (int i : cd.orbit_representatives()) {
    std::vector<int> s{i};
    if (cd.tau(i) != i) s.push_back(cd.tau(i));
    scopes.push_back(s);
  }
  if (n > 1 && n <= 4) {
    std::vector<int> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 0);
    scopes.push_back(all);
  }
  LusztigBraid T(U);
  RelativeBraid Rb(ws.Ui);
  for (const auto& scope : scopes) {
    std::string sc = "scope={";
    for (std::size_t k = 0; k < scope.size(); ++k) sc += (k ? "," : "") + std::to_string(scope[k] + 1);
    sc += "} N=" + std::to_string(N);
    QuasiK Y;
    try {
      Y = quasi_k_solve(U, scope, N);
      rep.record("quasi-k/unique", "quasi K-matrix is uniquely solvable", sc, true);
    } catch (const NonUniqueSolution& e) {
      rep.record("quasi-k/unique", "quasi K-matrix is uniquely solvable", sc, false, e.what());
      continue;
    }
    auto it0 = Y.comp.find(Weight());
    rep.record("quasi-k/normalized", "quasi K-matrix has constant term 1", sc,
               it0 != Y.comp.end() && it0->second == FreeElem(Word()));
    std::string bad;
    for (const auto& [mu, x] : Y.comp)
      if (cd.tau(mu) != mu && !x.is_zero()) bad += mu.to_string(n) + " ";
    rep.record("quasi-k/tau-fixed", "quasi K-matrix components vanish off tau-fixed weights", sc, bad.empty(),
               bad.empty() ? "" : "nonzero at " + bad);
    for (int i : scope) {
      rep.expect_zero("quasi-k/intertwiner", "B_i Y = Y B_i^sigma", sc + " i=" + std::to_string(i + 1),
                      quasi_k_residual(U, Y, i), n);
      rep.expect_zero("quasi-k/torus", "k_i commutes with Y", sc + " i=" + std::to_string(i + 1),
                      quasi_k_torus_residual(U, Y, i), n);
    }
    // rank-one intertwining of the relative and rescaled Lusztig operators
    if (scope.size() <= 2 && supported_type(cd, scope[0])) {
      const int i = scope[0];
      const UElem y = Y.as_u();
      std::vector<std::pair<std::string, IWordElem>> xs = {{"B_i", IQuantumGroup::B(i)},
                                                           {"B_taui", IQuantumGroup::B(cd.tau(i))},
                                                           {"k_i", IQuantumGroup::k(i)}};
      for (const auto& [name, x] : xs) {
        const UElem l = ws.Ui.embed(Rb.apply_inverse(i, x));
        const UElem r = T.T_r_inv(i, ws.Ui.embed(x), true);
        const int cut = N - std::max(max_f_degree(l), max_f_degree(r));
        rep.expect_zero("quasi-k/relative-braid", "T_i^{-1}(x) Y_i = Y_i script-T_{r_i}^{-1}(x)",
                        sc + " x=" + name + " cut=" + std::to_string(cut),
                        truncate_e_height(U.mul(l, y) - U.mul(y, r), cut), n);
      }
    }
  }
}

// ------------------------------------------------------------ suite: main-theorem

void suite_main_theorem(Workspace& ws, const SuiteOptions& opt, Report& rep) {
  const CartanData& cd = ws.cartan();
  const int n = cd.rank();
  LusztigBraid T(ws.U);
  RelativeBraid Rb(ws.Ui);
  const int P = opt.depth;
  for (int i : cd.orbit_representatives()) {
    if (!supported_type(cd, i)) continue;
    const RootType t = local_root_type(cd, i);
    const std::string tn = type_name(t);
    for (int j : neighbours(cd, i)) {
      const BorelElem lhs = ws.bridge.to_borel(Rb.apply(i, IQuantumGroup::B(j)));
      const BorelElem rhs = iota(from_u_plus(T.T_r(i, UAlgebra::E(j))));
      rep.expect_zero("main-theorem/generator", std::string("T_i(theta_j) = iota(T_{r_i}(theta_j)) (") + tn + ")",
                      ij_params(i, j), lhs - rhs, n);
      RootVectors R(ws, t, i, j);
      for (const auto& p : boxes(static_cast<int>(param_count(t)), P)) {
        const IWordElem w = ws.bridge.to_iword(R.b(p));
        const BorelElem img = ws.bridge.to_borel(Rb.apply(i, w));
        rep.expect_zero("main-theorem/root-vector", std::string("T_i(f) = f' in B^i_tau (") + tn + ")",
                        ij_params(i, j, p), img - R.b(transported_params(cd, t, i, j, p), true), n);
      }
    }
  }
}

}  // namespace ihopf
