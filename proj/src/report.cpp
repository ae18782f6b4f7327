#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <sstream>
#include <thread>

#include "ihopf/checks.hpp"

namespace ihopf {

Workspace::Workspace(const CartanData& cd, int truncation)
    : f(cd, truncation), B(f), Bi(B), U(f), Ui(U), bridge(Bi, Ui) {}

void Report::record(const std::string& check, const std::string& anchor, const std::string& params, bool pass,
                    const std::string& witness) {
  records_.push_back(CheckRecord{check, anchor, preset_, params, pass, witness});
}

void Report::expect_zero(const std::string& check, const std::string& anchor, const std::string& params,
                         const BorelElem& d, int rank) {
  record(check, anchor, params, d.is_zero(), d.is_zero() ? std::string() : format_borel(d, rank));
}

void Report::expect_zero(const std::string& check, const std::string& anchor, const std::string& params, const UElem& d,
                         int rank) {
  record(check, anchor, params, d.is_zero(), d.is_zero() ? std::string() : format_u(d, rank));
}

void Report::expect_zero(const std::string& check, const std::string& anchor, const std::string& params,
                         const FreeElem& d) {
  record(check, anchor, params, d.is_zero(), d.is_zero() ? std::string() : format_free(d));
}

void Report::expect_zero(const std::string& check, const std::string& anchor, const std::string& params,
                         const TensorElem& d, int rank) {
  record(check, anchor, params, d.is_zero(), d.is_zero() ? std::string() : format_tensor_elem(d, rank));
}

namespace {

using SuiteFn = void (*)(Workspace&, const SuiteOptions&, Report&);

const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> m = {
      {"hopf-axioms", suite_hopf_axioms},   {"ihopf-core", suite_ihopf_core},
      {"double-iso", suite_double_iso},     {"serre-presentation", suite_serre_presentation},
      {"braid", suite_braid},               {"ibraid", suite_ibraid},
      {"root-vectors", suite_root_vectors}, {"quasi-k", suite_quasi_k},
      {"main-theorem", suite_main_theorem},
  };
  return m;
}

bool has_relative_case(const CartanData& cd, bool need_neighbour) {
  for (int i : cd.orbit_representatives()) {
    const int t = cd.local_type(i);
    if (t != 2 && t != 0 && t != -1) continue;
    if (!need_neighbour) return true;
    for (int j = 0; j < cd.rank(); ++j)
      if (j != i && j != cd.tau(i) && (cd.c(i, j) != 0 || cd.c(cd.tau(i), j) != 0)) return true;
  }
  return false;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"hopf-axioms", "ihopf-core",   "double-iso", "serre-presentation",
                                                 "braid",       "ibraid",       "root-vectors", "quasi-k",
                                                 "main-theorem"};
  return names;
}

bool suite_applies(const std::string& suite, const CartanData& cd) {
  if (!registry().count(suite)) throw ConfigError("unknown suite '" + suite + "'");
  if (suite == "ibraid") return has_relative_case(cd, false);
  if (suite == "root-vectors" || suite == "main-theorem") return has_relative_case(cd, true);
  return true;
}

std::vector<CheckRecord> run_suite(const std::string& suite, const CartanData& cd, const SuiteOptions& opt) {
  auto it = registry().find(suite);
  if (it == registry().end()) throw ConfigError("unknown suite '" + suite + "'");
  Report rep(suite, cd.name());
  if (!suite_applies(suite, cd)) return {};
  // root vectors reach height 8 at the default depth; relative braid relations of
  // order m <= 4 pass through height 2m + 1
  int truncation = std::max({opt.height + 1, 4 + 4 * opt.depth, 8});
  if (suite == "ibraid") truncation = std::max(truncation, 10);
  Workspace ws(cd, truncation);
  it->second(ws, opt, rep);
  return std::move(rep.records());
}

int worker_cap() {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw < 1) hw = 1;
  if (const char* e = std::getenv("IHOPF_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(e, &end, 10);
    if (end != e && *end == '\0' && v >= 1) return static_cast<int>(std::min<long>(v, 1024));
    throw ConfigError(std::string("IHOPF_THREADS must be a positive integer, got '") + e + "'");
  }
  return hw;
}

std::vector<CheckRecord> run_jobs(const std::vector<Job>& jobs, const SuiteOptions& opt, int threads) {
  std::vector<std::vector<CheckRecord>> results(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < jobs.size();) {
      try {
        results[k] = run_suite(jobs[k].suite, jobs[k].cartan, opt);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  const int n = std::max(1, std::min<int>(threads, static_cast<int>(jobs.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<CheckRecord> out;
  for (auto& r : results) std::move(r.begin(), r.end(), std::back_inserter(out));
  return out;
}

std::string report_text(const std::vector<CheckRecord>& records) {
  std::ostringstream os;
  std::size_t fails = 0;
  for (const auto& r : records) {
    os << (r.pass ? "PASS " : "FAIL ") << r.preset << " " << r.id << " [" << r.anchor << "] " << r.params << "\n";
    if (!r.pass) {
      ++fails;
      os << "     witness: " << r.witness << "\n";
    }
  }
  os << records.size() << " checks, " << fails << " failed\n";
  return os.str();
}

std::string report_json(const std::vector<CheckRecord>& records, const SuiteOptions& opt) {
  nlohmann::ordered_json j;
  j["height"] = opt.height;
  j["seed"] = opt.seed;
  j["depth"] = opt.depth;
  std::size_t fails = 0;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : records) {
    nlohmann::ordered_json e;
    e["id"] = r.id;
    e["anchor"] = r.anchor;
    e["preset"] = r.preset;
    e["params"] = r.params;
    e["status"] = r.pass ? "pass" : "fail";
    if (!r.pass) {
      e["witness"] = r.witness;
      ++fails;
    }
    arr.push_back(std::move(e));
  }
  j["total"] = records.size();
  j["failed"] = fails;
  j["checks"] = std::move(arr);
  return j.dump(2) + "\n";
}

}  // namespace ihopf
