// Verification suites: each check compares two exactly computed sides of an
// identity and records the outcome with a witness (lhs - rhs) on failure.
#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "ihopf/braid.hpp"

namespace ihopf {

struct CheckRecord {
  std::string id;      // suite/check
  std::string anchor;  // name of the statement being checked
  std::string preset;
  std::string params;
  bool pass = false;
  std::string witness;  // empty on success
};

struct SuiteOptions {
  int height = 4;           // weight-height bound for random and graded checks
  std::uint64_t seed = 1;   // base seed; every check derives its own stream
  int depth = 1;            // multiplier for parameter ranges and sample counts
};

// All algebras of one preset, owned by a single worker.
struct Workspace {
  Workspace(const CartanData& cd, int truncation);
  Workspace(const Workspace&) = delete;
  Workspace& operator=(const Workspace&) = delete;

  const CartanData& cartan() const { return f.cartan(); }
  int rank() const { return f.rank(); }

  FreeAlgebra f;
  BorelAlgebra B;
  IQuantumBorel Bi;
  UAlgebra U;
  IQuantumGroup Ui;
  IStarBridge bridge;
};

class Report {
 public:
  Report(std::string suite, std::string preset) : suite_(std::move(suite)), preset_(std::move(preset)) {}
  void record(const std::string& check, const std::string& anchor, const std::string& params, bool pass,
              const std::string& witness = {});
  // passes iff the difference vanishes; the witness is formatted lazily
  template <class E>
  void expect_zero(const std::string& check, const std::string& anchor, const std::string& params, const E& diff,
                   const std::function<std::string(const E&)>& fmt) {
    const bool ok = diff.is_zero();
    record(check, anchor, params, ok, ok ? std::string() : fmt(diff));
  }
  void expect_zero(const std::string& check, const std::string& anchor, const std::string& params, const BorelElem& d,
                   int rank);
  void expect_zero(const std::string& check, const std::string& anchor, const std::string& params, const UElem& d,
                   int rank);
  void expect_zero(const std::string& check, const std::string& anchor, const std::string& params, const FreeElem& d);
  void expect_zero(const std::string& check, const std::string& anchor, const std::string& params, const TensorElem& d,
                   int rank);

  const std::vector<CheckRecord>& records() const { return records_; }
  std::vector<CheckRecord>& records() { return records_; }

 private:
  std::string suite_, preset_;
  std::vector<CheckRecord> records_;
};

// Suite registry.
const std::vector<std::string>& suite_names();
// True when the suite has at least one check for the preset.
bool suite_applies(const std::string& suite, const CartanData& cd);
// Runs one suite on one preset in a fresh workspace; throws ConfigError for an unknown suite.
std::vector<CheckRecord> run_suite(const std::string& suite, const CartanData& cd, const SuiteOptions& opt);

// Individual suites, exposed for tests and the acceptance driver.
void suite_hopf_axioms(Workspace& ws, const SuiteOptions& opt, Report& rep);
void suite_ihopf_core(Workspace& ws, const SuiteOptions& opt, Report& rep);
void suite_double_iso(Workspace& ws, const SuiteOptions& opt, Report& rep);
void suite_serre_presentation(Workspace& ws, const SuiteOptions& opt, Report& rep);
void suite_braid(Workspace& ws, const SuiteOptions& opt, Report& rep);
void suite_ibraid(Workspace& ws, const SuiteOptions& opt, Report& rep);
void suite_root_vectors(Workspace& ws, const SuiteOptions& opt, Report& rep);
void suite_quasi_k(Workspace& ws, const SuiteOptions& opt, Report& rep);
void suite_main_theorem(Workspace& ws, const SuiteOptions& opt, Report& rep);

// Root-vector identities used by the root-vectors suite; each returns lhs - rhs.
// `which` selects the displayed identity (0-based, in printed order); `literal`
// reproduces the printed form where it differs from the adopted reading.
BorelElem root_vector_recursion(Workspace& ws, RootType t, int i, int j, const std::vector<int>& p, int which,
                                bool literal = false);
UElem root_vector_commutator(Workspace& ws, RootType t, int i, int j, const std::vector<int>& p, int which,
                             bool literal = false);
// parameters of the primed root vector that the braid operator sends f_p to
std::vector<int> transported_params(const CartanData& cd, RootType t, int i, int j, const std::vector<int>& p);

// One (preset, suite) job; the scheduler runs jobs on up to `threads` workers
// and returns records ordered by job index, then by emission order.
struct Job {
  CartanData cartan;
  std::string suite;
};
std::vector<CheckRecord> run_jobs(const std::vector<Job>& jobs, const SuiteOptions& opt, int threads);
// Worker cap from IHOPF_THREADS (default: hardware concurrency, at least 1).
int worker_cap();

// Serialization; both are deterministic functions of the records.
std::string report_text(const std::vector<CheckRecord>& records);
std::string report_json(const std::vector<CheckRecord>& records, const SuiteOptions& opt);

}  // namespace ihopf
