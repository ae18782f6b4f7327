// Python bindings: presets, expression evaluation and verification runs.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ihopf/expr.hpp"
#include "ihopf/scenario.hpp"

namespace py = pybind11;
using namespace ihopf;

namespace {

py::dict record_dict(const CheckRecord& r) {
  py::dict d;
  d["id"] = r.id;
  d["anchor"] = r.anchor;
  d["preset"] = r.preset;
  d["params"] = r.params;
  d["passed"] = r.pass;
  d["witness"] = r.witness;
  return d;
}

ScenarioConfig make_config(const std::vector<std::string>& presets, const std::optional<std::vector<std::string>>& suites,
                           int height, std::uint64_t seed, int depth) {
  ScenarioConfig cfg;
  cfg.presets = presets;
  if (suites) {
    cfg.suites = *suites;
    cfg.suites_given = true;
  }
  cfg.options.height = height;
  cfg.options.seed = seed;
  cfg.options.depth = depth;
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact iHopf and iquantum group computations";

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def("list_presets", [] {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& p : preset_list()) out.emplace_back(p.name, p.summary);
    return out;
  }, "(name, summary) of every shipped Satake datum");

  m.def("preset_info", [](const std::string& name) {
    const CartanData cd = preset(name);
    py::dict d;
    d["name"] = cd.name();
    d["rank"] = cd.rank();
    std::vector<std::vector<int>> c(cd.rank(), std::vector<int>(cd.rank()));
    std::vector<int> dd, tau;
    for (int i = 0; i < cd.rank(); ++i) {
      for (int j = 0; j < cd.rank(); ++j) c[i][j] = cd.c(i, j);
      dd.push_back(cd.d(i));
      tau.push_back(cd.tau(i) + 1);
    }
    d["cartan"] = c;
    d["d"] = dd;
    d["tau"] = tau;  // 1-based images
    return d;
  }, py::arg("name"));

  m.def("suite_names", &suite_names);
  m.def("eval_contexts", &eval_contexts);

  m.def("evaluate", [](const std::string& expr, const std::string& ctx, const std::string& preset_name, int height) {
    const EvalResult r = eval_expression(expr, ctx, preset(preset_name), height);
    py::dict d;
    d["normal_form"] = r.normal_form;
    d["gradings"] = r.gradings;
    if (!r.embedding.empty()) d["embedding"] = r.embedding;
    return d;
  }, py::arg("expr"), py::arg("ctx") = "f", py::arg("preset") = "A2split", py::arg("height") = 8,
     "Normal form and gradings of an expression; raises ParseError");

  m.def("verify", [](const std::vector<std::string>& presets, const std::optional<std::vector<std::string>>& suites,
                     int height, std::uint64_t seed, int depth, int threads) {
    const ScenarioConfig cfg = make_config(presets, suites, height, seed, depth);
    const auto jobs = scenario_jobs(cfg);
    std::vector<CheckRecord> rs;
    {
      py::gil_scoped_release release;
      rs = run_jobs(jobs, cfg.options, threads > 0 ? threads : worker_cap());
    }
    py::list out;
    for (const auto& r : rs) out.append(record_dict(r));
    return out;
  }, py::arg("presets"), py::arg("suites") = py::none(), py::arg("height") = 4, py::arg("seed") = 1,
     py::arg("depth") = 1, py::arg("threads") = 0, "Run suites; one dict per check");

  m.def("report_json", [](const std::vector<std::string>& presets, const std::optional<std::vector<std::string>>& suites,
                          int height, std::uint64_t seed, int depth) {
    const ScenarioConfig cfg = make_config(presets, suites, height, seed, depth);
    const auto jobs = scenario_jobs(cfg);
    std::string s;
    {
      py::gil_scoped_release release;
      s = report_json(run_jobs(jobs, cfg.options, worker_cap()), cfg.options);
    }
    return s;
  }, py::arg("presets"), py::arg("suites") = py::none(), py::arg("height") = 4, py::arg("seed") = 1,
     py::arg("depth") = 1, "Deterministic JSON report of a run");
}
