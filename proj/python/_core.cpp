// Thin binding: every call returns the same JSON document the CLI prints, as a
// string. Library errors surface as bcx._core.Error whose message is the
// structured error JSON.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bcx/commands.hpp"
#include "bcx/examples.hpp"
#include "bcx/expr.hpp"
#include "bcx/verify.hpp"

namespace py = pybind11;

namespace {

bcx::CommandOptions options(bool raw, bool exact) {
  return {raw, exact ? bcx::ValueEncoding::exact : bcx::ValueEncoding::text};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact bicomplex polynomial function algebra";

  static py::exception<bcx::Error> error(m, "Error");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const bcx::Error& e) {
      bcx::Json j = bcx::error_json(e);
      j["exit_code"] = bcx::error_exit_code(e);
      error(bcx::dump(j).c_str());
    }
  });

  m.def("evaluate",
        [](const std::string& expr, const std::string& at, bool raw, bool exact) {
          return bcx::dump(bcx::eval_command(expr, at, options(raw, exact)));
        },
        py::arg("expr"), py::arg("at"), py::arg("raw") = false, py::arg("exact") = false);
  m.def("apply",
        [](const std::string& op, const std::string& expr, bool raw, bool exact) {
          return bcx::dump(bcx::apply_command(op, expr, options(raw, exact)));
        },
        py::arg("op"), py::arg("expr"), py::arg("raw") = false, py::arg("exact") = false);
  m.def("classify",
        [](const std::string& expr, bool raw) { return bcx::dump(bcx::classify_command(expr, options(raw, false))); },
        py::arg("expr"), py::arg("raw") = false);
  m.def("decompose",
        [](const std::string& kind, const std::string& expr, std::optional<std::uint32_t> n,
           std::optional<std::uint32_t> k, std::optional<std::string> pair, bool raw, bool exact) {
          return bcx::dump(bcx::decompose_command(kind, expr, n, k, pair, options(raw, exact)));
        },
        py::arg("kind"), py::arg("expr"), py::arg("n") = py::none(), py::arg("k") = py::none(),
        py::arg("pair") = py::none(), py::arg("raw") = false, py::arg("exact") = false);
  m.def("canonical",
        [](const std::string& expr, bool raw) { return bcx::format(bcx::read_function(expr, options(raw, false))); },
        py::arg("expr"), py::arg("raw") = false);
  m.def("function_json",
        [](const std::string& expr, bool raw) {
          return bcx::dump(bcx::to_json(bcx::read_function(expr, options(raw, false))));
        },
        py::arg("expr"), py::arg("raw") = false);
  m.def("verify",
        [](const std::string& suite, std::uint64_t trials, std::uint64_t seed, std::uint32_t max_degree,
           std::uint32_t coeff_bound) {
          if (suite != "all" && !bcx::is_suite(suite)) throw bcx::Error("UnknownSuite", "unknown suite '" + suite + "'");
          bcx::VerifyConfig cfg;
          cfg.trials = trials;
          cfg.seed = seed;
          cfg.gen.max_degree = max_degree;
          cfg.gen.coeff_bound = coeff_bound;
          py::gil_scoped_release release;
          return bcx::dump(bcx::to_json(bcx::run_verify(suite, cfg)));
        },
        py::arg("suite") = "all", py::arg("trials") = 100, py::arg("seed") = 0, py::arg("max_degree") = 4,
        py::arg("coeff_bound") = 9);
  m.def("suite_names", &bcx::suite_names);
  m.def("worked_examples",
        [](bool exact) {
          return bcx::dump(bcx::worked_examples(exact ? bcx::ValueEncoding::exact : bcx::ValueEncoding::text));
        },
        py::arg("exact") = false);
}
