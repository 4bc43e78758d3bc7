// Acceptance run: one PASS/FAIL line per criterion, exact equality throughout,
// wall-clock limits included. Exit status is 0 only if every line is PASS.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "bcx/classify.hpp"
#include "bcx/decompose.hpp"
#include "bcx/error.hpp"
#include "bcx/examples.hpp"
#include "bcx/expr.hpp"
#include "bcx/operators.hpp"
#include "bcx/verify.hpp"

using namespace bcx;

namespace {

constexpr std::uint64_t kSeed = 20240607;

struct Outcome {
  bool ok = true;
  std::string detail;
};

Outcome suites(const std::vector<std::string>& names, std::uint64_t trials) {
  VerifyConfig cfg;
  cfg.trials = trials;
  cfg.seed = kSeed;
  Outcome out;
  std::ostringstream detail;
  for (const auto& name : names) {
    const SuiteResult r = run_suite(name, cfg);
    detail << name << " " << r.trials << " trials " << r.failures << " failures";
    if (r.retries > 0) detail << " " << r.retries << " resampled";
    detail << "; ";
    if (!r.passed()) {
      out.ok = false;
      if (r.first_counterexample) detail << "counterexample " << dump(*r.first_counterexample) << "; ";
    }
  }
  out.detail = detail.str();
  return out;
}

Outcome worked_block() {
  const BicomplexFunction F1 = reference_F1();
  const BicomplexFunction G1 = reference_G1();
  std::vector<std::pair<std::string, bool>> checks;
  checks.emplace_back("Delta_1 F1 = 0", laplacian(1).apply(F1).is_zero());
  checks.emplace_back("d_ac d_bc F1 = 1",
                      F1.plus().derivative(Var::alpha_bar).derivative(Var::beta_bar) == Poly4::constant(1) &&
                          laplacian(5).apply(F1) == BicomplexFunction::constant(Bicomplex(1)));
  checks.emplace_back("signature F1 = (2,2,2)", polyholo_signature(F1) == Signature{2, 2, 2});
  checks.emplace_back("re_c G1 = F1", G1.real_part() == F1);
  const std::map<Index3, BicomplexFunction> basis = {{{1, 0, 1}, BicomplexFunction::constant(Bicomplex(2))},
                                                     {{1, 1, 0}, BicomplexFunction::constant(Bicomplex(2))}};
  checks.emplace_back("G1 = 2 Z*(Z^dagger + Z~)",
                      expand_conjugate_basis(G1).coeffs == basis && parse("2*star(Z)*(dag(Z) + til(Z))") == G1);
  bool raised = false;
  try {
    (void)rehyp_to_holomorphic(F1);
  } catch (const PreconditionViolation&) {
    raised = true;
  }
  checks.emplace_back("rehyp_to_holomorphic(F1) raises", raised);
  for (const auto& c : worked_example_checks()) checks.emplace_back(c.name, c.passed);

  Outcome out;
  std::size_t passed = 0;
  for (const auto& [name, ok] : checks) {
    if (ok) {
      ++passed;
    } else {
      out.ok = false;
      out.detail += "failed: " + name + "; ";
    }
  }
  out.detail += std::to_string(passed) + "/" + std::to_string(checks.size()) + " checks; ";
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return "<missing " + path + ">";
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome serialization() {
  Outcome out = suites({"serialization"}, 500);
  const std::string dir = BCX_GOLDEN_DIR;
  const std::vector<std::pair<std::string, std::string>> golden = {
      {"F1.txt", format(reference_F1())},
      {"G1.txt", format(reference_G1())},
      {"F1.json", dump(to_json(reference_F1()))},
      {"G1.json", dump(to_json(reference_G1()))},
      {"worked_examples.json", dump(worked_examples(ValueEncoding::text))},
      {"worked_examples_exact.json", dump(worked_examples(ValueEncoding::exact))},
  };
  std::size_t stable = 0;
  for (const auto& [file, produced] : golden) {
    if (produced + "\n" == slurp(dir + "/" + file)) {
      ++stable;
    } else {
      out.ok = false;
      out.detail += "golden mismatch " + file + "; ";
    }
  }
  out.detail += std::to_string(stable) + "/" + std::to_string(golden.size()) + " golden files byte-identical; ";
  return out;
}

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "algebraic identities", 1.0, [] { return suites({"algebra-identities"}, 1000); }},
      {2, "operator conjugation calculus", 2.0, [] { return suites({"conjugation-rotation"}, 1000); }},
      {3, "reduction identities", 10.0, [] { return suites({"reduction-lemma"}, 1000); }},
      {4, "reference counterexample block", 1.0, worked_block},
      {5, "hyperbolic real part of bc-holomorphic functions", 5.0, [] { return suites({"rehyp-roundtrip"}, 500); }},
      {6, "Almansi decompositions", 10.0, [] { return suites({"almansi-roundtrip"}, 500); }},
      {7, "first-kind polyholomorphic real parts", 10.0, [] { return suites({"first-kind-rehyp"}, 500); }},
      {8, "main decomposition", 15.0, [] { return suites({"mainthm-i", "mainthm-ii"}, 500); }},
      {9, "classification oracle equivalence", 5.0, [] { return suites({"classify-oracle"}, 1000); }},
      {10, "serialization and golden files", 2.0, serialization},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what() + "; "};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.limit_seconds;
    const bool pass = o.ok && in_time;
    if (!pass) ++failed;
    std::printf("%s criterion %d (%s): %s%.3f s of %.0f s%s\n", pass ? "PASS" : "FAIL", c.id, c.title.c_str(),
                o.detail.c_str(), secs, c.limit_seconds, in_time ? "" : " (over time limit)");
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
