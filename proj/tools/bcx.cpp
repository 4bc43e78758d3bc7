// bcx: command-line front end. All machine output is JSON on stdout; errors
// are JSON on stderr. Exit codes: 0 success, 1 domain error or failed
// verification, 2 usage or input-syntax error.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "bcx/commands.hpp"
#include "bcx/examples.hpp"
#include "bcx/verify.hpp"

namespace {

struct Globals {
  bool json = false;
  bool raw = false;
  std::uint64_t seed = 0;
  std::uint64_t trials = 100;
  std::uint32_t max_degree = 4;
  std::uint32_t coeff_bound = 9;

  bcx::CommandOptions options() const {
    return {raw, json ? bcx::ValueEncoding::exact : bcx::ValueEncoding::text};
  }
};

void emit(const bcx::Json& j) { std::cout << bcx::dump(j) << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  Globals g;
  CLI::App app{"Exact bicomplex function algebra: evaluate, differentiate, classify, decompose, verify"};
  app.require_subcommand(1);
  app.add_flag("--json", g.json, "Emit exact array encodings instead of canonical text values");
  app.add_flag("--raw-idempotent", g.raw, "Accept the tokens a, ac, b, bc for alpha, conj alpha, beta, conj beta");
  app.add_option("--seed", g.seed, "Seed for verify");
  app.add_option("--trials", g.trials, "Trials per verify suite");
  app.add_option("--max-degree", g.max_degree, "Largest exponent per variable in random functions");
  app.add_option("--coeff-bound", g.coeff_bound, "Bound on random numerators and denominators");

  std::string expr;
  std::string point;
  auto* eval = app.add_subcommand("eval", "Evaluate an expression at a bicomplex point");
  eval->add_option("expr", expr, "Expression in Z")->required();
  eval->add_option("--at", point, "Bicomplex literal, e.g. \"1 + 2i + 3j + 4k\"")->required();

  std::string op_spec;
  auto* apply = app.add_subcommand("apply", "Apply dZ, dZs, dZd, dZt or d1..d7 (optionally ^power)");
  apply->add_option("op", op_spec, "Operator spec")->required();
  apply->add_option("expr", expr, "Expression")->required();

  auto* classify = app.add_subcommand("classify", "Signature, class membership and Laplacian orders");
  classify->add_option("expr", expr, "Expression")->required();

  std::string kind;
  std::optional<std::uint32_t> n_opt;
  std::optional<std::uint32_t> k_opt;
  std::string pair;
  auto* decompose = app.add_subcommand("decompose", "Expansions and real-part inversions");
  decompose->add_option("kind", kind, "conjbasis | zstar | almansi | rehyp-holo | rehyp-a1 | main")
      ->required()
      ->check(CLI::IsMember({"conjbasis", "zstar", "almansi", "rehyp-holo", "rehyp-a1", "main"}));
  decompose->add_option("expr", expr, "Expression")->required();
  decompose->add_option("--n", n_opt, "Power of dZdagger annihilating F (main)");
  decompose->add_option("--k", k_opt, "Power of dZtilde annihilating F (main)");
  decompose->add_option("--pair", pair, "Complex Almansi in one pair: alpha (plus component) or beta (minus)")
      ->check(CLI::IsMember({"alpha", "beta"}));

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "Run seeded randomized verification suites");
  verify->add_option("suite", suite, "Suite name or all");

  auto* examples = app.add_subcommand("paper-examples", "Reproduce the fixed worked examples");

  for (auto* sub : {eval, apply, classify, decompose, verify, examples}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << bcx::dump({{"error", "UsageError"}, {"message", e.what()}}) << '\n';
    return 2;
  }

  try {
    const bcx::CommandOptions opts = g.options();
    if (eval->parsed()) {
      emit(bcx::eval_command(expr, point, opts));
    } else if (apply->parsed()) {
      emit(bcx::apply_command(op_spec, expr, opts));
    } else if (classify->parsed()) {
      emit(bcx::classify_command(expr, opts));
    } else if (decompose->parsed()) {
      emit(bcx::decompose_command(kind, expr, n_opt, k_opt, pair.empty() ? std::nullopt : std::optional(pair), opts));
    } else if (verify->parsed()) {
      if (suite != "all" && !bcx::is_suite(suite)) throw bcx::Error("UnknownSuite", "unknown suite '" + suite + "'");
      bcx::VerifyConfig config;
      config.trials = g.trials;
      config.seed = g.seed;
      config.gen.max_degree = g.max_degree;
      config.gen.coeff_bound = g.coeff_bound;
      const bcx::VerifyReport report = bcx::run_verify(suite, config);
      emit(bcx::to_json(report));
      return report.exit_code();
    } else if (examples->parsed()) {
      const bcx::Json out = bcx::worked_examples(opts.encoding);
      emit(out);
      return out["passed"].get<bool>() ? 0 : 1;
    }
  } catch (const bcx::Error& e) {
    std::cerr << bcx::dump(bcx::error_json(e)) << '\n';
    return bcx::error_exit_code(e);
  }
  return 0;
}
