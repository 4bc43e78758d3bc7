#pragma once

// The operations exposed by the command-line tool and the Python module,
// each returning the JSON document that the CLI prints.

#include <cstdint>
#include <optional>
#include <string>

#include "bcx/error.hpp"
#include "bcx/json_io.hpp"
#include "bcx/operators.hpp"

namespace bcx {

struct CommandOptions {
  /// Accept a, ac, b, bc outside the `P | M` form.
  bool raw_idempotent = false;
  ValueEncoding encoding = ValueEncoding::text;
};

/// An expression, or function JSON when the text starts with '{'.
BicomplexFunction read_function(const std::string& text, const CommandOptions& opts);

struct OperatorSpec {
  Operator base;
  unsigned power = 1;
};
/// dZ, dZs, dZd, dZt or d1..d7, optionally followed by ^power.
/// Throws Error("InvalidOperator").
OperatorSpec parse_operator_spec(const std::string& spec);

Json eval_command(const std::string& expr, const std::string& point, const CommandOptions& opts);
Json apply_command(const std::string& op, const std::string& expr, const CommandOptions& opts);
Json classify_command(const std::string& expr, const CommandOptions& opts);
/// kind: conjbasis, zstar, almansi, rehyp-holo, rehyp-a1 or main. `main`
/// needs n and k; `pair` ("alpha" or "beta") selects complex Almansi.
Json decompose_command(const std::string& kind, const std::string& expr, std::optional<std::uint32_t> n,
                       std::optional<std::uint32_t> k, const std::optional<std::string>& pair,
                       const CommandOptions& opts);

/// {"error": kind, "message": ..., plus "condition", "position" or "path" when known}.
Json error_json(const Error& e);
/// 2 for malformed input (usage, syntax, JSON, unknown names), 1 for domain errors.
int error_exit_code(const Error& e);

}  // namespace bcx
