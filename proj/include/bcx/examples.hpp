#pragma once

#include <string>
#include <vector>

#include "bcx/function.hpp"
#include "bcx/json_io.hpp"

namespace bcx {

/// F1 = (alpha + conj alpha)(beta + conj beta) in both components: real
/// valued and Delta_1-harmonic, yet not the hyperbolic real part of any
/// bc-holomorphic function.
BicomplexFunction reference_F1();
/// G1 = 2 conj(alpha)(beta + conj beta) e+ + 2 conj(beta)(alpha + conj alpha) e-,
/// i.e. 2 Z* (Z^dagger + Z~), whose classical real part is F1.
BicomplexFunction reference_G1();

struct ExampleCheck {
  std::string name;
  bool passed = false;
};

/// The fixed worked examples as pass/fail checks.
std::vector<ExampleCheck> worked_example_checks();

/// {"examples": {...computed outputs...}, "checks": {name: bool}, "passed": bool}
Json worked_examples(ValueEncoding enc);

}  // namespace bcx
