#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "bcx/function.hpp"

namespace bcx {

using Index3 = std::array<std::uint32_t, 3>;
using Index2 = std::array<std::uint32_t, 2>;

/// f = sum over (l1, l2, l3) of (Z*)^l1 (Z~)^l2 (Z^dagger)^l3 H_{l1 l2 l3},
/// every H bc-holomorphic. Only nonzero coefficients are stored.
struct ConjugateExpansion {
  std::map<Index3, BicomplexFunction> coeffs;

  BicomplexFunction reconstruct() const;
};

ConjugateExpansion expand_conjugate_basis(const BicomplexFunction& f);

/// f = sum_{k < l} (Z*)^k g_k with g_k bc-holomorphic and g_{l-1} != 0.
/// Throws NotInClass unless f+ uses only (alpha, conj alpha) and f- only
/// (beta, conj beta). The zero function expands to an empty list.
std::vector<BicomplexFunction> expand_zstar(const BicomplexFunction& f);
BicomplexFunction reconstruct_zstar(const std::vector<BicomplexFunction>& parts);

/// Complex Almansi form u = sum_k (z conj z)^k h_k with every h_k harmonic.
/// Monomial z^p conj(z)^q goes to slot min(p, q) with residual
/// z^{p-q} or conj(z)^{q-p}.
struct ComplexAlmansi {
  VariablePair pair = VariablePair::alpha;
  std::vector<Poly4> parts;

  Poly4 reconstruct() const;
};

/// Throws WrongVariables if u uses the other variable pair.
ComplexAlmansi almansi_complex(const Poly4& u, VariablePair pair);

/// F = sum_{k < m} (Z Z*)^k H_k with Delta_bc H_k = 0 and
/// Z Z* = alpha conj(alpha) e+ + beta conj(beta) e-. The plus component is
/// split in the alpha pair (beta variables ride along as parameters), the
/// minus component in the beta pair.
struct BicomplexAlmansi {
  std::vector<BicomplexFunction> parts;

  BicomplexFunction reconstruct() const;
};

BicomplexAlmansi almansi_bicomplex(const BicomplexFunction& f);

/// Polyanalytic f with Re f == u for a real-valued u in one variable pair:
///   f = sum_{p > q} 2 c_pq z^p conj(z)^q + sum_p c_pp (z conj z)^p.
/// The output never holds a monomial whose conj(z) power exceeds its z power.
/// Throws NotRealValued or WrongVariables.
Poly4 repart_to_polyanalytic(const Poly4& u, VariablePair pair);

/// bc-holomorphic f with (f + f*)/2 == F, normalized to a zero hyperbolic
/// imaginary constant. Requires F hyperbolic-valued (NotHyperbolicValued) and
/// Delta_bc F = dZdagger F = dZtilde F = 0 (PreconditionViolation naming
/// the first failure, checked in that order).
BicomplexFunction rehyp_to_holomorphic(const BicomplexFunction& F);

struct FirstKindInversion {
  BicomplexFunction f;
  /// f lies in A^[1]_{r,s}: r - 1 and s - 1 are the conjugate degrees of f+ and f-.
  std::uint32_t r = 0;
  std::uint32_t s = 0;
};

/// First-kind polyholomorphic f with (f + f*)/2 == F. Requires F
/// hyperbolic-valued with dZdagger F = dZtilde F = 0.
FirstKindInversion rehyp_to_polyholomorphic_A1(const BicomplexFunction& F);

/// A coefficient function that blocked the refined decomposition.
struct NonRealCoefficient {
  Index2 index;
  char component;  // '+' for a_{l1 l2}, '-' for b_{l1 l2}

  friend bool operator==(const NonRealCoefficient&, const NonRealCoefficient&) = default;
};

/// F = sum_{l1 < n, l2 < k} G_{l1 l2} (Z^dagger)^l1 (Z~)^l2 with
/// G_{l1 l2} = a_{l1 l2}(alpha, conj alpha) e+ + b_{l1 l2}(beta, conj beta) e-.
/// `refined` holds first-kind f_{l1 l2} with G_{l1 l2} = (f + f*)/2 and is
/// present only when every a and b is real-valued; otherwise `non_real`
/// lists the offending coefficients.
struct MainDecomposition {
  std::uint32_t n = 0;
  std::uint32_t k = 0;
  std::map<Index2, BicomplexFunction> g;
  std::optional<std::map<Index2, BicomplexFunction>> refined;
  std::vector<NonRealCoefficient> non_real;

  BicomplexFunction reconstruct() const;
  /// Sum of (f + f*)/2 (Z^dagger)^l1 (Z~)^l2; requires `refined`.
  BicomplexFunction reconstruct_refined() const;
};

/// Requires F hyperbolic-valued, dZdagger^n F = 0 and dZtilde^k F = 0.
MainDecomposition main_decomposition(const BicomplexFunction& F, std::uint32_t n, std::uint32_t k);

/// Powers of the conjugate coordinate functions used by the expansions.
BicomplexFunction zstar_power(std::uint32_t e);
BicomplexFunction ztilde_power(std::uint32_t e);
BicomplexFunction zdagger_power(std::uint32_t e);
/// Z Z* raised to e.
BicomplexFunction bc_modulus_power(std::uint32_t e);

}  // namespace bcx
