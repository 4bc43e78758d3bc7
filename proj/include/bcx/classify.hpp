#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>

#include "bcx/function.hpp"
#include "bcx/operators.hpp"

namespace bcx {

/// Minimal (m, n, k) with dZstar^m f = dZtilde^n f = dZdagger^k f = 0.
/// The zero function has signature (0, 0, 0).
struct Signature {
  std::uint32_t m = 0;
  std::uint32_t n = 0;
  std::uint32_t k = 0;

  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Smallest n >= 0 with T^n f = 0. The iteration cap is 2 + total degree of
/// f; reaching it throws NotNilpotent.
std::uint32_t polyharmonic_order(const BicomplexFunction& f, const Operator& t);

/// Signature from component degrees:
///   m = 1 + max(deg_{conj alpha} f+, deg_{conj beta} f-)
///   n = 1 + max(deg_{conj beta} f+, deg_{conj alpha} f-)
///   k = 1 + max(deg_{beta} f+, deg_{alpha} f-)
/// with the degree of a zero component counted as -1.
Signature polyholo_signature(const BicomplexFunction& f);

/// Same triple, found by applying each Wirtinger operator until the result
/// vanishes. Independent of the degree bookkeeping above.
Signature polyholo_signature_iterated(const BicomplexFunction& f);

struct ClassReport {
  Signature signature;
  bool is_bc_holomorphic = false;
  /// (m, n) when f+ depends only on (alpha, conj alpha) and f- only on (beta, conj beta).
  std::optional<std::pair<std::uint32_t, std::uint32_t>> a1_orders;
  /// max(m, n) whenever a1_orders is present.
  std::optional<std::uint32_t> zstar_order;
  /// Polyharmonic orders with respect to Delta_1 ... Delta_7.
  std::array<std::uint32_t, 7> laplacian_orders{};
};

ClassReport class_membership(const BicomplexFunction& f);

}  // namespace bcx
