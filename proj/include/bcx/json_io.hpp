#pragma once

#include <string>
#include <string_view>

#include "bcx/bicomplex.hpp"
#include "bcx/classify.hpp"
#include "bcx/decompose.hpp"
#include "bcx/function.hpp"
#include "bcx/operators.hpp"
#include "json.hpp"

namespace bcx {

using Json = nlohmann::json;

// Exact encodings. A Gaussian rational is [re_n, re_d, im_n, im_d] as decimal
// strings, a bicomplex number is alpha's four followed by beta's four, and a
// polynomial is its sorted term list [[a, b, c, d, coeff], ...].
Json to_json(const GaussianRational& z);
Json to_json(const Bicomplex& z);
Json to_json(const Poly4& p);
/// {"plus": terms, "minus": terms}
Json to_json(const BicomplexFunction& f);
/// {"op_plus": terms, "op_minus": terms}
Json to_json(const Operator& t);
Json to_json(const Signature& s);
Json to_json(const ClassReport& report);

// Strict decoders. Anything non-canonical (unsorted or repeated terms, zero
// coefficients, unreduced fractions, extra keys) throws JsonFormatError whose
// path points at the offending element.
GaussianRational gaussian_from_json(const Json& j, const std::string& path = "$");
Bicomplex bicomplex_from_json(const Json& j, const std::string& path = "$");
Poly4 poly_from_json(const Json& j, const std::string& path = "$");
BicomplexFunction function_from_json(const Json& j, const std::string& path = "$");
Operator operator_from_json(const Json& j, const std::string& path = "$");

/// Compact dump with sorted keys; byte-stable.
std::string dump(const Json& j);
/// Parses JSON text, turning syntax errors into JsonFormatError.
Json parse_json(std::string_view text);

/// How values appear in CLI and report output: canonical text strings, or
/// the exact array encodings above.
enum class ValueEncoding { text, exact };

Json encode(const Bicomplex& z, ValueEncoding enc);
/// In text mode a constant function prints as its bicomplex value ("2"),
/// anything else in the "P | M" form.
Json encode(const BicomplexFunction& f, ValueEncoding enc);
Json encode(const Operator& t, ValueEncoding enc);

/// Keyed by "l1,l2,l3".
Json encode(const ConjugateExpansion& e, ValueEncoding enc);
/// Keyed by "k".
Json encode_zstar(const std::vector<BicomplexFunction>& parts, ValueEncoding enc);
Json encode(const ComplexAlmansi& a, ValueEncoding enc);
Json encode(const BicomplexAlmansi& a, ValueEncoding enc);
Json encode(const FirstKindInversion& inv, ValueEncoding enc);
/// {"n", "k", "G": {"l1,l2": ...}, "f": {...} | null, "non_real": [...]}
Json encode(const MainDecomposition& d, ValueEncoding enc);

}  // namespace bcx
