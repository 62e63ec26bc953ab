#pragma once

#include <nlohmann/json.hpp>

#include "fusedlink/lemmas.hpp"
#include "fusedlink/reducer.hpp"

namespace fusedlink {

/// JSON interchange. Words are strings in the braid-word grammar with an
/// `n=<m>` header; moves are {kind, pos, params}; traces are
/// {start, moves, end}; certificates add a `format` tag and macro steps
/// {kind, input, output, trace | null, params}.
inline constexpr const char* kCertificateFormat = "fusedlink-certificate/1";

void to_json(nlohmann::json& j, const BraidWord& w);
void from_json(const nlohmann::json& j, BraidWord& w);
void to_json(nlohmann::json& j, const MoveApplication& a);
void from_json(const nlohmann::json& j, MoveApplication& a);
void to_json(nlohmann::json& j, const RewriteTrace& t);
void from_json(const nlohmann::json& j, RewriteTrace& t);
void to_json(nlohmann::json& j, const LastStrandDecomposition& d);
void from_json(const nlohmann::json& j, LastStrandDecomposition& d);
void to_json(nlohmann::json& j, const CertificateStep& s);
void from_json(const nlohmann::json& j, CertificateStep& s);
void to_json(nlohmann::json& j, const Certificate& c);
void from_json(const nlohmann::json& j, Certificate& c);
void to_json(nlohmann::json& j, const SquareMatrix& m);

/// {n, lambda, beta (letters only), labeling}.
void to_json(nlohmann::json& j, const CanonicalForm& f);
void to_json(nlohmann::json& j, const CertificateReport& r);
void to_json(nlohmann::json& j, const ChainStep& s);
void to_json(nlohmann::json& j, const LemmaReport& r);
void to_json(nlohmann::json& j, const DerivationReport& r);

/// components, component_of, permutation, pure, classical, crossing_sums,
/// and linking_matrix (null when some crossing sum is odd).
nlohmann::json invariants_json(const BraidWord& w);

}  // namespace fusedlink
