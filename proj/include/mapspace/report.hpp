#pragma once

#include "mapspace/identities.hpp"
#include "mapspace/selfclose.hpp"

#include <nlohmann/json.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace mapspace {

using Json = nlohmann::ordered_json;

// [[coefficient "p/q", [labels...]], ...]; the zero polynomial is [].
Json polynomial_json(const Polynomial& p);
Json matrix_json(const Matrix& m);

Json validation_json(const std::string& source, const ValidationResult& v);
Json basis_json(const CanonicalBasis& B);
Json model_json(const Model& M, const std::string& kind);
Json map_json(const AlgebraMap& f);
Json certificate_json(const Splitting& S, const SplittingCertificate& c);
Json ne_report_json(const NEReport& r);
Json identity_report_json(const IdentityReport& r);
Json ranks_json(const std::map<int, std::size_t>& ranks);

// Text form: one "path: value" line per leaf. Term lists print as
// "c l1 l2 + c l1"; empty arrays and objects print as [] and {}.
using FlatEntries = std::vector<std::pair<std::string, std::string>>;
FlatEntries flatten(const Json& j);
std::string render_text(const Json& j);
FlatEntries parse_text(const std::string& text);

// Inverse of the term-list display.
Json parse_terms(const std::string& text);

}  // namespace mapspace
