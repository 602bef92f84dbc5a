#pragma once

#include <string_view>

#include <json.hpp>

#include "latnorm/analysis.hpp"
#include "latnorm/laws.hpp"
#include "latnorm/search.hpp"
#include "latnorm/tnorm.hpp"

namespace latnorm {

using Json = nlohmann::ordered_json;

/// Elements are written as labels; the readers need the same lattice back.
Json to_json(const FiniteLattice& L, const Witness& w);
Witness witness_from_json(const Json& j, const FiniteLattice& L);

Json to_json(const FiniteLattice& L, const ClassificationReport& r);
ClassificationReport classification_from_json(const Json& j, const FiniteLattice& L);

Json to_json(const FiniteLattice& L, const VerificationReport& r);
VerificationReport verification_from_json(const Json& j, const FiniteLattice& L);

/// Tables are written as rows of labels.
Json to_json(const SearchOutcome& o);
SearchOutcome search_outcome_from_json(const Json& j, std::shared_ptr<const FiniteLattice> L);

Json to_json(const LawSuiteReport& r);
LawSuiteReport law_suite_from_json(const Json& j);

/// {"format": 1, "tool", "version", "kind", "input_hash", "result"}.
Json envelope(std::string_view kind, std::string_view input, Json result);

}  // namespace latnorm
