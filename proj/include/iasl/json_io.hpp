#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "iasl/construct.hpp"
#include "iasl/labeling.hpp"
#include "iasl/oracle.hpp"
#include "iasl/search.hpp"

namespace iasl {

using Json = nlohmann::json;

Json to_json(const IntegerSet& s);
Json to_json(const Edge& e);
Json to_json(const Graph& g);
/// {"graph6": ..., "labels": [[...], ...]}
Json to_json(const SetLabeling& f);
Json to_json(const ClassificationReport& r);
/// Labeling JSON plus "repairs" and the classification of the result.
Json to_json(const ConstructionOutcome& o);
Json to_json(const UniformOutcome& o);
Json to_json(const LiteralCounterexample& c);
Json to_json(const SearchConfig& c);
Json to_json(const Certificate& c);
Json to_json(const GroundSetResult& r);
Json to_json(const BinomialBound& b);
Json to_json(const TheoremCheck& c);
Json to_json(const SuiteReport& s);

/// Parses JSON text. Syntax errors become ParseError with the line and
/// 0-based byte offset within that line.
Json parse_json_text(std::string_view text, std::size_t first_line = 1);

/// Reads a label list: either a bare array of integer arrays or an object
/// with a "labels" member.
std::vector<IntegerSet> labels_from_json(const Json& j);

/// Reads {"graph6": ..., "labels": ...}.
SetLabeling labeling_from_json(const Json& j);

}  // namespace iasl
