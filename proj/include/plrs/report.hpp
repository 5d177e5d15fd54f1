#pragma once

// JSON and CSV encodings shared by the CLI and the Python module.
//
// Integers that fit in 64 bits are JSON numbers; larger ones are decimal
// strings. Object keys are sorted, so equal inputs give identical bytes.

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "plrs/families.hpp"
#include "plrs/hunt.hpp"
#include "plrs/verdicts.hpp"
#include "plrs/zeck.hpp"

namespace plrs {

inline constexpr std::string_view kToolVersion = "0.3.0";

using Json = nlohmann::json;

Json int_json(const BigInt& v);
Json vector_json(const CoefficientVector& cv);
Json proof_json(const ProofTag& tag);
/// {vector, verdict, proof, first_failure, witness, horizon, gaps}
Json verdict_json(const CompletenessVerdict& v);
/// {N, digits, terms, legal}; terms[i] is the term digits[i] multiplies.
Json legal_json(const CoefficientVector& cv, const BigInt& n, const DigitString& s);
Json distinct_json(const CoefficientVector& cv, std::uint64_t n,
                   const std::optional<DistinctDecomposition>& d);
Json bound_json(const BoundResult& b);
Json census_json(const CensusReport& r, bool include_entries);
Json figure_json(const std::vector<FigureRow>& rows);

Json envelope(std::string_view command, Json inputs, Json results);

/// RFC 4180 style: quote fields containing ',', '"' or newlines.
std::string csv_field(std::string_view s);
std::vector<std::vector<std::string>> parse_csv(std::string_view text);

inline constexpr std::string_view kFigureCsvHeader =
    "k,g,empirical_max_n,closed_form_max_n,provenance";
inline constexpr std::string_view kCensusCsvHeader = "vector,first_failure,verdict,proof_tag";

std::string figure_csv(const std::vector<FigureRow>& rows);
std::vector<FigureRow> parse_figure_csv(std::string_view text);

struct CensusCsvRow {
  std::string vector;
  std::string first_failure;
  std::string verdict;
  std::string proof_tag;
  friend bool operator==(const CensusCsvRow&, const CensusCsvRow&) = default;
};

std::string census_csv(const CensusReport& r);
std::vector<CensusCsvRow> parse_census_csv(std::string_view text);

}  // namespace plrs
