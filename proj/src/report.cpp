#include "plrs/report.hpp"

#include <sstream>

#include "plrs/error.hpp"

namespace plrs {

Json int_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return v.convert_to<std::int64_t>();
  }
  return v.str();
}

Json vector_json(const CoefficientVector& cv) {
  return std::vector<std::uint64_t>(cv.values().begin(), cv.values().end());
}

Json proof_json(const ProofTag& tag) {
  Json j;
  j["rule"] = rule_name(tag.rule);
  j["params"] = tag.params;
  if (tag.basis) j["basis"] = proof_json(*tag.basis);
  return j;
}

Json verdict_json(const CompletenessVerdict& v) {
  Json j;
  j["vector"] = vector_json(v.vector);
  j["verdict"] = kind_name(v.kind());
  j["horizon"] = v.horizon;
  j["proof"] = nullptr;
  j["first_failure"] = nullptr;
  j["witness"] = nullptr;
  if (const auto* c = std::get_if<Complete>(&v.outcome)) j["proof"] = proof_json(c->proof);
  if (const auto* inc = std::get_if<Incomplete>(&v.outcome)) {
    j["first_failure"] = inc->first_failure;
    j["witness"] = int_json(inc->witness);
  }
  Json gaps = Json::array();
  for (const auto& g : v.gaps) gaps.push_back(int_json(g));
  j["gaps"] = gaps;
  return j;
}

Json legal_json(const CoefficientVector& cv, const BigInt& n, const DigitString& s) {
  Sequence seq(cv);
  Json terms = Json::array();
  for (std::size_t i = 0; i < s.size(); ++i) terms.push_back(int_json(seq.term(s.size() - i)));
  Json j;
  j["N"] = int_json(n);
  j["digits"] = s.digits;
  j["terms"] = terms;
  j["legal"] = is_legal(cv, s);
  return j;
}

Json distinct_json(const CoefficientVector& cv, std::uint64_t n,
                   const std::optional<DistinctDecomposition>& d) {
  Json j;
  j["N"] = n;
  if (!d) {
    j["indices"] = nullptr;
    j["terms"] = nullptr;
    return j;
  }
  Sequence seq(cv);
  Json terms = Json::array();
  for (auto i : d->indices) terms.push_back(int_json(seq.term(i)));
  j["indices"] = d->indices;
  j["terms"] = terms;
  return j;
}

Json bound_json(const BoundResult& b) {
  return {{"max_n", b.max_n}, {"rule", bound_rule_name(b.rule)}, {"exact", b.exact}};
}

namespace {
Json vectors_json(const std::vector<CoefficientVector>& vs) {
  Json arr = Json::array();
  for (const auto& v : vs) arr.push_back(vector_json(v));
  return arr;
}
}  // namespace

Json census_json(const CensusReport& r, bool include_entries) {
  Json j;
  j["L"] = r.L;
  j["deep_horizon"] = r.deep_horizon;
  j["conjectured_bound"] = r.conjectured_bound;
  j["cap_boundary_included"] = r.cap_boundary_included;
  j["max_first_failure"] = r.max_first_failure;
  j["extremal_vectors"] = vectors_json(r.extremal_vectors);
  j["vectors_scanned"] = r.vectors_scanned;
  j["failing_vectors"] = r.failing_vectors;
  j["equality_window_vectors"] = r.equality_window_vectors;
  j["conjectural_survivors"] = vectors_json(r.conjectural_survivors);
  j["violations"] = vectors_json(r.violations);
  j["conjecture_holds"] = r.conjecture_holds();
  // Vacuous window for L = 1: 2L-1 = 1, yet [c] with c > 2 fails at term 2.
  j["window_floor_applied"] = 2 * r.L - 1 < r.conjectured_bound;
  if (include_entries) {
    Json entries = Json::array();
    for (const auto& e : r.entries) {
      entries.push_back({{"vector", vector_json(e.vector)},
                         {"first_failure", e.first_failure ? Json(*e.first_failure) : Json(nullptr)},
                         {"verdict", kind_name(e.verdict)},
                         {"proof_tag", e.proof_tag}});
    }
    j["entries"] = entries;
  }
  return j;
}

Json figure_json(const std::vector<FigureRow>& rows) {
  Json arr = Json::array();
  for (const auto& r : rows) {
    arr.push_back({{"k", r.k},
                   {"g", r.g},
                   {"empirical_max_n", r.empirical_max_n},
                   {"closed_form_max_n",
                    r.closed_form_max_n ? Json(*r.closed_form_max_n) : Json(nullptr)},
                   {"provenance", r.provenance}});
  }
  return arr;
}

Json envelope(std::string_view command, Json inputs, Json results) {
  Json j;
  j["command"] = command;
  j["inputs"] = std::move(inputs);
  j["results"] = std::move(results);
  j["tool_version"] = kToolVersion;
  return j;
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::vector<std::vector<std::string>> parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  bool any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += ch;
      }
      continue;
    }
    if (ch == '"') {
      quoted = true;
      any = true;
    } else if (ch == ',') {
      row.push_back(std::move(field));
      field.clear();
      any = true;
    } else if (ch == '\n' || ch == '\r') {
      if (ch == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      if (any || !field.empty()) {
        row.push_back(std::move(field));
        rows.push_back(std::move(row));
      }
      field.clear();
      row.clear();
      any = false;
    } else {
      field += ch;
      any = true;
    }
  }
  if (quoted) throw Error("unterminated quoted CSV field");
  if (any || !field.empty()) {
    row.push_back(std::move(field));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string figure_csv(const std::vector<FigureRow>& rows) {
  std::ostringstream out;
  out << kFigureCsvHeader << '\n';
  for (const auto& r : rows) {
    out << r.k << ',' << r.g << ',' << r.empirical_max_n << ',';
    if (r.closed_form_max_n) out << *r.closed_form_max_n;
    out << ',' << csv_field(r.provenance) << '\n';
  }
  return out.str();
}

namespace {
std::uint64_t parse_u64(const std::string& s) {
  std::size_t used = 0;
  const auto v = std::stoull(s, &used);
  if (used != s.size()) throw Error("bad integer field '" + s + "'");
  return v;
}

void expect_header(const std::vector<std::vector<std::string>>& rows, std::string_view header) {
  if (rows.empty()) throw Error("missing CSV header");
  std::string joined;
  for (std::size_t i = 0; i < rows[0].size(); ++i) joined += (i ? "," : "") + rows[0][i];
  if (joined != header) throw Error("unexpected CSV header '" + joined + "'");
}
}  // namespace

std::vector<FigureRow> parse_figure_csv(std::string_view text) {
  const auto rows = parse_csv(text);
  expect_header(rows, kFigureCsvHeader);
  std::vector<FigureRow> out;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& f = rows[i];
    if (f.size() != 5) throw Error("figure CSV row needs 5 fields");
    FigureRow r;
    r.k = parse_u64(f[0]);
    r.g = parse_u64(f[1]);
    r.empirical_max_n = parse_u64(f[2]);
    if (!f[3].empty()) r.closed_form_max_n = parse_u64(f[3]);
    r.provenance = f[4];
    out.push_back(std::move(r));
  }
  return out;
}

std::string census_csv(const CensusReport& r) {
  std::ostringstream out;
  out << kCensusCsvHeader << '\n';
  for (const auto& e : r.entries) {
    out << csv_field(e.vector.csv()) << ',';
    if (e.first_failure) out << *e.first_failure;
    out << ',' << kind_name(e.verdict) << ',' << csv_field(e.proof_tag) << '\n';
  }
  return out.str();
}

std::vector<CensusCsvRow> parse_census_csv(std::string_view text) {
  const auto rows = parse_csv(text);
  expect_header(rows, kCensusCsvHeader);
  std::vector<CensusCsvRow> out;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& f = rows[i];
    if (f.size() != 4) throw Error("census CSV row needs 4 fields");
    out.push_back({f[0], f[1], f[2], f[3]});
  }
  return out;
}

}  // namespace plrs
