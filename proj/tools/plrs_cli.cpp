// plrs: command-line front end for the completeness laboratory.
//
// Results go to stdout, diagnostics to stderr. Exit codes:
//   0 ok / Complete, 2 invalid input, 3 Incomplete, 4 ConjecturallyComplete,
//   5 cap exceeded, 6 conjecture violation found by the census.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "plrs/error.hpp"
#include "plrs/families.hpp"
#include "plrs/hunt.hpp"
#include "plrs/report.hpp"
#include "plrs/seqcore.hpp"
#include "plrs/verdicts.hpp"
#include "plrs/zeck.hpp"

namespace {

using namespace plrs;

enum Exit { kOk = 0, kInternal = 1, kInvalid = 2, kIncomplete = 3, kConjectural = 4, kCap = 5, kViolation = 6 };

struct Common {
  std::string format = "text";
  unsigned jobs = 1;
};

void add_format(CLI::App* cmd, Common& common, const std::string& fallback = "text") {
  common.format = fallback;
  cmd->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
}

void emit_json(std::string_view command, Json inputs, Json results) {
  std::cout << envelope(command, std::move(inputs), std::move(results)).dump(2) << '\n';
}

Range parse_range(const std::string& text) {
  Range r;
  auto sep = text.find("..");
  std::size_t skip = 2;
  if (sep == std::string::npos) {
    sep = text.find('-');
    skip = 1;
  }
  try {
    if (sep == std::string::npos) {
      r.lo = r.hi = std::stoull(text);
    } else {
      r.lo = std::stoull(text.substr(0, sep));
      r.hi = std::stoull(text.substr(sep + skip));
    }
  } catch (const std::exception&) {
    throw Error("cannot parse range '" + text + "' (expected a..b)");
  }
  return r;
}

std::vector<std::uint64_t> parse_prefix(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream in(text);
  for (std::string tok; std::getline(in, tok, ',');) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(tok, &used);
      if (v < 0) throw Error("prefix entries must be nonnegative");
      out.push_back(static_cast<std::uint64_t>(v));
    } catch (const std::logic_error&) {
      throw Error("cannot parse prefix entry '" + tok + "'");
    }
  }
  return out;
}

std::string verdict_text(const CompletenessVerdict& v) {
  std::ostringstream out;
  out << v.vector.str() << ": " << kind_name(v.kind());
  if (const auto* c = std::get_if<Complete>(&v.outcome)) {
    out << " (" << rule_name(c->proof.rule);
    for (auto p : c->proof.params) out << ' ' << p;
    for (auto b = c->proof.basis; b; b = b->basis) out << " <- " << rule_name(b->rule);
    out << ')';
  } else if (const auto* inc = std::get_if<Incomplete>(&v.outcome)) {
    out << " (first failure at n=" << inc->first_failure << ", smallest unrepresentable "
        << inc->witness << ')';
  } else {
    out << " (no Brown failure through n=" << v.horizon << ", no proof rule applies)";
  }
  return out.str();
}

int exit_for(const CompletenessVerdict& v) {
  switch (v.kind()) {
    case VerdictKind::Complete: return kOk;
    case VerdictKind::Incomplete: return kIncomplete;
    case VerdictKind::ConjecturallyComplete: return kConjectural;
  }
  return kInternal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Completeness laboratory for positive linear recurrence sequences"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);
  Common common;
  int code = kOk;

  // gen
  std::string vec_text;
  std::size_t count = 10;
  auto* gen = app.add_subcommand("gen", "List the first terms H_1..H_count");
  gen->add_option("vector", vec_text, "Coefficients, e.g. 1,3")->required();
  gen->add_option("--count", count, "Number of terms")->check(CLI::PositiveNumber)->capture_default_str();
  add_format(gen, common);

  // analyze
  AnalysisConfig config;
  config.oracle_cap = 10000;
  bool no_family = false;
  auto* analyze = app.add_subcommand("analyze", "Classify a vector as complete or incomplete");
  analyze->add_option("vector", vec_text)->required();
  analyze->add_option("--horizon", config.horizon, "Brown scan horizon (default max(2L-1, 2))");
  analyze->add_option("--oracle-cap", config.oracle_cap, "Subset-sum cross-check bound")
      ->check(CLI::PositiveNumber)->capture_default_str();
  analyze->add_flag("--no-family-rules", no_family, "Skip the closed-form family bounds");
  add_format(analyze, common);

  // decompose
  std::string n_text;
  std::string mode = "both";
  std::uint64_t trace_cap = kDefaultTraceCap;
  auto* decompose = app.add_subcommand("decompose", "Legal and distinct-terms decompositions");
  decompose->add_option("vector", vec_text)->required();
  decompose->add_option("N", n_text, "Nonnegative integer")->required();
  decompose->add_option("--mode", mode)->check(CLI::IsMember({"legal", "distinct", "both"}))->capture_default_str();
  decompose->add_option("--oracle-cap", trace_cap, "Largest N for distinct decompositions")->capture_default_str();
  add_format(decompose, common);

  // bound
  bool single = false, dbl = false, gones = false, corollary = false;
  std::uint64_t k = 1, g = 1;
  std::size_t L = 4, pos = 2;
  auto* bound = app.add_subcommand("bound", "Closed-form maximal last coefficient");
  auto* family_group = bound->add_option_group("family");
  family_group->add_flag("--single-one", single, "[1, 0 x k, N]");
  family_group->add_flag("--double-one", dbl, "[1, 1, 0 x k, N]");
  family_group->add_flag("--g-ones", gones, "[1 x g, 0 x k, N], g >= k");
  family_group->add_flag("--corollary", corollary, "shifted single one, L >= 6");
  family_group->require_option(1);
  bound->add_option("--k", k, "Interior zeros");
  bound->add_option("--g", g, "Leading ones");
  bound->add_option("--L,-L", L, "Vector length (corollary)");
  bound->add_option("--i", pos, "Shifted position (corollary)");
  add_format(bound, common);

  // maxn
  std::string prefix_text;
  auto* maxn = app.add_subcommand("maxn", "Empirical maximal last coefficient for a prefix");
  maxn->add_option("prefix", prefix_text, "Coefficients without the last, e.g. 1,1,0,0")->required();
  maxn->add_option("--horizon", config.horizon);
  maxn->add_flag("--no-family-rules", no_family);
  add_format(maxn, common);

  // census
  std::size_t census_L = 4;
  std::size_t deep_horizon = 0;
  bool deep = false;
  bool with_entries = false;
  std::string checkpoint;
  auto* census = app.add_subcommand("census", "Exhaustive first-failure census at length L");
  census->add_option("--L,-L", census_L, "Vector length")->check(CLI::PositiveNumber)->capture_default_str();
  census->add_option("--deep-horizon", deep_horizon, "Scan depth (default 4L)");
  census->add_flag("--deep", deep, "Allow L >= 5");
  census->add_option("--jobs,-j", common.jobs)->check(CLI::PositiveNumber);
  census->add_option("--checkpoint", checkpoint, "Shard checkpoint file for resumable runs");
  census->add_flag("--entries", with_entries, "Include per-vector rows in JSON output");
  add_format(census, common);

  // figure
  std::string k_range = "1..4", g_range = "1..8";
  auto* figure = app.add_subcommand("figure", "Maximal N over the [1 x g, 0 x k, N] grid");
  figure->add_option("--k", k_range, "k range, a..b")->capture_default_str();
  figure->add_option("--g", g_range, "g range, a..b")->capture_default_str();
  figure->add_option("--jobs,-j", common.jobs)->check(CLI::PositiveNumber);
  figure->add_flag("--no-family-rules", no_family);
  add_format(figure, common, "csv");

  // front-ones
  std::uint64_t g_max = 5;
  auto* front = app.add_subcommand("front-ones", "Check that adding a leading one keeps completeness");
  front->add_option("--k", k)->required();
  front->add_option("--g-max", g_max)->capture_default_str();
  add_format(front, common);

  // fail2l
  auto* fail2l = app.add_subcommand("fail2l", "First failure of [1 x k, 0, 4]");
  fail2l->add_option("--k", k)->required();
  add_format(fail2l, common);

  CLI11_PARSE(app, argc, argv);
  config.use_family_rules = !no_family;
  const std::string& fmt = common.format;

  try {
    if (*gen) {
      const auto cv = CoefficientVector::parse(vec_text);
      const auto terms = terms_prefix(cv, count);
      if (fmt == "json") {
        Json arr = Json::array();
        for (const auto& t : terms) arr.push_back(int_json(t));
        emit_json("gen", {{"vector", vector_json(cv)}, {"count", count}}, {{"terms", arr}});
      } else if (fmt == "csv") {
        std::cout << "n,H\n";
        for (std::size_t i = 0; i < terms.size(); ++i) std::cout << i + 1 << ',' << terms[i] << '\n';
      } else {
        for (std::size_t i = 0; i < terms.size(); ++i) std::cout << (i ? " " : "") << terms[i];
        std::cout << '\n';
      }
    } else if (*analyze) {
      const auto cv = CoefficientVector::parse(vec_text);
      const auto v = classify(cv, config);
      const auto oracle = is_complete_up_to(cv, config.oracle_cap, config.oracle_bits);
      if (fmt == "json") {
        Json res = verdict_json(v);
        res["oracle"] = {{"cap", config.oracle_cap},
                         {"complete_up_to_cap", oracle.complete},
                         {"smallest_missing", oracle.smallest_missing ? Json(*oracle.smallest_missing) : Json(nullptr)}};
        emit_json("analyze",
                  {{"vector", vector_json(cv)}, {"horizon", v.horizon}, {"oracle_cap", config.oracle_cap},
                   {"family_rules", config.use_family_rules}},
                  res);
      } else if (fmt == "csv") {
        const auto j = verdict_json(v);
        std::cout << "vector,verdict,proof,first_failure,witness,horizon\n"
                  << csv_field(cv.csv()) << ',' << kind_name(v.kind()) << ','
                  << (v.proof() ? rule_name(v.proof()->rule) : "") << ','
                  << (j["first_failure"].is_null() ? "" : j["first_failure"].dump()) << ','
                  << (v.is_incomplete() ? std::get<Incomplete>(v.outcome).witness.str() : "") << ','
                  << v.horizon << '\n';
      } else {
        std::cout << verdict_text(v) << '\n' << "gaps:";
        for (const auto& gap : v.gaps) std::cout << ' ' << gap;
        std::cout << '\n' << "oracle (targets 1.." << config.oracle_cap << "): "
                  << (oracle.complete ? "all representable"
                                      : "smallest missing " + std::to_string(*oracle.smallest_missing))
                  << '\n';
      }
      code = exit_for(v);
    } else if (*decompose) {
      const auto cv = CoefficientVector::parse(vec_text);
      BigInt n;
      try {
        n = BigInt(n_text);
      } catch (const std::exception&) {
        throw Error("cannot parse N '" + n_text + "'");
      }
      if (n < 0) throw Error("N must be nonnegative");
      Json res = Json::object();
      std::ostringstream text, csv;
      csv << "mode,N,representation\n";
      if (mode != "distinct") {
        const auto s = legal_decompose(cv, n);
        res["legal"] = legal_json(cv, n, s);
        res["legal_text"] = format_legal(cv, s);
        text << "legal: " << n << " = " << format_legal(cv, s) << '\n';
        csv << "legal," << n << ',' << csv_field(format_legal(cv, s)) << '\n';
      }
      if (mode != "legal") {
        if (n == 0) {
          res["distinct"] = Json{{"N", 0}, {"indices", Json::array()}, {"terms", Json::array()}};
          res["distinct_text"] = "empty";
          text << "distinct: 0 = empty\n";
          csv << "distinct,0,empty\n";
        } else {
          if (n > trace_cap) throw CapError("N exceeds the distinct-decomposition cap " + std::to_string(trace_cap));
          const auto small = n.convert_to<std::uint64_t>();
          const auto d = distinct_decompose(cv, small, trace_cap);
          const std::string repr = d ? format_distinct(cv, *d) : "none";
          res["distinct"] = distinct_json(cv, small, d);
          res["distinct_text"] = repr;
          text << "distinct: " << (d ? n.str() + " = " + repr : repr) << '\n';
          csv << "distinct," << n << ',' << csv_field(repr) << '\n';
        }
      }
      if (fmt == "json") {
        emit_json("decompose", {{"vector", vector_json(cv)}, {"N", int_json(n)}, {"mode", mode}}, res);
      } else {
        std::cout << (fmt == "csv" ? csv.str() : text.str());
      }
    } else if (*bound) {
      BoundResult b{};
      Json inputs;
      if (single) {
        b = max_n_single_one(k);
        inputs = {{"family", "single-one"}, {"k", k}};
      } else if (dbl) {
        b = max_n_double_one(k);
        inputs = {{"family", "double-one"}, {"k", k}};
      } else if (gones) {
        inputs = {{"family", "g-ones"}, {"g", g}, {"k", k}};
        auto r = max_n_g_ones(g, k);
        if (!r) throw OutOfRange("no closed form for g < k");
        b = *r;
      } else {
        b = corollary_shift_bound(L, pos);
        inputs = {{"family", "corollary"}, {"L", L}, {"i", pos}};
      }
      if (fmt == "json") {
        emit_json("bound", inputs, bound_json(b));
      } else if (fmt == "csv") {
        std::cout << "rule,max_n,exact\n" << bound_rule_name(b.rule) << ',' << b.max_n << ',' << b.exact << '\n';
      } else {
        std::cout << b.max_n << '\n';
      }
    } else if (*maxn) {
      const auto prefix = parse_prefix(prefix_text);
      const auto m = empirical_max_n(prefix, config);
      if (fmt == "json") {
        emit_json("maxn", {{"prefix", prefix}, {"family_rules", config.use_family_rules}},
                  {{"max_n", m.max_n}, {"proven_max_n", m.proven_max_n}, {"provenance", m.provenance}});
      } else if (fmt == "csv") {
        std::cout << "prefix,max_n,proven_max_n,provenance\n"
                  << csv_field(prefix_text) << ',' << m.max_n << ',' << m.proven_max_n << ',' << m.provenance << '\n';
      } else {
        std::cout << m.max_n << " (proven " << m.proven_max_n << ", " << m.provenance << ")\n";
      }
    } else if (*census) {
      if (census_L >= 5 && !deep) throw OutOfRange("census at L >= 5 needs --deep");
      CensusOptions opts;
      opts.deep_horizon = deep_horizon;
      opts.jobs = common.jobs;
      opts.keep_entries = fmt == "csv" || with_entries;
      if (!checkpoint.empty()) opts.checkpoint = checkpoint;
      CensusReport report;
      try {
        report = first_failure_census(census_L, opts);
      } catch (const ConjectureViolation& v) {
        std::cerr << "plrs: conjecture violation: " << v.what() << '\n';
        report = v.report();
        code = kViolation;
      }
      if (fmt == "json") {
        emit_json("census", {{"L", census_L}, {"deep_horizon", report.deep_horizon}},
                  census_json(report, with_entries));
      } else if (fmt == "csv") {
        std::cout << census_csv(report);
      } else {
        std::cout << "L=" << report.L << " scanned=" << report.vectors_scanned
                  << " failing=" << report.failing_vectors << " max_first_failure=" << report.max_first_failure
                  << " bound=" << report.conjectured_bound
                  << " conjectural_survivors=" << report.equality_window_vectors << '\n'
                  << "extremal:";
        for (const auto& v : report.extremal_vectors) std::cout << ' ' << v.str();
        std::cout << '\n' << (report.conjecture_holds() ? "no counterexample" : "COUNTEREXAMPLE FOUND") << '\n';
      }
    } else if (*figure) {
      const auto rows = figure1_table(parse_range(k_range), parse_range(g_range), config, common.jobs);
      if (fmt == "json") {
        emit_json("figure", {{"k", k_range}, {"g", g_range}, {"family_rules", config.use_family_rules}},
                  figure_json(rows));
      } else if (fmt == "csv") {
        std::cout << figure_csv(rows);
      } else {
        for (const auto& r : rows) {
          std::cout << "k=" << r.k << " g=" << r.g << " max N=" << r.empirical_max_n;
          if (r.closed_form_max_n) std::cout << " (closed form " << *r.closed_form_max_n << ")";
          std::cout << '\n';
        }
      }
    } else if (*front) {
      const auto r = add_front_ones_scan(k, g_max, config);
      Json violations = Json::array();
      for (const auto& v : r.violations) violations.push_back({{"g", v.g}, {"N", v.n}});
      if (fmt == "json") {
        emit_json("front-ones", {{"k", k}, {"g_max", g_max}},
                  {{"max_n_by_g", r.max_n_by_g}, {"violations", violations}});
      } else if (fmt == "csv") {
        std::cout << "g,max_n\n";
        for (std::size_t i = 0; i < r.max_n_by_g.size(); ++i) std::cout << i + 1 << ',' << r.max_n_by_g[i] << '\n';
      } else {
        for (std::size_t i = 0; i < r.max_n_by_g.size(); ++i) {
          std::cout << "g=" << i + 1 << " max N=" << r.max_n_by_g[i] << '\n';
        }
        std::cout << r.violations.size() << " violations\n";
      }
    } else if (*fail2l) {
      const auto n = check_fail_at_2l_minus_1(k);
      if (fmt == "json") {
        emit_json("fail2l", {{"k", k}}, {{"first_failure", n}, {"expected", 2 * k + 3}});
      } else if (fmt == "csv") {
        std::cout << "k,first_failure\n" << k << ',' << n << '\n';
      } else {
        std::cout << n << '\n';
      }
    }
  } catch (const CapError& e) {
    std::cerr << "plrs: " << e.what() << '\n';
    return kCap;
  } catch (const Error& e) {
    std::cerr << "plrs: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "plrs: internal error: " << e.what() << '\n';
    return kInternal;
  }
  return code;
}
