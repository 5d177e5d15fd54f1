#include "plrs/hunt.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "plrs/families.hpp"

namespace plrs {

VectorSpace::VectorSpace(std::size_t L, std::uint64_t beyond_cap) : L_(L) {
  if (L == 0) throw OutOfRange("vector length must be positive");
  if (L > 12) throw OutOfRange("census enumeration is limited to L <= 12");
  for (std::size_t i = 1; i <= L; ++i) {
    const std::uint64_t cap = (std::uint64_t{1} << i) + beyond_cap;
    const std::uint64_t lo = (i == 1 || i == L) ? 1 : 0;
    lo_.push_back(lo);
    radix_.push_back(cap - lo + 1);
    size_ *= radix_.back();
  }
}

CoefficientVector VectorSpace::at(std::uint64_t rank) const {
  if (rank >= size_) throw OutOfRange("rank beyond the enumeration");
  std::vector<std::int64_t> raw(L_);
  for (std::size_t i = L_; i-- > 0;) {
    raw[i] = static_cast<std::int64_t>(lo_[i] + rank % radix_[i]);
    rank /= radix_[i];
  }
  return CoefficientVector::validate(raw);
}

std::vector<CoefficientVector> enumerate_vectors(std::size_t L) {
  const VectorSpace space(L);
  std::vector<CoefficientVector> out;
  out.reserve(space.size());
  for (std::uint64_t r = 0; r < space.size(); ++r) out.push_back(space.at(r));
  return out;
}

ConjectureViolation::ConjectureViolation(CensusReport report)
    : Error([&] {
        std::ostringstream msg;
        msg << "first failure after term " << report.conjectured_bound << " at L = " << report.L
            << ":";
        for (const auto& v : report.violations) msg << ' ' << v.str();
        return msg.str();
      }()),
      report_(std::move(report)) {}

namespace {

using nlohmann::json;

struct ShardResult {
  std::size_t max_first_failure = 0;
  std::vector<CoefficientVector> extremal;
  std::uint64_t scanned = 0;
  std::uint64_t failing = 0;
  std::vector<CoefficientVector> survivors;
  std::vector<CoefficientVector> violations;
  std::vector<CensusEntry> entries;
};

json vec_json(const CoefficientVector& v) { return json(std::vector<std::uint64_t>(v.values().begin(), v.values().end())); }

CoefficientVector vec_from(const json& j) {
  std::vector<std::int64_t> raw;
  for (const auto& x : j) raw.push_back(x.get<std::int64_t>());
  return CoefficientVector::validate(raw);
}

json shard_json(std::uint64_t id, const ShardResult& r) {
  json j;
  j["shard"] = id;
  j["max_first_failure"] = r.max_first_failure;
  j["scanned"] = r.scanned;
  j["failing"] = r.failing;
  for (const auto* list : {&r.extremal, &r.survivors, &r.violations}) {
    json arr = json::array();
    for (const auto& v : *list) arr.push_back(vec_json(v));
    j[list == &r.extremal ? "extremal" : list == &r.survivors ? "survivors" : "violations"] = arr;
  }
  json entries = json::array();
  for (const auto& e : r.entries) {
    entries.push_back({vec_json(e.vector), e.first_failure ? json(*e.first_failure) : json(nullptr),
                       static_cast<int>(e.verdict), e.proof_tag});
  }
  j["entries"] = entries;
  return j;
}

ShardResult shard_from(const json& j) {
  ShardResult r;
  r.max_first_failure = j.at("max_first_failure").get<std::size_t>();
  r.scanned = j.at("scanned").get<std::uint64_t>();
  r.failing = j.at("failing").get<std::uint64_t>();
  for (const auto& v : j.at("extremal")) r.extremal.push_back(vec_from(v));
  for (const auto& v : j.at("survivors")) r.survivors.push_back(vec_from(v));
  for (const auto& v : j.at("violations")) r.violations.push_back(vec_from(v));
  for (const auto& e : j.at("entries")) {
    std::optional<std::size_t> ff;
    if (!e.at(1).is_null()) ff = e.at(1).get<std::size_t>();
    r.entries.push_back({vec_from(e.at(0)), ff, static_cast<VerdictKind>(e.at(2).get<int>()),
                         e.at(3).get<std::string>()});
  }
  return r;
}

ShardResult run_shard(const VectorSpace& space, std::uint64_t begin, std::uint64_t end,
                      std::size_t bound, const AnalysisConfig& config, bool keep_entries) {
  ShardResult r;
  for (std::uint64_t rank = begin; rank < end; ++rank) {
    const auto cv = space.at(rank);
    const auto verdict = classify(cv, config);
    ++r.scanned;
    std::optional<std::size_t> ff;
    if (const auto* inc = std::get_if<Incomplete>(&verdict.outcome)) {
      ff = inc->first_failure;
      ++r.failing;
      if (*ff > r.max_first_failure) {
        r.max_first_failure = *ff;
        r.extremal.clear();
      }
      if (*ff == r.max_first_failure) r.extremal.push_back(cv);
      if (*ff > bound) r.violations.push_back(cv);
    } else if (verdict.kind() == VerdictKind::ConjecturallyComplete) {
      r.survivors.push_back(cv);
    }
    if (keep_entries) {
      const ProofTag* tag = verdict.proof();
      r.entries.push_back(
          {cv, ff, verdict.kind(), tag ? std::string(rule_name(tag->rule)) : std::string()});
    }
  }
  return r;
}

}  // namespace

CensusReport first_failure_census(std::size_t L, const CensusOptions& options) {
  const VectorSpace space(L, options.include_cap_boundary ? 1 : 0);
  CensusReport report;
  report.L = L;
  report.cap_boundary_included = options.include_cap_boundary;
  report.deep_horizon = options.deep_horizon == 0 ? 4 * L : options.deep_horizon;
  if (report.deep_horizon < 4 * L) throw OutOfRange("deep horizon must be at least 4L");
  report.conjectured_bound = std::max<std::size_t>(2 * L - 1, 2);

  AnalysisConfig config = options.config;
  config.horizon = report.deep_horizon;

  const std::uint64_t shard_size = std::max<std::uint64_t>(options.shard_size, 1);
  const std::uint64_t shards = (space.size() + shard_size - 1) / shard_size;
  std::vector<std::optional<ShardResult>> results(shards);

  std::mutex io_mutex;
  std::ofstream ids_out, partials_out;
  if (options.checkpoint) {
    const auto& path = *options.checkpoint;
    const auto partials_path = std::filesystem::path(path.string() + ".partials");
    std::set<std::uint64_t> done;
    if (std::ifstream in(path); in) {
      for (std::uint64_t id; in >> id;) done.insert(id);
    }
    if (std::ifstream in(partials_path); in) {
      for (std::string line; std::getline(in, line);) {
        if (line.empty()) continue;
        json j;
        try {
          j = json::parse(line);
        } catch (const json::exception&) {
          continue;  // torn write from an interrupted run
        }
        const auto id = j.at("shard").get<std::uint64_t>();
        if (id < shards && done.count(id)) results[id] = shard_from(j);
      }
    }
    ids_out.open(path, std::ios::app);
    partials_out.open(partials_path, std::ios::app);
    if (!ids_out || !partials_out) throw Error("cannot open checkpoint " + path.string());
  }

  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  auto worker = [&] {
    try {
      for (std::uint64_t s = next++; s < shards; s = next++) {
        if (results[s]) continue;
        const std::uint64_t begin = s * shard_size;
        const std::uint64_t end = std::min(begin + shard_size, space.size());
        auto r = run_shard(space, begin, end, report.conjectured_bound, config,
                           options.keep_entries);
        std::lock_guard lock(io_mutex);
        if (options.checkpoint) {
          partials_out << shard_json(s, r).dump() << '\n' << std::flush;
          ids_out << s << '\n' << std::flush;
        }
        results[s] = std::move(r);
      }
    } catch (...) {
      std::lock_guard lock(io_mutex);
      if (!failure) failure = std::current_exception();
      next = shards;
    }
  };
  {
    std::vector<std::jthread> pool;
    const unsigned jobs = std::max(1U, options.jobs);
    for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
  }
  if (failure) std::rethrow_exception(failure);

  // Deterministic reduce in shard order.
  for (auto& slot : results) {
    auto& r = *slot;
    report.vectors_scanned += r.scanned;
    report.failing_vectors += r.failing;
    if (r.max_first_failure > report.max_first_failure) {
      report.max_first_failure = r.max_first_failure;
      report.extremal_vectors.clear();
    }
    if (r.max_first_failure == report.max_first_failure && r.max_first_failure > 0) {
      report.extremal_vectors.insert(report.extremal_vectors.end(), r.extremal.begin(),
                                     r.extremal.end());
    }
    report.conjectural_survivors.insert(report.conjectural_survivors.end(),
                                        r.survivors.begin(), r.survivors.end());
    report.violations.insert(report.violations.end(), r.violations.begin(), r.violations.end());
    for (auto& e : r.entries) report.entries.push_back(std::move(e));
  }
  report.equality_window_vectors = report.conjectural_survivors.size();
  if (!report.violations.empty()) throw ConjectureViolation(std::move(report));
  return report;
}

std::size_t check_fail_at_2l_minus_1(std::size_t k) {
  if (k == 0) throw OutOfRange("k must be positive");
  std::vector<std::int64_t> raw(k, 1);
  raw.push_back(0);
  raw.push_back(4);
  const auto cv = CoefficientVector::validate(raw);
  const auto scan = brown_scan(cv, 4 * cv.length());
  return scan.first_failure.value_or(0);
}

FrontOnesReport add_front_ones_scan(std::uint64_t k, std::uint64_t g_max,
                                    const AnalysisConfig& config) {
  if (k == 0 || g_max < 2) throw OutOfRange("need k >= 1 and g_max >= 2");
  FrontOnesReport report;
  report.k = k;
  report.g_max = g_max;
  for (std::uint64_t g = 1; g <= g_max; ++g) {
    report.max_n_by_g.push_back(empirical_max_n(family_prefix(g, k), config).max_n);
  }
  for (std::uint64_t g = 1; g < g_max; ++g) {
    for (std::uint64_t n = 1; n <= report.max_n_by_g[g - 1]; ++n) {
      if (classify(FamilySpec{g, k, n}.to_vector(), config).is_incomplete()) continue;
      if (classify(FamilySpec{g + 1, k, n}.to_vector(), config).is_incomplete()) {
        report.violations.push_back({g, n});
      }
    }
  }
  return report;
}

}  // namespace plrs
