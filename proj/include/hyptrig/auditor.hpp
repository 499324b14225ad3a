#pragma once

// Sampling, verification and reporting. Every record is a pure function of
// (entry, parameters, tolerance), so audits are reproducible for a given seed
// whatever the thread count.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"

#include "hyptrig/catalog.hpp"
#include "hyptrig/errors.hpp"
#include "hyptrig/quad.hpp"

namespace hyptrig::auditor {

using catalog::ParamPoint;

enum class Verdict { PASS, FAIL, SUSPECT, DIVERGENT, SKIPPED };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::PASS: return "PASS";
    case Verdict::FAIL: return "FAIL";
    case Verdict::SUSPECT: return "SUSPECT";
    case Verdict::DIVERGENT: return "DIVERGENT";
    case Verdict::SKIPPED: return "SKIPPED";
  }
  return "?";
}

/// Upper edge of the SUSPECT band; beyond it a mismatch is a FAIL.
inline constexpr double kSuspectCeiling = 1e-5;

struct VerificationRecord {
  std::string entry_id;
  ParamPoint params;
  quad::QuadResult numeric;
  double closed = 0.0;
  double abs_diff = 0.0;
  double rel_diff = 0.0;
  Verdict verdict = Verdict::SKIPPED;
  std::optional<double> ratio_fit;
  std::string convention;  // set only for dual-convention entries
  std::string note;
};

struct AuditConfig {
  std::size_t samples = 25;
  std::uint64_t seed = 17;
  double pass_tol = 1e-9;
  std::vector<std::string> entries;  // empty: all entries
  std::string report_path = "hyptrig_report.json";
  std::size_t threads = 0;  // 0: hardware concurrency

  void validate() const {
    if (samples < 1) {
      throw domain_error("config: samples must be at least 1");
    }
    if (!(pass_tol > 0.0 && pass_tol < 1.0)) {
      throw domain_error("config: pass_tol must lie in (0, 1)");
    }
  }
};

struct EntryStats {
  std::string entry_id;
  std::vector<catalog::Flag> flags;
  std::string convention;
  std::size_t records = 0;
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t suspect = 0;
  std::size_t divergent = 0;
  std::size_t skipped = 0;
  double max_rel_diff = 0.0;
  std::optional<double> ratio;
  std::size_t unexpected = 0;
};

struct AuditReport {
  std::vector<VerificationRecord> records;
  std::vector<EntryStats> summary;
  AuditConfig config;

  std::size_t unexpected() const {
    std::size_t n = 0;
    for (const auto& s : summary) {
      n += s.unexpected;
    }
    return n;
  }
  bool success() const { return unexpected() == 0; }
};

// ---------------------------------------------------------------------------

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::optional<double> ratio_of(double numeric, double closed) {
  if (closed == 0.0 || !std::isfinite(numeric) || !std::isfinite(closed)) {
    return std::nullopt;
  }
  return numeric / closed;
}

}  // namespace detail

/// Relative difference measured against max(|closed|, integral of |f|), so
/// that integrals with cancellation are judged on the scale quadrature works at.
inline double relative_difference(double abs_diff, double closed, double l1) {
  const double scale = std::max(std::abs(closed), l1);
  if (scale == 0.0) {
    return abs_diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  }
  return abs_diff / scale;
}

/// Verdict for a finished comparison. Only a converged quadrature can PASS.
inline Verdict classify(quad::QuadStatus status, double rel_diff, double pass_tol) {
  if (status == quad::QuadStatus::suspected_divergent) {
    return Verdict::DIVERGENT;
  }
  if (status == quad::QuadStatus::max_effort) {
    return Verdict::SKIPPED;
  }
  if (rel_diff <= pass_tol) {
    return Verdict::PASS;
  }
  if (rel_diff <= kSuspectCeiling) {
    return Verdict::SUSPECT;
  }
  return Verdict::FAIL;
}

/// Deterministic parameter points for an entry; constant entries give one
/// empty point.
inline std::vector<ParamPoint> sample_params(const catalog::EntryDescriptor& entry, std::size_t n, std::uint64_t seed) {
  if (n < 1) {
    throw domain_error("sample_params: n must be at least 1");
  }
  if (entry.params.empty()) {
    return {ParamPoint{}};
  }
  std::mt19937_64 rng(detail::splitmix64(seed ^ detail::fnv1a(entry.id)));
  const catalog::Uniform u01 = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  std::vector<ParamPoint> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    ParamPoint pt;
    bool ok = false;
    for (int attempt = 0; attempt < 1000 && !ok; ++attempt) {
      pt = entry.sampler(u01);
      try {
        entry.check(pt);
        ok = true;
      } catch (const domain_error&) {
      }
    }
    if (!ok) {
      throw domain_error(entry.id + ": empty feasible region for sampling");
    }
    out.push_back(std::move(pt));
  }
  return out;
}

inline VerificationRecord make_record(const std::string& id, const ParamPoint& params, const quad::QuadResult& numeric,
                                      std::optional<double> closed, double pass_tol, std::string closed_error = {}) {
  VerificationRecord rec;
  rec.entry_id = id;
  rec.params = params;
  rec.numeric = numeric;
  if (!closed) {
    rec.closed = std::numeric_limits<double>::quiet_NaN();
    rec.abs_diff = std::numeric_limits<double>::quiet_NaN();
    rec.rel_diff = std::numeric_limits<double>::quiet_NaN();
    rec.verdict = numeric.status == quad::QuadStatus::suspected_divergent ? Verdict::DIVERGENT : Verdict::SKIPPED;
    rec.note = "closed form not evaluable: " + closed_error;
    return rec;
  }
  rec.closed = *closed;
  rec.abs_diff = std::abs(numeric.value - *closed);
  rec.rel_diff = relative_difference(rec.abs_diff, *closed, numeric.l1_norm);
  rec.verdict = classify(numeric.status, rec.rel_diff, pass_tol);
  if (rec.verdict == Verdict::FAIL || rec.verdict == Verdict::SUSPECT) {
    rec.ratio_fit = detail::ratio_of(numeric.value, *closed);
  }
  if (numeric.status != quad::QuadStatus::converged) {
    rec.note = numeric.note;
  }
  return rec;
}

/// Verifies one parameter point. Dual-convention entries yield one record
/// per convention (derived first), sharing the same quadrature.
inline std::vector<VerificationRecord> verify_point(const std::string& id, const ParamPoint& params, double pass_tol) {
  const auto& entry = catalog::find_entry(id);
  entry.check(params);
  const auto [f, spec] = entry.integrand_factory(params);
  const quad::QuadResult numeric = quad::integrate(f, spec, quad::Tolerance{1e-300, pass_tol / 10.0});

  auto evaluate = [&](auto&& closed_fn) -> std::pair<std::optional<double>, std::string> {
    try {
      return {closed_fn(), {}};
    } catch (const std::exception& ex) {
      return {std::nullopt, ex.what()};
    }
  };

  std::vector<VerificationRecord> out;
  if (entry.has_flag(catalog::Flag::dual_convention)) {
    for (const auto conv : {catalog::Convention::derived, catalog::Convention::printed}) {
      auto [closed, err] = evaluate(
          [&] { return catalog::cf_3_532_1(params["n"], params["a"], params["b"], conv); });
      auto rec = make_record(id, params, numeric, closed, pass_tol, err);
      rec.convention = catalog::to_string(conv);
      out.push_back(std::move(rec));
    }
    const bool derived_ok = out[0].verdict == Verdict::PASS;
    const bool printed_ok = out[1].verdict == Verdict::PASS;
    const std::string match = derived_ok && printed_ok ? "both conventions match"
                              : derived_ok             ? "derived convention matches"
                              : printed_ok             ? "printed convention matches"
                                                       : "neither convention matches";
    for (auto& rec : out) {
      rec.note = rec.note.empty() ? match : rec.note + "; " + match;
    }
    return out;
  }
  auto [closed, err] = evaluate([&] { return entry.closed_form(params); });
  auto rec = make_record(id, params, numeric, closed, pass_tol, err);
  if (!entry.diagnostic_note.empty()) {
    rec.note = rec.note.empty() ? entry.diagnostic_note : rec.note + "; " + entry.diagnostic_note;
  }
  out.push_back(std::move(rec));
  return out;
}

/// Single-record form. For dual-convention entries `convention` selects the record.
inline VerificationRecord verify_entry(const std::string& id, const ParamPoint& params, double pass_tol,
                                       catalog::Convention convention = catalog::Convention::derived) {
  auto recs = verify_point(id, params, pass_tol);
  if (recs.size() == 2 && convention == catalog::Convention::printed) {
    return recs[1];
  }
  return recs.front();
}

/// Constant numeric/closed ratio over at least three FAIL records, if the
/// relative spread is within 1e-6.
inline std::optional<double> ratio_diagnose(const std::vector<VerificationRecord>& records) {
  std::vector<double> ratios;
  for (const auto& r : records) {
    if (r.verdict != Verdict::FAIL) {
      continue;
    }
    const auto q = detail::ratio_of(r.numeric.value, r.closed);
    if (!q) {
      return std::nullopt;
    }
    ratios.push_back(*q);
  }
  if (ratios.size() < 3) {
    return std::nullopt;
  }
  const auto [lo, hi] = std::minmax_element(ratios.begin(), ratios.end());
  double mean = 0.0;
  for (double q : ratios) {
    mean += q;
  }
  mean /= static_cast<double>(ratios.size());
  if (mean == 0.0 || (*hi - *lo) > 1e-6 * std::abs(mean)) {
    return std::nullopt;
  }
  return mean;
}

namespace detail {

// Which verdicts count against the audit: a suspect entry must not PASS, the
// printed convention of a dual entry is expected to differ, everything else
// must PASS.
inline bool unexpected(const catalog::EntryDescriptor& e, const VerificationRecord& r) {
  if (e.has_flag(catalog::Flag::suspect)) {
    return r.verdict == Verdict::PASS;
  }
  if (e.has_flag(catalog::Flag::dual_convention) && r.convention == "printed") {
    return false;
  }
  return r.verdict != Verdict::PASS;
}

inline std::vector<EntryStats> summarize(const std::vector<VerificationRecord>& records) {
  std::vector<EntryStats> out;
  for (std::size_t i = 0; i < records.size();) {
    const std::string& id = records[i].entry_id;
    const auto& entry = catalog::find_entry(id);
    // Group by (entry, convention) keeping first-seen order.
    std::vector<std::string> conventions;
    std::size_t j = i;
    while (j < records.size() && records[j].entry_id == id) {
      if (std::find(conventions.begin(), conventions.end(), records[j].convention) == conventions.end()) {
        conventions.push_back(records[j].convention);
      }
      ++j;
    }
    for (const auto& conv : conventions) {
      EntryStats s;
      s.entry_id = id;
      s.flags = entry.flags;
      s.convention = conv;
      std::vector<VerificationRecord> group;
      for (std::size_t k = i; k < j; ++k) {
        const auto& r = records[k];
        if (r.convention != conv) {
          continue;
        }
        group.push_back(r);
        ++s.records;
        switch (r.verdict) {
          case Verdict::PASS: ++s.pass; break;
          case Verdict::FAIL: ++s.fail; break;
          case Verdict::SUSPECT: ++s.suspect; break;
          case Verdict::DIVERGENT: ++s.divergent; break;
          case Verdict::SKIPPED: ++s.skipped; break;
        }
        if (std::isfinite(r.rel_diff)) {
          s.max_rel_diff = std::max(s.max_rel_diff, r.rel_diff);
        }
        if (unexpected(entry, r)) {
          ++s.unexpected;
        }
      }
      s.ratio = ratio_diagnose(group);
      out.push_back(std::move(s));
    }
    i = j;
  }
  return out;
}

}  // namespace detail

/// Full sweep. Work items are (entry, sample) pairs processed by a pool of
/// threads; results land in preallocated slots so the order never depends
/// on scheduling.
inline AuditReport audit_all(const AuditConfig& config) {
  config.validate();
  std::vector<const catalog::EntryDescriptor*> entries;
  if (config.entries.empty()) {
    for (const auto& e : catalog::registry()) {
      entries.push_back(&e);
    }
  } else {
    for (const auto& id : config.entries) {
      entries.push_back(&catalog::find_entry(id));
    }
  }

  struct Task {
    const catalog::EntryDescriptor* entry;
    ParamPoint params;
  };
  std::vector<Task> tasks;
  for (const auto* e : entries) {
    for (auto& pt : sample_params(*e, config.samples, config.seed)) {
      tasks.push_back({e, std::move(pt)});
    }
  }

  std::vector<std::vector<VerificationRecord>> slots(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1)) {
      try {
        slots[i] = verify_point(tasks[i].entry->id, tasks[i].params, config.pass_tol);
      } catch (const std::exception& ex) {
        VerificationRecord rec;
        rec.entry_id = tasks[i].entry->id;
        rec.params = tasks[i].params;
        rec.closed = rec.abs_diff = rec.rel_diff = std::numeric_limits<double>::quiet_NaN();
        rec.verdict = Verdict::SKIPPED;
        rec.note = ex.what();
        slots[i] = {rec};
      }
    }
  };
  std::size_t n_threads = config.threads != 0 ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  n_threads = std::min(n_threads, std::max<std::size_t>(1, tasks.size()));
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 1; t < n_threads; ++t) {
      pool.emplace_back(worker);
    }
    worker();
  }

  AuditReport report;
  report.config = config;
  for (auto& slot : slots) {
    for (auto& rec : slot) {
      report.records.push_back(std::move(rec));
    }
  }
  report.summary = detail::summarize(report.records);
  return report;
}

// ---------------------------------------------------------------------------
// Serialization.

using json = nlohmann::ordered_json;

namespace detail {

inline json number_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

inline json flags_json(const std::vector<catalog::Flag>& flags) {
  json arr = json::array();
  for (auto f : flags) {
    arr.push_back(catalog::to_string(f));
  }
  return arr;
}

}  // namespace detail

inline json to_json(const ParamPoint& p) {
  json obj = json::object();
  for (const auto& [k, v] : p.values()) {
    obj[k] = v;
  }
  return obj;
}

inline json to_json(const quad::QuadResult& q) {
  return json{{"value", detail::number_or_null(q.value)},
              {"abs_error_est", detail::number_or_null(q.abs_error_est)},
              {"evaluations", q.evaluations},
              {"status", quad::to_string(q.status)},
              {"l1_norm", detail::number_or_null(q.l1_norm)},
              {"note", q.note}};
}

inline json to_json(const VerificationRecord& r) {
  json j{{"entry_id", r.entry_id},
         {"params", to_json(r.params)},
         {"numeric", to_json(r.numeric)},
         {"closed", detail::number_or_null(r.closed)},
         {"abs_diff", detail::number_or_null(r.abs_diff)},
         {"rel_diff", detail::number_or_null(r.rel_diff)},
         {"verdict", to_string(r.verdict)},
         {"ratio_fit", r.ratio_fit ? json(*r.ratio_fit) : json(nullptr)}};
  if (!r.convention.empty()) {
    j["convention"] = r.convention;
  }
  j["note"] = r.note;
  return j;
}

inline json to_json(const AuditReport& rep) {
  json records = json::array();
  for (const auto& r : rep.records) {
    records.push_back(to_json(r));
  }
  json summary = json::array();
  for (const auto& s : rep.summary) {
    json j{{"entry_id", s.entry_id}, {"flags", detail::flags_json(s.flags)}};
    if (!s.convention.empty()) {
      j["convention"] = s.convention;
    }
    j["records"] = s.records;
    j["pass"] = s.pass;
    j["fail"] = s.fail;
    j["suspect"] = s.suspect;
    j["divergent"] = s.divergent;
    j["skipped"] = s.skipped;
    j["max_rel_diff"] = s.max_rel_diff;
    j["ratio"] = s.ratio ? json(*s.ratio) : json(nullptr);
    j["unexpected"] = s.unexpected;
    summary.push_back(std::move(j));
  }
  json entries = json::array();
  for (const auto& e : rep.config.entries) {
    entries.push_back(e);
  }
  json cfg{{"samples", rep.config.samples},
           {"seed", rep.config.seed},
           {"pass_tol", rep.config.pass_tol},
           {"quad_tol", rep.config.pass_tol / 10.0},
           {"suspect_ceiling", kSuspectCeiling},
           {"entries", entries}};
  return json{{"records", records},
              {"summary", summary},
              {"config_echo", cfg},
              {"unexpected", rep.unexpected()},
              {"success", rep.success()}};
}

inline void write_report(const AuditReport& rep, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw std::runtime_error("cannot open report file '" + path + "'");
  }
  out << to_json(rep).dump(2) << '\n';
  if (!out) {
    throw std::runtime_error("failed writing report file '" + path + "'");
  }
}

/// Fixed-width per-entry table.
inline std::string format_table(const AuditReport& rep) {
  std::ostringstream os;
  os << std::left << std::setw(24) << "entry" << std::right << std::setw(6) << "n" << std::setw(6) << "PASS"
     << std::setw(6) << "FAIL" << std::setw(6) << "SUSP" << std::setw(6) << "DIV" << std::setw(6) << "SKIP"
     << std::setw(12) << "max_rel" << std::setw(14) << "ratio" << "  flags\n";
  for (const auto& s : rep.summary) {
    std::string name = s.entry_id + (s.convention.empty() ? "" : " [" + s.convention + "]");
    std::ostringstream rel;
    rel << std::scientific << std::setprecision(2) << s.max_rel_diff;
    std::ostringstream ratio;
    if (s.ratio) {
      ratio << std::setprecision(8) << *s.ratio;
    } else {
      ratio << "-";
    }
    std::string flags;
    for (auto f : s.flags) {
      flags += (flags.empty() ? "" : ",") + std::string(catalog::to_string(f));
    }
    if (s.unexpected > 0) {
      flags += (flags.empty() ? "" : " ") + std::string("UNEXPECTED");
    }
    os << std::left << std::setw(24) << name << std::right << std::setw(6) << s.records << std::setw(6) << s.pass
       << std::setw(6) << s.fail << std::setw(6) << s.suspect << std::setw(6) << s.divergent << std::setw(6)
       << s.skipped << std::setw(12) << rel.str() << std::setw(14) << ratio.str() << "  " << flags << '\n';
  }
  os << "records: " << rep.records.size() << "  unexpected: " << rep.unexpected() << "  result: "
     << (rep.success() ? "OK" : "UNEXPECTED FAILURES") << '\n';
  return os.str();
}

// ---------------------------------------------------------------------------
// Config file: flat key=value lines, '#' starts a comment.

namespace detail {

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) {
    return {};
  }
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) {
      out.push_back(item);
    }
  }
  return out;
}

}  // namespace detail

inline AuditConfig parse_config(const std::string& text, AuditConfig base = {}) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    line = detail::trim(line);
    if (line.empty()) {
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw domain_error("config line " + std::to_string(lineno) + ": expected key=value");
    }
    const std::string key = detail::trim(line.substr(0, eq));
    const std::string value = detail::trim(line.substr(eq + 1));
    try {
      if (key == "samples") {
        base.samples = std::stoul(value);
      } else if (key == "seed") {
        base.seed = std::stoull(value);
      } else if (key == "pass_tol") {
        base.pass_tol = std::stod(value);
      } else if (key == "entries") {
        base.entries = detail::split_list(value);
      } else if (key == "report_path") {
        base.report_path = value;
      } else if (key == "threads") {
        base.threads = std::stoul(value);
      } else {
        throw domain_error("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
      }
    } catch (const std::invalid_argument&) {
      throw domain_error("config line " + std::to_string(lineno) + ": bad value for '" + key + "'");
    } catch (const std::out_of_range&) {
      throw domain_error("config line " + std::to_string(lineno) + ": value out of range for '" + key + "'");
    }
  }
  base.validate();
  return base;
}

inline AuditConfig load_config(const std::string& path, AuditConfig base = {}) {
  std::ifstream in(path);
  if (!in) {
    throw domain_error("cannot read config file '" + path + "'");
  }
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), std::move(base));
}

}  // namespace hyptrig::auditor
