#pragma once

#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hyptrig/auditor.hpp"
#include "hyptrig/catalog.hpp"
#include "hyptrig/errors.hpp"

namespace hyptrig::cli {

enum ExitCode : int { kOk = 0, kUnexpectedFail = 1, kUsage = 2 };

namespace detail {

inline std::string fmt(double x, int digits = 17) {
  std::ostringstream os;
  os << std::setprecision(digits) << x;
  return os.str();
}

inline std::string flag_list(const std::vector<catalog::Flag>& flags) {
  std::string s;
  for (auto f : flags) {
    s += (s.empty() ? "" : ",") + std::string(catalog::to_string(f));
  }
  return s.empty() ? "-" : s;
}

inline std::string params_text(const catalog::ParamPoint& p) {
  std::string s;
  for (const auto& [k, v] : p.values()) {
    s += (s.empty() ? "" : " ") + k + "=" + fmt(v);
  }
  return s;
}

inline void print_list(std::ostream& out) {
  out << std::left << std::setw(16) << "id" << std::setw(34) << "flags" << "provenance\n";
  for (const auto& e : catalog::list_entries()) {
    out << std::left << std::setw(16) << e.id << std::setw(34) << flag_list(e.flags) << e.provenance_note << '\n';
  }
}

inline void print_show(std::ostream& out, const catalog::EntryDescriptor& e) {
  out << "id:         " << e.id << '\n';
  out << "formula:    " << e.formula << '\n';
  std::string params;
  for (const auto& p : e.params) {
    params += (params.empty() ? "" : ", ") + p;
  }
  out << "parameters: " << (params.empty() ? "(none)" : params) << '\n';
  out << "domain:     ";
  if (e.domain.empty()) {
    out << "(unrestricted)\n";
  } else {
    for (std::size_t i = 0; i < e.domain.size(); ++i) {
      out << (i == 0 ? "" : "; ") << e.domain[i].text;
    }
    out << '\n';
  }
  out << "flags:      " << flag_list(e.flags) << '\n';
  out << "provenance: " << e.provenance_note << '\n';
  if (!e.diagnostic_note.empty()) {
    out << "diagnostic: " << e.diagnostic_note << '\n';
  }
}

inline void print_record(std::ostream& out, const auditor::VerificationRecord& r) {
  out << r.entry_id;
  if (!r.convention.empty()) {
    out << " [" << r.convention << "]";
  }
  out << "  " << params_text(r.params) << "  numeric=" << fmt(r.numeric.value) << " closed=" << fmt(r.closed)
      << " rel_diff=" << fmt(r.rel_diff, 3) << " status=" << quad::to_string(r.numeric.status)
      << " verdict=" << auditor::to_string(r.verdict);
  if (r.ratio_fit) {
    out << " ratio_fit=" << fmt(*r.ratio_fit, 12);
  }
  out << '\n';
  if (!r.note.empty()) {
    out << "  note: " << r.note << '\n';
  }
}

inline catalog::ParamPoint parse_params(const catalog::EntryDescriptor& e, const std::vector<std::string>& kv) {
  catalog::ParamPoint given;
  for (const auto& item : kv) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw CLI::ValidationError("--param", "expected name=value, got '" + item + "'");
    }
    const std::string name = item.substr(0, eq);
    if (std::find(e.params.begin(), e.params.end(), name) == e.params.end()) {
      throw CLI::ValidationError("--param", "entry " + e.id + " has no parameter '" + name + "'");
    }
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item.substr(eq + 1), &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size() - eq - 1) {
      throw CLI::ValidationError("--param", "bad number in '" + item + "'");
    }
    given.set(name, v);
  }
  // Schema order, regardless of the order on the command line.
  catalog::ParamPoint pt;
  for (const auto& name : e.params) {
    if (!given.has(name)) {
      throw CLI::ValidationError("--param", "missing parameter '" + name + "' for entry " + e.id);
    }
    pt.set(name, given.at(name));
  }
  return pt;
}

inline std::string report_location(const std::string& path) {
  if (const char* dir = std::getenv("HYPTRIG_REPORT_DIR"); dir != nullptr && *dir != '\0') {
    return (std::filesystem::path(dir) / std::filesystem::path(path).filename()).string();
  }
  return path;
}

}  // namespace detail

/// Runs one command line; output goes to `out`, diagnostics and usage to `err`.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Audit closed-form hyperbolic-trigonometric integrals against adaptive quadrature", "hyptrig"};
  app.require_subcommand(1);

  auto* list_cmd = app.add_subcommand("list", "List catalog entries with flags and provenance");

  std::string show_id;
  auto* show_cmd = app.add_subcommand("show", "Show an entry's formula and validity domain");
  show_cmd->add_option("id", show_id, "Entry id")->required();

  std::string verify_id;
  std::vector<std::string> verify_params;
  double verify_tol = 1e-9;
  std::string verify_conv = "both";
  std::uint64_t verify_seed = 17;
  auto* verify_cmd = app.add_subcommand("verify", "Verify one parameter point of an entry");
  verify_cmd->add_option("id", verify_id, "Entry id")->required();
  verify_cmd->add_option("--param", verify_params, "Parameter as name=value (repeatable; omit all to sample one point)");
  verify_cmd->add_option("--tol", verify_tol, "Relative pass tolerance")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--convention", verify_conv, "Dual-convention entries: derived, printed or both")
      ->check(CLI::IsMember({"derived", "printed", "both"}));
  verify_cmd->add_option("--seed", verify_seed, "Seed used when no --param is given");

  std::string audit_entries;
  std::size_t audit_samples = 25;
  std::uint64_t audit_seed = 17;
  double audit_tol = 1e-9;
  std::string audit_report = "hyptrig_report.json";
  std::string audit_config;
  std::size_t audit_threads = 0;
  auto* audit_cmd = app.add_subcommand("audit", "Sample every entry, verify, and write a JSON report");
  auto* o_entries = audit_cmd->add_option("--entries", audit_entries, "Comma-separated entry ids (default: all)");
  auto* o_samples = audit_cmd->add_option("--samples", audit_samples, "Samples per entry")->check(CLI::PositiveNumber);
  auto* o_seed = audit_cmd->add_option("--seed", audit_seed, "Sampling seed");
  auto* o_tol = audit_cmd->add_option("--tol", audit_tol, "Relative pass tolerance")->check(CLI::PositiveNumber);
  auto* o_report = audit_cmd->add_option("--report", audit_report, "Report file path");
  audit_cmd->add_option("--config", audit_config, "key=value config file; flags given here take precedence")
      ->check(CLI::ExistingFile);
  auto* o_threads = audit_cmd->add_option("--threads", audit_threads, "Worker threads (0: hardware concurrency)");

  std::vector<std::string> args;
  for (int i = argc - 1; i > 0; --i) {
    args.emplace_back(argv[i]);
  }
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  const auto usage_error = [&](const std::string& msg) {
    err << "error: " << msg << "\n\n" << app.help();
    return kUsage;
  };

  try {
    if (list_cmd->parsed()) {
      detail::print_list(out);
      return kOk;
    }
    if (show_cmd->parsed()) {
      detail::print_show(out, catalog::find_entry(show_id));
      return kOk;
    }
    if (verify_cmd->parsed()) {
      const auto& entry = catalog::find_entry(verify_id);
      catalog::ParamPoint pt;
      try {
        pt = verify_params.empty() ? auditor::sample_params(entry, 1, verify_seed).front()
                                   : detail::parse_params(entry, verify_params);
        entry.check(pt);
      } catch (const CLI::ValidationError& e) {
        return usage_error(e.what());
      } catch (const domain_error& e) {
        return usage_error(e.what());
      }
      bool unexpected = false;
      for (const auto& rec : auditor::verify_point(entry.id, pt, verify_tol)) {
        if (!rec.convention.empty() && verify_conv != "both" && rec.convention != verify_conv) {
          continue;
        }
        detail::print_record(out, rec);
        unexpected = unexpected || auditor::detail::unexpected(entry, rec);
      }
      return unexpected ? kUnexpectedFail : kOk;
    }
    if (audit_cmd->parsed()) {
      auditor::AuditConfig cfg;
      if (!audit_config.empty()) {
        cfg = auditor::load_config(audit_config, cfg);
      }
      if (o_entries->count() > 0) {
        cfg.entries = auditor::detail::split_list(audit_entries);
      }
      if (o_samples->count() > 0) {
        cfg.samples = audit_samples;
      }
      if (o_seed->count() > 0) {
        cfg.seed = audit_seed;
      }
      if (o_tol->count() > 0) {
        cfg.pass_tol = audit_tol;
      }
      if (o_report->count() > 0) {
        cfg.report_path = audit_report;
      }
      if (o_threads->count() > 0) {
        cfg.threads = audit_threads;
      }
      for (const auto& id : cfg.entries) {
        catalog::find_entry(id);
      }
      try {
        cfg.validate();
      } catch (const domain_error& e) {
        return usage_error(e.what());
      }
      const auto report = auditor::audit_all(cfg);
      const std::string path = detail::report_location(cfg.report_path);
      auditor::write_report(report, path);
      out << auditor::format_table(report);
      out << "report: " << path << '\n';
      return report.success() ? kOk : kUnexpectedFail;
    }
  } catch (const lookup_error& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  } catch (const domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

inline int run(int argc, const char* const* argv) { return run(argc, argv, std::cout, std::cerr); }

}  // namespace hyptrig::cli
