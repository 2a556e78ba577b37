#pragma once

// Command-line front end. Exit codes: 0 success, 1 a checked identity
// failed, 2 invalid input or unmet preconditions, 3 resource cap exceeded.

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dwp/dwp.hpp"

namespace dwp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitResource = 3;

struct CommonOptions {
  unsigned threads = 0;
  bool pretty = false;
  std::uint64_t search_cap = kDefaultSearchCap;
  bool uncapped = false;
  std::size_t group_cap = kDefaultGroupCap;

  EnumerationOptions enumeration() const { return EnumerationOptions{threads, search_cap, uncapped}; }
};

namespace detail {

inline void add_common(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--threads", o.threads, "Worker threads (0 = available parallelism)");
  cmd->add_flag("--pretty", o.pretty, "Human-readable tables instead of JSON");
  cmd->add_option("--search-cap", o.search_cap, "Largest candidate space to scan");
  cmd->add_flag("--uncapped", o.uncapped, "Ignore the search cap");
  cmd->add_option("--group-cap", o.group_cap, "Largest group order to materialize");
}

inline std::vector<element_t> parse_elements(const FiniteGroup& g, const std::string& text) {
  std::vector<element_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto first = item.find_first_not_of(' ');
    auto last = item.find_last_not_of(' ');
    std::string name = first == std::string::npos ? "" : item.substr(first, last - first + 1);
    auto e = g.find(name);
    if (!e) throw Error(ErrorKind::BadInput, "unknown element '" + name + "' in " + g.label());
    out.push_back(*e);
  }
  return out;
}

inline std::string join_names(const FiniteGroup& g, const std::vector<element_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + g.name(v[i]);
  return "[" + out + "]";
}

inline void print_pretty_group(std::ostream& out, const FiniteGroup& g) {
  out << g.label() << ": order " << g.order() << ", " << g.class_count() << " classes\n";
  out << std::left << std::setw(16) << "representative" << std::setw(8) << "size" << "centralizer\n";
  for (const auto& c : g.conjugacy_classes()) {
    out << std::setw(16) << g.name(c.representative) << std::setw(8) << c.size() << g.centralizer_order(c.representative)
        << "\n";
  }
}

inline void print_pretty_braid(std::ostream& out, const BraidWord& beta) {
  auto comp = components(beta);
  out << "braid " << beta.to_string() << "  (writhe " << beta.writhe() << ")\n";
  out << "components " << comp.count << "\n";
  for (std::size_t t = 0; t < comp.count; ++t) {
    out << "  " << t + 1 << ": cycle (";
    for (std::size_t i = 0; i < comp.cycles[t].size(); ++i) out << (i ? " " : "") << comp.cycles[t][i] + 1;
    out << ")  self-writhe " << comp.self_writhe[t] << "\n";
  }
  out << "linking\n";
  for (const auto& row : comp.linking) {
    out << " ";
    for (auto v : row) out << " " << std::setw(4) << v;
    out << "\n";
  }
}

inline void print_pretty_report(std::ostream& out, const CongruenceReport& r, const FiniteGroup& g) {
  out << "L = closure of " << r.braid << ", L~ = closure of its " << r.p << "^" << r.k << " power\n";
  out << "group " << r.group << ", components " << r.n << ", scope " << scope_name(r.scope) << "\n";
  if (!r.cases.empty()) {
    out << std::left << std::setw(28) << "x" << std::setw(28) << "[h]" << std::setw(10) << "DW(L~)" << "DW(L)\n";
    for (const auto& c : r.cases) {
      out << std::setw(28) << join_names(g, c.x) << std::setw(28) << join_names(g, c.hclass) << std::setw(10)
          << c.lhs_count << c.rhs_count << "\n";
    }
  }
  for (const auto& v : r.violations) {
    out << "VIOLATION x=" << join_names(g, v.x) << " [h]=" << join_names(g, v.hclass) << " lhs=" << v.lhs_count
        << " rhs=" << v.rhs_count << "\n";
  }
  out << r.cases_checked << " cases checked, " << r.violations.size() << " violations ("
      << std::fixed << std::setprecision(3) << r.elapsed << " s)\n";
}

}  // namespace detail

/// Parses argv and runs one subcommand; returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dijkgraaf-Witten counts of closed braids and the periodic-link congruence"};
  app.require_subcommand(1);
  CommonOptions common;

  std::string group_spec, braid_text, x_text, catalog_path;
  std::uint64_t p = 0;
  unsigned k = 0;
  bool count_only = false, exact = false, classes = false, all_x = false, show_cases = false, timing = false;
  std::size_t degree = 1, dim = 2;
  std::uint64_t trials = 1000, seed = 0x5eed;
  unsigned max_k = 3;

  auto* group_info = app.add_subcommand("group-info", "Order, conjugacy classes and centralizer orders");
  group_info->add_option("--group", group_spec, "Group spec")->required();

  auto* braid_info = app.add_subcommand("braid-info", "Permutation, components, writhes and linking matrix");
  braid_info->add_option("--braid", braid_text, "Braid word '<m>: letters'")->required();

  auto* homs = app.add_subcommand("homs", "Homomorphisms from the closure's group");
  homs->add_option("--braid", braid_text)->required();
  homs->add_option("--group", group_spec)->required();
  homs->add_option("--x", x_text, "Comma-separated meridian images, one per component");
  homs->add_flag("--count", count_only, "Print only the number of homomorphisms");

  auto* dw = app.add_subcommand("dw", "Dijkgraaf-Witten count table");
  dw->add_option("--braid", braid_text)->required();
  dw->add_option("--group", group_spec)->required();
  dw->add_option("--x", x_text, "Comma-separated meridian images, one per component");
  auto* exact_flag = dw->add_flag("--exact", exact, "Exact longitude images");
  dw->add_flag("--classes", classes, "Longitude classes in the centralizers (default)")->excludes(exact_flag);
  dw->add_flag("--all-x", all_x, "Every meridian tuple instead of class representatives");

  auto* verify_cmd = app.add_subcommand("verify", "Check the congruence for beta and beta^(p^k)");
  verify_cmd->add_option("--braid", braid_text)->required();
  verify_cmd->add_option("-p", p, "Prime")->required();
  verify_cmd->add_option("-k", k, "Exponent k >= 1")->required();
  verify_cmd->add_option("--group", group_spec)->required();
  verify_cmd->add_flag("--all-x", all_x, "Every meridian tuple instead of class representatives");
  verify_cmd->add_flag("--cases", show_cases, "Include every checked case in the report");
  verify_cmd->add_flag("--timing", timing, "Include elapsed seconds in the JSON report");

  auto* sweep_cmd = app.add_subcommand("sweep", "Verify every entry of a catalog file");
  sweep_cmd->add_option("--catalog", catalog_path, "JSON array of {braid, p, k, group}")->required();
  sweep_cmd->add_flag("--all-x", all_x, "Every meridian tuple instead of class representatives");
  sweep_cmd->add_flag("--timing", timing, "Include elapsed seconds in the JSON report");

  auto* frob = app.add_subcommand("frobcheck", "Check tr(A^p) = tr(A)^p on random matrices over F_{p^e}");
  frob->add_option("-p", p, "Characteristic")->required();
  frob->add_option("-e", degree, "Extension degree")->required();
  frob->add_option("-n", dim, "Matrix dimension")->required();
  frob->add_option("--trials", trials, "Random matrices to test");
  frob->add_option("--seed", seed, "Random seed");
  frob->add_option("--max-k", max_k, "Also check tr(A^(p^k)) = tr(A)^(p^k) up to this k");

  for (auto* cmd : {group_info, braid_info, homs, dw, verify_cmd, sweep_cmd, frob}) detail::add_common(cmd, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  auto emit = [&](const ojson& doc) { out << doc.dump(2) << "\n"; };
  const auto scope = all_x ? XScope::All : XScope::Representatives;

  try {
    if (*group_info) {
      auto g = parse_group_spec(group_spec, common.group_cap);
      if (common.pretty) detail::print_pretty_group(out, g);
      else emit(group_info_json(g));
      return kExitOk;
    }
    if (*braid_info) {
      auto beta = parse_braid(braid_text);
      if (common.pretty) detail::print_pretty_braid(out, beta);
      else emit(braid_info_json(beta));
      return kExitOk;
    }
    if (*homs) {
      auto beta = parse_braid(braid_text);
      auto g = parse_group_spec(group_spec, common.group_cap);
      std::optional<std::vector<element_t>> x;
      if (!x_text.empty()) x = detail::parse_elements(g, x_text);
      if (count_only) {
        out << count_homs(beta, g, x, common.enumeration()) << "\n";
        return kExitOk;
      }
      auto records = enumerate_homs(beta, g, x, common.enumeration());
      if (common.pretty) {
        for (const auto& r : records) {
          out << detail::join_names(g, r.tuple) << "  meridians " << detail::join_names(g, r.meridian) << "  longitudes "
              << detail::join_names(g, r.longitude) << "\n";
        }
        out << records.size() << " homomorphisms\n";
      } else {
        emit(hom_records_json(beta, g, records));
      }
      return kExitOk;
    }
    if (*dw) {
      auto beta = parse_braid(braid_text);
      auto g = parse_group_spec(group_spec, common.group_cap);
      auto table = x_text.empty() ? dw_table(beta, g, scope, common.enumeration())
                                  : dw_table(beta, g, {detail::parse_elements(g, x_text)}, scope, common.enumeration());
      if (common.pretty) {
        out << "braid " << table.braid.to_string() << ", group " << g.label() << ", " << table.components
            << " components\n";
        if (exact) {
          for (const auto& [key, n] : table.exact)
            out << "x=" << detail::join_names(g, key.x) << " h=" << detail::join_names(g, key.h) << "  " << n << "\n";
        } else {
          for (const auto& [key, n] : table.classes)
            out << "x=" << detail::join_names(g, key.x) << " [h]=" << detail::join_names(g, key.hclass) << "  " << n << "\n";
        }
      } else {
        emit(dw_table_json(table, exact));
      }
      return kExitOk;
    }
    if (*verify_cmd) {
      auto beta = parse_braid(braid_text);
      auto g = parse_group_spec(group_spec, common.group_cap);
      auto inst = check_preconditions(beta, p, k, g);
      auto report = verify(inst, scope, common.enumeration(), show_cases || common.pretty);
      if (common.pretty) detail::print_pretty_report(out, report, g);
      else emit(congruence_report_json(report, g, timing));
      return report.confirmed() ? kExitOk : kExitViolation;
    }
    if (*sweep_cmd) {
      std::ifstream in(catalog_path);
      if (!in) throw Error(ErrorKind::BadInput, "cannot open catalog '" + catalog_path + "'");
      nlohmann::json doc;
      try {
        in >> doc;
      } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::BadInput, std::string("catalog is not JSON: ") + e.what());
      }
      auto summary = sweep(parse_catalog(doc), scope, common.enumeration());
      if (common.pretty) {
        for (const auto& r : summary.results) {
          out << std::left << std::setw(24) << r.entry.braid << " p=" << r.entry.p << " k=" << r.entry.k << "  "
              << std::setw(22) << r.entry.group << to_string(r.status);
          if (r.report) out << "  (" << r.report->cases_checked << " cases)";
          else out << "  " << r.error;
          out << "\n";
        }
      } else {
        emit(sweep_json(summary, timing));
      }
      return summary.exit_status();
    }
    if (*frob) {
      if (p > std::numeric_limits<std::uint32_t>::max()) throw Error(ErrorKind::BadInput, "characteristic too large");
      auto field = field_make(static_cast<std::uint32_t>(p), degree);
      auto report = frobenius_trace_check(field, dim, trials, seed, max_k);
      if (common.pretty) {
        out << "F_" << field.order() << " (p=" << report.p << ", e=" << report.e << "), dim " << report.dim << ": "
            << report.passed << "/" << report.trials << " tr(A^p)=tr(A)^p, " << report.iterated_passed << "/"
            << report.iterated_checks << " iterated\n";
      } else {
        emit(frobenius_json(field, report));
      }
      return report.ok() ? kExitOk : kExitViolation;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_resource_error(e.kind()) ? kExitResource : kExitInput;
  } catch (const std::bad_alloc&) {
    err << "error: out of memory\n";
    return kExitResource;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace dwp::cli
