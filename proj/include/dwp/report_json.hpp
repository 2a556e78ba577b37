#pragma once

// JSON shapes for everything the command-line tool reads and writes.
// Key order is fixed (ordered_json) so output is byte-stable.

#include <string>
#include <vector>

#include "dwp/congruence.hpp"
#include "dwp/finite_field.hpp"
#include "json.hpp"

namespace dwp {

using ojson = nlohmann::ordered_json;

inline ojson names_json(const FiniteGroup& g, const std::vector<element_t>& elems) {
  ojson out = ojson::array();
  for (element_t e : elems) out.push_back(g.name(e));
  return out;
}

inline std::string scope_name(XScope scope) { return scope == XScope::All ? "all" : "representatives"; }

inline ojson group_info_json(const FiniteGroup& g) {
  ojson classes = ojson::array();
  for (const auto& c : g.conjugacy_classes()) {
    classes.push_back({{"representative", g.name(c.representative)},
                       {"size", c.size()},
                       {"centralizer_order", g.centralizer_order(c.representative)},
                       {"members", names_json(g, c.members)}});
  }
  return {{"group", g.label()},
          {"order", g.order()},
          {"abelian", g.is_abelian()},
          {"identity", g.name(g.identity())},
          {"elements", g.names()},
          {"classes", std::move(classes)}};
}

inline ojson braid_info_json(const BraidWord& beta) {
  auto comp = components(beta);
  auto one_based = [](const std::vector<std::size_t>& v) {
    ojson out = ojson::array();
    for (auto i : v) out.push_back(i + 1);
    return out;
  };
  ojson cycles = ojson::array();
  for (const auto& c : comp.cycles) cycles.push_back(one_based(c));
  return {{"braid", beta.to_string()},
          {"strands", beta.strands},
          {"length", beta.length()},
          {"writhe", beta.writhe()},
          {"permutation", one_based(permutation(beta))},
          {"components", comp.count},
          {"cycles", std::move(cycles)},
          {"basepoints", one_based(comp.basepoints)},
          {"self_writhe", comp.self_writhe},
          {"linking", comp.linking}};
}

inline ojson hom_records_json(const BraidWord& beta, const FiniteGroup& g, const std::vector<HomRecord>& records) {
  ojson list = ojson::array();
  for (const auto& r : records) {
    list.push_back({{"tuple", names_json(g, r.tuple)},
                    {"meridian", names_json(g, r.meridian)},
                    {"longitude", names_json(g, r.longitude)}});
  }
  return {{"braid", beta.to_string()},
          {"group", g.label()},
          {"components", components(beta).count},
          {"count", records.size()},
          {"homs", std::move(list)}};
}

inline ojson dw_table_json(const DWTable& table, bool exact) {
  const auto& g = table.group;
  ojson entries = ojson::array();
  if (exact) {
    for (const auto& [key, count] : table.exact)
      entries.push_back({{"x", names_json(g, key.x)}, {"h", names_json(g, key.h)}, {"count", count}});
  } else {
    for (const auto& [key, count] : table.classes)
      entries.push_back({{"x", names_json(g, key.x)}, {"h_class_reps", names_json(g, key.hclass)}, {"count", count}});
  }
  return {{"braid", table.braid.to_string()},
          {"group", g.label()},
          {"components", table.components},
          {"scope", scope_name(table.scope)},
          {"level", exact ? "exact" : "classes"},
          {"entries", std::move(entries)}};
}

/// elapsed is wall-clock time and is left out unless asked for, so that
/// repeated runs produce identical bytes.
inline ojson congruence_report_json(const CongruenceReport& r, const FiniteGroup& g, bool with_elapsed = false) {
  ojson violations = ojson::array();
  for (const auto& v : r.violations) {
    violations.push_back({{"x", names_json(g, v.x)},
                          {"hclass", names_json(g, v.hclass)},
                          {"lhs_hclass", names_json(g, v.lhs_hclass)},
                          {"lhs_count", v.lhs_count},
                          {"rhs_count", v.rhs_count}});
  }
  ojson out = {{"braid", r.braid},
               {"group", r.group},
               {"p", r.p},
               {"k", r.k},
               {"n", r.n},
               {"scope", scope_name(r.scope)},
               {"cases_checked", r.cases_checked},
               {"violations", std::move(violations)},
               {"confirmed", r.confirmed()}};
  if (!r.cases.empty()) {
    ojson cases = ojson::array();
    for (const auto& c : r.cases) {
      cases.push_back({{"x", names_json(g, c.x)},
                       {"hclass", names_json(g, c.hclass)},
                       {"lhs_hclass", names_json(g, c.lhs_hclass)},
                       {"lhs_count", c.lhs_count},
                       {"rhs_count", c.rhs_count}});
    }
    out["cases"] = std::move(cases);
  }
  if (with_elapsed) out["elapsed"] = r.elapsed;
  return out;
}

inline std::vector<CatalogEntry> parse_catalog(const nlohmann::json& doc) {
  if (!doc.is_array()) throw Error(ErrorKind::BadInput, "catalog must be a JSON array");
  std::vector<CatalogEntry> out;
  try {
    for (const auto& item : doc) {
      out.push_back(CatalogEntry{item.at("braid").get<std::string>(), item.at("p").get<std::uint64_t>(),
                                 item.at("k").get<unsigned>(), item.at("group").get<std::string>()});
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::BadInput, std::string("malformed catalog entry: ") + e.what());
  }
  return out;
}

inline ojson sweep_json(const SweepSummary& s, bool with_elapsed = false) {
  ojson entries = ojson::array();
  for (const auto& r : s.results) {
    ojson e = {{"braid", r.entry.braid}, {"p", r.entry.p}, {"k", r.entry.k}, {"group", r.entry.group},
               {"status", std::string(to_string(r.status))}};
    if (r.report) {
      e["n"] = r.report->n;
      e["cases_checked"] = r.report->cases_checked;
      e["violations"] = r.report->violations.size();
      if (with_elapsed) e["elapsed"] = r.report->elapsed;
    } else {
      e["error"] = r.error;
    }
    entries.push_back(std::move(e));
  }
  ojson out = {{"entries", std::move(entries)},
               {"passed", s.count(SweepStatus::Pass)},
               {"violations", s.count(SweepStatus::Violation)},
               {"precondition_failed", s.count(SweepStatus::PreconditionFailed)},
               {"resource_cap", s.count(SweepStatus::ResourceCap)}};
  if (with_elapsed) out["elapsed"] = s.elapsed;
  return out;
}

inline ojson frobenius_json(const FqField& f, const FrobeniusReport& r) {
  return {{"p", r.p},
          {"e", r.e},
          {"field_order", f.order()},
          {"modulus", f.modulus()},
          {"dim", r.dim},
          {"trials", r.trials},
          {"passed", r.passed},
          {"iterated_max_k", r.max_k},
          {"iterated_checks", r.iterated_checks},
          {"iterated_passed", r.iterated_passed},
          {"ok", r.ok()}};
}

}  // namespace dwp
