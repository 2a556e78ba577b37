#pragma once

// Checks DW(L~)_{x,[h^(p^k)]} == DW(L)_{x,[h]} (mod p) for L = closure of
// beta and L~ = closure of beta^(p^k), over a sweep of boundary data.

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dwp/dw_invariant.hpp"
#include "dwp/group_spec.hpp"

namespace dwp {

inline bool is_prime(std::uint64_t p) noexcept {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d <= p / d; ++d)
    if (p % d == 0) return false;
  return true;
}

struct CongruenceInstance {
  BraidWord beta;       // quotient link L = closure of beta
  std::uint64_t p = 0;
  unsigned k = 0;
  FiniteGroup group;
  std::uint64_t period = 0;  // p^k
  BraidWord periodic;        // beta^(p^k), closing up to L~
  ComponentData quotient_components;
  ComponentData periodic_components;
};

inline CongruenceInstance check_preconditions(const BraidWord& beta, std::uint64_t p, unsigned k, const FiniteGroup& g) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (k < 1) throw Error(ErrorKind::BadInput, "k must be at least 1");
  if (g.order() % p == 0) {
    throw Error(ErrorKind::GroupOrderDivisible, std::to_string(p) + " divides the group order " + std::to_string(g.order()));
  }
  auto quotient = components(beta);
  for (const auto& cycle : quotient.cycles) {
    if (cycle.size() % p == 0) {
      throw Error(ErrorKind::ComponentMismatch, "a component of the closure has " + std::to_string(cycle.size()) +
                                                    " strands, divisible by " + std::to_string(p));
    }
  }
  std::uint64_t period = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (period > kMaxBraidLetters / p) throw Error(ErrorKind::SearchTooLarge, "p^k is too large");
    period *= p;
  }
  auto periodic = braid_power(beta, period);
  auto lifted = components(periodic);
  // gcd(e_t, p^k) = 1, so each cycle of sigma^(p^k) is a cycle of sigma with
  // the same minimal basepoint.
  if (lifted.count != quotient.count || lifted.basepoints != quotient.basepoints ||
      lifted.component_of != quotient.component_of) {
    throw Error(ErrorKind::ComponentMismatch, "components of the periodic closure do not align with the quotient");
  }
  return CongruenceInstance{beta, p, k, g, period, std::move(periodic), std::move(quotient), std::move(lifted)};
}

struct CongruenceViolation {
  std::vector<element_t> x;
  std::vector<element_t> hclass;       // [h] in Cen(x), quotient side
  std::vector<element_t> lhs_hclass;   // [h^(p^k)], periodic side
  std::uint64_t lhs_count = 0;
  std::uint64_t rhs_count = 0;
  auto operator<=>(const CongruenceViolation&) const = default;
};

/// One checked boundary datum.
struct CongruenceCase {
  std::vector<element_t> x;
  std::vector<element_t> hclass;
  std::vector<element_t> lhs_hclass;
  std::uint64_t lhs_count = 0;
  std::uint64_t rhs_count = 0;
};

struct CongruenceReport {
  std::string braid;
  std::string group;
  std::uint64_t p = 0;
  unsigned k = 0;
  std::size_t n = 0;
  XScope scope = XScope::Representatives;
  std::uint64_t cases_checked = 0;
  std::vector<CongruenceViolation> violations;  // sorted
  double elapsed = 0.0;                          // seconds
  std::vector<CongruenceCase> cases;             // filled only when requested

  bool confirmed() const noexcept { return violations.empty(); }
};

/// All (x, [h]) cases at one meridian tuple.
inline std::vector<CongruenceCase> congruence_cases(const CongruenceInstance& inst, const std::vector<element_t>& x,
                                                    const EnumerationOptions& opts = {}) {
  const auto& g = inst.group;
  CentralizerClasses cen(g, x);
  auto rhs = longitude_class_counts(inst.beta, g, x, cen, opts);
  auto lhs = longitude_class_counts(inst.periodic, g, x, cen, opts);
  std::vector<CongruenceCase> out;
  for (auto& h : cen.all_class_tuples()) {
    std::vector<element_t> powered(h.size());
    for (std::size_t t = 0; t < h.size(); ++t) powered[t] = g.power(h[t], static_cast<std::int64_t>(inst.period));
    auto lhs_key = cen.representatives(powered);
    auto l = lhs.find(lhs_key);
    auto r = rhs.find(h);
    out.push_back(CongruenceCase{x, std::move(h), std::move(lhs_key), l == lhs.end() ? 0 : l->second,
                                 r == rhs.end() ? 0 : r->second});
  }
  return out;
}

inline CongruenceReport verify(const CongruenceInstance& inst, XScope scope = XScope::Representatives,
                               const EnumerationOptions& opts = {}, bool keep_cases = false) {
  auto start = std::chrono::steady_clock::now();
  CongruenceReport report;
  report.braid = inst.beta.to_string();
  report.group = inst.group.label();
  report.p = inst.p;
  report.k = inst.k;
  report.n = inst.quotient_components.count;
  report.scope = scope;

  const auto xs = x_tuples(inst.group, report.n, scope);
  // Parallel over meridian tuples; each tuple is enumerated sequentially.
  EnumerationOptions inner = opts;
  inner.threads = 1;
  auto chunks = detail::run_chunked<std::vector<CongruenceCase>>(
      xs.size(), opts.resolved_threads(), [&](std::uint64_t lo, std::uint64_t hi) {
        std::vector<CongruenceCase> out;
        for (auto i = lo; i < hi; ++i) {
          auto cases = congruence_cases(inst, xs[i], inner);
          std::move(cases.begin(), cases.end(), std::back_inserter(out));
        }
        return out;
      });

  for (auto& chunk : chunks) {
    for (auto& c : chunk) {
      ++report.cases_checked;
      if ((c.lhs_count % inst.p) != (c.rhs_count % inst.p)) {
        report.violations.push_back(CongruenceViolation{c.x, c.hclass, c.lhs_hclass, c.lhs_count, c.rhs_count});
      }
      if (keep_cases) report.cases.push_back(std::move(c));
    }
  }
  std::sort(report.violations.begin(), report.violations.end());
  report.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

// ---------------------------------------------------------------------------
// Batch runs

struct CatalogEntry {
  std::string braid;
  std::uint64_t p = 0;
  unsigned k = 0;
  std::string group;
};

enum class SweepStatus { Pass, Violation, PreconditionFailed, ResourceCap };

inline constexpr std::string_view to_string(SweepStatus s) {
  switch (s) {
    case SweepStatus::Pass: return "pass";
    case SweepStatus::Violation: return "violation";
    case SweepStatus::PreconditionFailed: return "precondition-failed";
    case SweepStatus::ResourceCap: return "resource-cap";
  }
  return "unknown";
}

struct SweepResult {
  CatalogEntry entry;
  SweepStatus status = SweepStatus::Pass;
  std::optional<CongruenceReport> report;
  std::string error;
};

struct SweepSummary {
  std::vector<SweepResult> results;
  double elapsed = 0.0;

  std::size_t count(SweepStatus s) const {
    return static_cast<std::size_t>(std::count_if(results.begin(), results.end(), [s](const auto& r) { return r.status == s; }));
  }

  /// 1 if any violation, else 2 for rejected inputs, else 3 for caps, else 0.
  int exit_status() const {
    if (count(SweepStatus::Violation) > 0) return 1;
    if (count(SweepStatus::PreconditionFailed) > 0) return 2;
    if (count(SweepStatus::ResourceCap) > 0) return 3;
    return 0;
  }
};

inline SweepSummary sweep(const std::vector<CatalogEntry>& catalog, XScope scope = XScope::Representatives,
                          const EnumerationOptions& opts = {}) {
  auto start = std::chrono::steady_clock::now();
  SweepSummary summary;
  for (const auto& entry : catalog) {
    SweepResult result{entry, SweepStatus::Pass, std::nullopt, {}};
    try {
      auto inst = check_preconditions(parse_braid(entry.braid), entry.p, entry.k, parse_group_spec(entry.group));
      result.report = verify(inst, scope, opts);
      if (!result.report->confirmed()) result.status = SweepStatus::Violation;
    } catch (const Error& e) {
      result.status = is_resource_error(e.kind()) ? SweepStatus::ResourceCap : SweepStatus::PreconditionFailed;
      result.error = e.what();
    }
    summary.results.push_back(std::move(result));
  }
  summary.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return summary;
}

}  // namespace dwp
