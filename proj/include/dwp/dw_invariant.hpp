#pragma once

// Untwisted Dijkgraaf-Witten counts of a closed braid: homomorphisms with
// prescribed meridian images and prescribed longitude images, either exact
// or up to conjugacy inside the meridian's centralizer.

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

#include "dwp/holonomy.hpp"

namespace dwp {

struct DWKeyExact {
  std::vector<element_t> x;
  std::vector<element_t> h;
  auto operator<=>(const DWKeyExact&) const = default;
};

/// hclass[t] is the smallest member of the class of h_t in Cen(x_t).
struct DWKeyClass {
  std::vector<element_t> x;
  std::vector<element_t> hclass;
  auto operator<=>(const DWKeyClass&) const = default;
};

enum class XScope { Representatives, All };

/// Sparse: only nonzero counts are stored.
struct DWTable {
  BraidWord braid;
  FiniteGroup group;
  std::size_t components = 0;
  XScope scope = XScope::Representatives;
  std::map<DWKeyExact, std::uint64_t> exact;
  std::map<DWKeyClass, std::uint64_t> classes;
};

/// Conjugacy classes of each Cen(x_t), for one meridian tuple.
class CentralizerClasses {
 public:
  CentralizerClasses(const FiniteGroup& g, const std::vector<element_t>& x) {
    per_component_.reserve(x.size());
    for (element_t xt : x) per_component_.push_back(subgroup_classes(g.centralizer(xt)));
  }

  std::size_t size() const noexcept { return per_component_.size(); }
  const SubgroupClasses& operator[](std::size_t t) const { return per_component_.at(t); }

  bool contains(const std::vector<element_t>& h) const {
    for (std::size_t t = 0; t < per_component_.size(); ++t)
      if (!per_component_[t].contains(h[t])) return false;
    return true;
  }

  std::vector<element_t> representatives(const std::vector<element_t>& h) const {
    std::vector<element_t> reps(h.size());
    for (std::size_t t = 0; t < h.size(); ++t) reps[t] = per_component_[t].representative_of(h[t]);
    return reps;
  }

  /// Every tuple of class representatives, lexicographic.
  std::vector<std::vector<element_t>> all_class_tuples() const {
    std::vector<std::vector<element_t>> out{{}};
    for (const auto& sc : per_component_) {
      std::vector<std::vector<element_t>> next;
      for (const auto& prefix : out) {
        for (const auto& c : sc.classes) {
          next.push_back(prefix);
          next.back().push_back(c.representative);
        }
      }
      out = std::move(next);
    }
    return out;
  }

 private:
  std::vector<SubgroupClasses> per_component_;
};

namespace detail {

inline void check_tuple(const FiniteGroup& g, const std::vector<element_t>& v, std::size_t n, const char* what) {
  if (v.size() != n) {
    throw Error(ErrorKind::LengthMismatch, std::string(what) + " has " + std::to_string(v.size()) + " entries for " +
                                               std::to_string(n) + " components");
  }
  for (element_t e : v)
    if (e >= g.order()) throw Error(ErrorKind::BadInput, std::string(what) + " element out of range");
}

}  // namespace detail

/// Exact longitude counts at fixed meridian images x.
inline std::map<std::vector<element_t>, std::uint64_t> longitude_counts(const BraidWord& beta, const FiniteGroup& g,
                                                                        const std::vector<element_t>& x,
                                                                        const EnumerationOptions& opts = {}) {
  std::map<std::vector<element_t>, std::uint64_t> counts;
  for (const auto& rec : enumerate_homs(beta, g, x, opts)) ++counts[rec.longitude];
  return counts;
}

/// Class-level longitude counts at fixed x, keyed by class representatives.
inline std::map<std::vector<element_t>, std::uint64_t> longitude_class_counts(const BraidWord& beta, const FiniteGroup& g,
                                                                              const std::vector<element_t>& x,
                                                                              const CentralizerClasses& cen,
                                                                              const EnumerationOptions& opts = {}) {
  std::map<std::vector<element_t>, std::uint64_t> counts;
  for (const auto& [h, n] : longitude_counts(beta, g, x, opts)) counts[cen.representatives(h)] += n;
  return counts;
}

inline std::uint64_t dw_exact(const BraidWord& beta, const FiniteGroup& g, const std::vector<element_t>& x,
                              const std::vector<element_t>& h, const EnumerationOptions& opts = {}) {
  const auto n = components(beta).count;
  detail::check_tuple(g, x, n, "x");
  detail::check_tuple(g, h, n, "h");
  for (std::size_t t = 0; t < n; ++t)
    if (!g.commute(x[t], h[t])) return 0;
  auto counts = longitude_counts(beta, g, x, opts);
  auto it = counts.find(h);
  return it == counts.end() ? 0 : it->second;
}

inline std::uint64_t dw_class(const BraidWord& beta, const FiniteGroup& g, const std::vector<element_t>& x,
                              const std::vector<element_t>& h, const EnumerationOptions& opts = {}) {
  const auto n = components(beta).count;
  detail::check_tuple(g, x, n, "x");
  detail::check_tuple(g, h, n, "h");
  CentralizerClasses cen(g, x);
  if (!cen.contains(h)) throw Error(ErrorKind::HNotInCentralizer, "some h_t does not commute with x_t");
  auto counts = longitude_class_counts(beta, g, x, cen, opts);
  auto it = counts.find(cen.representatives(h));
  return it == counts.end() ? 0 : it->second;
}

/// Meridian tuples in scope: per-component class representatives of Γ, or
/// all of Γ^n. Lexicographic.
inline std::vector<std::vector<element_t>> x_tuples(const FiniteGroup& g, std::size_t n, XScope scope) {
  std::vector<element_t> choices;
  if (scope == XScope::Representatives) {
    choices = g.class_representatives();
  } else {
    for (std::size_t e = 0; e < g.order(); ++e) choices.push_back(static_cast<element_t>(e));
  }
  std::uint64_t total = 1;
  for (std::size_t t = 0; t < n; ++t) total = detail::saturating_mul(total, choices.size());
  if (total > kDefaultSearchCap) throw Error(ErrorKind::SearchTooLarge, "too many meridian tuples");
  std::vector<std::vector<element_t>> out{{}};
  for (std::size_t t = 0; t < n; ++t) {
    std::vector<std::vector<element_t>> next;
    next.reserve(out.size() * choices.size());
    for (const auto& prefix : out) {
      for (element_t c : choices) {
        next.push_back(prefix);
        next.back().push_back(c);
      }
    }
    out = std::move(next);
  }
  return out;
}

/// Table over explicit meridian tuples.
inline DWTable dw_table(const BraidWord& beta, const FiniteGroup& g, const std::vector<std::vector<element_t>>& xs,
                        XScope scope_label, const EnumerationOptions& opts = {}) {
  DWTable table{beta, g, components(beta).count, scope_label, {}, {}};
  for (const auto& x : xs) {
    detail::check_tuple(g, x, table.components, "x");
    CentralizerClasses cen(g, x);
    for (const auto& [h, n] : longitude_counts(beta, g, x, opts)) {
      table.exact[DWKeyExact{x, h}] += n;
      table.classes[DWKeyClass{x, cen.representatives(h)}] += n;
    }
  }
  return table;
}

inline DWTable dw_table(const BraidWord& beta, const FiniteGroup& g, XScope scope = XScope::Representatives,
                        const EnumerationOptions& opts = {}) {
  return dw_table(beta, g, x_tuples(g, components(beta).count, scope), scope, opts);
}

}  // namespace dwp
