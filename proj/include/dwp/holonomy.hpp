#pragma once

// Homomorphisms from the group of a closed braid into a finite group, as
// fixed points of the Artin action on bottom meridian labels.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <thread>
#include <vector>

#include "dwp/braid.hpp"
#include "dwp/group.hpp"

namespace dwp {

using GammaTuple = std::vector<element_t>;

struct HomRecord {
  GammaTuple tuple;
  std::vector<element_t> meridian;   // per component, label at the basepoint
  std::vector<element_t> longitude;  // per component, 0-framed

  bool operator==(const HomRecord&) const = default;
};

inline constexpr std::uint64_t kDefaultSearchCap = 1'000'000'000ULL;

struct EnumerationOptions {
  unsigned threads = 0;  // 0: hardware concurrency
  std::uint64_t search_cap = kDefaultSearchCap;
  bool uncapped = false;

  unsigned resolved_threads() const noexcept {
    if (threads != 0) return threads;
    return std::max(1U, std::thread::hardware_concurrency());
  }
};

/// One letter of the action on labels, in place.
///   +i: (a, b) -> (a b a^-1, a)
///   -i: (a, b) -> (b, b^-1 a b)
inline void apply_letter(const FiniteGroup& g, int letter, std::span<element_t> labels) noexcept {
  auto i = letter_position(letter);
  element_t a = labels[i], b = labels[i + 1];
  if (letter > 0) {
    labels[i] = g.conj(a, b);
    labels[i + 1] = a;
  } else {
    labels[i] = b;
    labels[i + 1] = g.conj(g.inv(b), a);
  }
}

inline GammaTuple artin_action(const BraidWord& beta, const GammaTuple& labels, const FiniteGroup& g) {
  if (labels.size() != beta.strands) {
    throw Error(ErrorKind::LengthMismatch, "tuple of length " + std::to_string(labels.size()) + " for " +
                                               std::to_string(beta.strands) + " strands");
  }
  for (element_t e : labels)
    if (e >= g.order()) throw Error(ErrorKind::BadInput, "label out of range");
  GammaTuple out = labels;
  for (int l : beta.letters) apply_letter(g, l, out);
  return out;
}

namespace detail {

/// levels[j] holds the labels just below letter j; levels.back() is the top.
inline std::vector<GammaTuple> label_levels(const BraidWord& beta, const GammaTuple& labels, const FiniteGroup& g) {
  std::vector<GammaTuple> levels;
  levels.reserve(beta.letters.size() + 1);
  levels.push_back(labels);
  for (int l : beta.letters) {
    levels.push_back(levels.back());
    apply_letter(g, l, levels.back());
  }
  return levels;
}

/// Walks component t once around the closure from its basepoint. At each
/// under-pass the strand's label u becomes o^s u o^-s (o the over-strand
/// label, s the crossing sign), so the accumulator is multiplied by o^s on
/// the left; after the full circuit it conjugates the meridian to itself.
/// Returns the blackboard-framed longitude.
inline element_t blackboard_longitude(const BraidWord& beta, const std::vector<GammaTuple>& levels,
                                      const ComponentData& comp, std::size_t t, const FiniteGroup& g) {
  element_t acc = g.identity();
  std::size_t pos = comp.basepoints[t];
  for (std::size_t pass = 0; pass < comp.cycles[t].size(); ++pass) {
    for (std::size_t j = 0; j < beta.letters.size(); ++j) {
      int l = beta.letters[j];
      auto i = letter_position(l);
      if (pos != i && pos != i + 1) continue;
      if (l > 0) {
        if (pos == i + 1) acc = g.mul(levels[j][i], acc);
        pos = pos == i ? i + 1 : i;
      } else {
        if (pos == i) acc = g.mul(g.inv(levels[j][i + 1]), acc);
        pos = pos == i ? i + 1 : i;
      }
    }
  }
  return acc;
}

inline element_t framed_longitude(const BraidWord& beta, const std::vector<GammaTuple>& levels,
                                  const ComponentData& comp, std::size_t t, const FiniteGroup& g) {
  element_t meridian = levels.front()[comp.basepoints[t]];
  return g.mul(blackboard_longitude(beta, levels, comp, t, g), g.power(meridian, -comp.self_writhe[t]));
}

inline HomRecord make_record(const BraidWord& beta, const ComponentData& comp, const FiniteGroup& g, GammaTuple tuple) {
  HomRecord rec;
  auto levels = label_levels(beta, tuple, g);
  rec.meridian.reserve(comp.count);
  rec.longitude.reserve(comp.count);
  for (std::size_t t = 0; t < comp.count; ++t) {
    rec.meridian.push_back(tuple[comp.basepoints[t]]);
    rec.longitude.push_back(framed_longitude(beta, levels, comp, t, g));
  }
  rec.tuple = std::move(tuple);
  return rec;
}

inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) noexcept {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

/// Per-position candidate labels. Under a meridian prescription the basepoint
/// is pinned and the rest of its cycle ranges over the Γ-class of x_t.
inline std::vector<std::vector<element_t>> candidates(const BraidWord& beta, const FiniteGroup& g,
                                                      const ComponentData& comp,
                                                      const std::optional<std::vector<element_t>>& x) {
  std::vector<std::vector<element_t>> cand(beta.strands);
  if (!x) {
    std::vector<element_t> all(g.order());
    for (std::size_t e = 0; e < all.size(); ++e) all[e] = static_cast<element_t>(e);
    std::fill(cand.begin(), cand.end(), all);
    return cand;
  }
  if (x->size() != comp.count) {
    throw Error(ErrorKind::LengthMismatch, "meridian prescription has " + std::to_string(x->size()) +
                                               " entries for " + std::to_string(comp.count) + " components");
  }
  for (std::size_t t = 0; t < comp.count; ++t) {
    element_t xt = (*x)[t];
    if (xt >= g.order()) throw Error(ErrorKind::BadInput, "meridian element out of range");
    for (std::size_t pos : comp.cycles[t]) {
      cand[pos] = pos == comp.basepoints[t] ? std::vector<element_t>{xt} : g.class_members(g.class_index(xt));
    }
  }
  return cand;
}

/// Visits every fixed tuple with linear index in [lo, hi), in lexicographic order.
template <class Visit>
void scan_fixed_points(const BraidWord& beta, const FiniteGroup& g, const std::vector<std::vector<element_t>>& cand,
                       std::uint64_t lo, std::uint64_t hi, Visit&& visit) {
  const std::size_t m = cand.size();
  if (lo >= hi) return;
  std::vector<std::size_t> digit(m);
  std::uint64_t rest = lo;
  for (std::size_t pos = m; pos-- > 0;) {
    digit[pos] = static_cast<std::size_t>(rest % cand[pos].size());
    rest /= cand[pos].size();
  }
  GammaTuple tuple(m), work(m);
  for (std::size_t pos = 0; pos < m; ++pos) tuple[pos] = cand[pos][digit[pos]];
  for (std::uint64_t idx = lo; idx < hi; ++idx) {
    work = tuple;
    for (int l : beta.letters) apply_letter(g, l, work);
    if (work == tuple) visit(tuple);
    for (std::size_t pos = m; pos-- > 0;) {
      if (++digit[pos] < cand[pos].size()) {
        tuple[pos] = cand[pos][digit[pos]];
        break;
      }
      digit[pos] = 0;
      tuple[pos] = cand[pos][0];
    }
  }
}

/// Splits the candidate space into contiguous chunks and runs `per_chunk`
/// on each, possibly concurrently. Results are returned in chunk order.
template <class Result, class PerChunk>
std::vector<Result> run_chunked(std::uint64_t total, unsigned threads, PerChunk&& per_chunk) {
  const std::uint64_t chunk_count = std::max<std::uint64_t>(1, std::min<std::uint64_t>(total, std::uint64_t{threads} * 8));
  std::vector<Result> results(chunk_count);
  auto bounds = [&](std::uint64_t c) { return total / chunk_count * c + std::min(c, total % chunk_count); };
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t c = next++; c < chunk_count; c = next++) results[c] = per_chunk(bounds(c), bounds(c + 1));
  };
  if (threads <= 1 || chunk_count == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned k = 0; k < std::min<std::uint64_t>(threads, chunk_count); ++k) pool.emplace_back(worker);
  }
  return results;
}

}  // namespace detail

/// Size of the candidate space enumerate_homs would scan.
inline std::uint64_t search_space_size(const BraidWord& beta, const FiniteGroup& g,
                                       const std::optional<std::vector<element_t>>& x = std::nullopt) {
  auto comp = components(beta);
  auto cand = detail::candidates(beta, g, comp, x);
  std::uint64_t total = 1;
  for (const auto& c : cand) total = detail::saturating_mul(total, c.size());
  return total;
}

namespace detail {

inline std::uint64_t checked_space(const std::vector<std::vector<element_t>>& cand, const EnumerationOptions& opts) {
  std::uint64_t total = 1;
  for (const auto& c : cand) total = saturating_mul(total, c.size());
  if (!opts.uncapped && total > opts.search_cap) {
    throw Error(ErrorKind::SearchTooLarge,
                "search space " + std::to_string(total) + " exceeds cap " + std::to_string(opts.search_cap));
  }
  if (total == std::numeric_limits<std::uint64_t>::max()) throw Error(ErrorKind::SearchTooLarge, "search space overflows");
  return total;
}

}  // namespace detail

/// Every homomorphism (fixed tuple) in lexicographic tuple order, optionally
/// restricted to prescribed meridian images x (one per component).
inline std::vector<HomRecord> enumerate_homs(const BraidWord& beta, const FiniteGroup& g,
                                             const std::optional<std::vector<element_t>>& x = std::nullopt,
                                             const EnumerationOptions& opts = {}) {
  const auto comp = components(beta);
  const auto cand = detail::candidates(beta, g, comp, x);
  const auto total = detail::checked_space(cand, opts);
  auto chunks = detail::run_chunked<std::vector<HomRecord>>(total, opts.resolved_threads(), [&](std::uint64_t lo, std::uint64_t hi) {
    std::vector<HomRecord> out;
    detail::scan_fixed_points(beta, g, cand, lo, hi, [&](const GammaTuple& t) { out.push_back(detail::make_record(beta, comp, g, t)); });
    return out;
  });
  std::vector<HomRecord> records;
  for (auto& c : chunks) std::move(c.begin(), c.end(), std::back_inserter(records));
  return records;
}

inline std::uint64_t count_homs(const BraidWord& beta, const FiniteGroup& g,
                                const std::optional<std::vector<element_t>>& x = std::nullopt,
                                const EnumerationOptions& opts = {}) {
  const auto comp = components(beta);
  const auto cand = detail::candidates(beta, g, comp, x);
  const auto total = detail::checked_space(cand, opts);
  auto chunks = detail::run_chunked<std::uint64_t>(total, opts.resolved_threads(), [&](std::uint64_t lo, std::uint64_t hi) {
    std::uint64_t n = 0;
    detail::scan_fixed_points(beta, g, cand, lo, hi, [&](const GammaTuple&) { ++n; });
    return n;
  });
  std::uint64_t sum = 0;
  for (auto c : chunks) sum += c;
  return sum;
}

/// 0-framed longitude image of component t for a fixed tuple.
inline element_t longitude_image(const BraidWord& beta, const GammaTuple& labels, std::size_t t, const FiniteGroup& g) {
  if (labels.size() != beta.strands) {
    throw Error(ErrorKind::LengthMismatch, "tuple of length " + std::to_string(labels.size()) + " for " +
                                               std::to_string(beta.strands) + " strands");
  }
  for (element_t e : labels)
    if (e >= g.order()) throw Error(ErrorKind::BadInput, "label out of range");
  auto levels = detail::label_levels(beta, labels, g);
  if (levels.back() != labels) throw Error(ErrorKind::NotAFixedPoint, "tuple is not fixed by the braid");
  auto comp = components(beta);
  if (t >= comp.count) throw Error(ErrorKind::BadInput, "component index out of range");
  return detail::framed_longitude(beta, levels, comp, t, g);
}

}  // namespace dwp
