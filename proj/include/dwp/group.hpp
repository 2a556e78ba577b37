#pragma once

// Finite groups as dense Cayley tables, with conjugacy classes and
// centralizers. Elements are indices 0..order-1.

#include <algorithm>
#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dwp/error.hpp"

namespace dwp {

using element_t = std::uint32_t;

inline constexpr std::size_t kDefaultGroupCap = 10000;
// Cayley table entries are stored as 16-bit indices.
inline constexpr std::size_t kHardGroupCap = 65535;

class Subgroup;
struct ConjClass;

/// Raised when a Cayley table fails a group axiom. `witness` holds the
/// offending elements: (a, b, c) with (ab)c != a(bc) for associativity,
/// (a, a, a) for a missing inverse and (0, 0, 0) when no identity exists.
class GroupAxiomError : public Error {
 public:
  GroupAxiomError(const std::string& what, std::array<element_t, 3> witness)
      : Error(ErrorKind::NotAGroup, what), witness_(witness) {}
  const std::array<element_t, 3>& witness() const noexcept { return witness_; }

 private:
  std::array<element_t, 3> witness_;
};

class FiniteGroup {
 public:
  using Table = std::vector<std::vector<element_t>>;

  /// Validates `table` (Latin square, associativity, identity, inverses) and
  /// keeps its element order. Empty `names` means "0".."n-1".
  static FiniteGroup from_cayley_table(const Table& table, std::vector<std::string> names = {},
                                       std::string label = {}, std::size_t cap = kDefaultGroupCap);

  std::size_t order() const noexcept { return impl_->n; }
  element_t identity() const noexcept { return impl_->id; }
  const std::string& label() const noexcept { return impl_->label; }

  element_t mul(element_t a, element_t b) const noexcept { return impl_->mul[a * impl_->n + b]; }
  element_t inv(element_t a) const noexcept { return impl_->inv[a]; }
  /// g x g^-1
  element_t conj(element_t g, element_t x) const noexcept { return mul(mul(g, x), inv(g)); }
  bool commute(element_t a, element_t b) const noexcept { return mul(a, b) == mul(b, a); }

  /// g^n by binary exponentiation; negative n uses the inverse.
  element_t power(element_t g, std::int64_t n) const noexcept {
    if (n < 0) {
      g = inv(g);
      n = -n;
    }
    element_t acc = identity();
    auto exp = static_cast<std::uint64_t>(n);
    while (exp != 0) {
      if (exp & 1U) acc = mul(acc, g);
      g = mul(g, g);
      exp >>= 1U;
    }
    return acc;
  }

  const std::string& name(element_t e) const { return impl_->names.at(e); }
  const std::vector<std::string>& names() const noexcept { return impl_->names; }
  std::optional<element_t> find(std::string_view name) const {
    auto it = impl_->by_name.find(std::string(name));
    if (it == impl_->by_name.end()) return std::nullopt;
    return it->second;
  }

  /// Classes sorted by representative (the smallest member).
  std::vector<ConjClass> conjugacy_classes() const;
  std::size_t class_count() const noexcept { return impl_->classes.size(); }
  /// Index into conjugacy_classes() of the class containing e.
  std::size_t class_index(element_t e) const noexcept { return impl_->class_of[e]; }
  const std::vector<element_t>& class_members(std::size_t index) const { return impl_->classes.at(index); }
  bool conjugate(element_t a, element_t b) const noexcept { return class_index(a) == class_index(b); }
  /// Smallest-index representative of every class, ascending.
  std::vector<element_t> class_representatives() const {
    std::vector<element_t> reps;
    reps.reserve(impl_->classes.size());
    for (const auto& c : impl_->classes) reps.push_back(c.front());
    return reps;
  }

  Subgroup centralizer(element_t x) const;
  std::size_t centralizer_order(element_t x) const noexcept { return impl_->n / impl_->classes[class_index(x)].size(); }
  bool is_abelian() const noexcept { return impl_->classes.size() == impl_->n; }

  bool same_as(const FiniteGroup& other) const noexcept { return impl_ == other.impl_; }

  /// Trusted constructor for tables produced by the built-in generators.
  static FiniteGroup from_trusted(std::size_t n, std::vector<std::uint16_t> mul, element_t id,
                                  std::vector<std::string> names, std::string label);

 private:
  struct Impl {
    std::size_t n = 0;
    element_t id = 0;
    std::vector<std::uint16_t> mul;
    std::vector<element_t> inv;
    std::vector<std::string> names;
    std::unordered_map<std::string, element_t> by_name;
    std::string label;
    std::vector<std::size_t> class_of;
    std::vector<std::vector<element_t>> classes;
  };

  explicit FiniteGroup(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  std::shared_ptr<const Impl> impl_;
};

/// A subset of a parent group closed under products and inverses.
class Subgroup {
 public:
  Subgroup(FiniteGroup parent, std::vector<element_t> members) : parent_(std::move(parent)), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }

  static Subgroup whole(const FiniteGroup& g) {
    std::vector<element_t> all(g.order());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<element_t>(i);
    return Subgroup(g, std::move(all));
  }

  const FiniteGroup& parent() const noexcept { return parent_; }
  const std::vector<element_t>& members() const noexcept { return members_; }
  std::size_t order() const noexcept { return members_.size(); }
  bool contains(element_t e) const { return std::binary_search(members_.begin(), members_.end(), e); }
  bool is_whole() const noexcept { return members_.size() == parent_.order(); }

 private:
  FiniteGroup parent_;
  std::vector<element_t> members_;
};

struct ConjClass {
  element_t representative = 0;
  std::vector<element_t> members;  // sorted
  std::shared_ptr<const Subgroup> ambient;

  std::size_t size() const noexcept { return members.size(); }
  bool contains(element_t e) const { return std::binary_search(members.begin(), members.end(), e); }
};

/// Partition of a subgroup into its own conjugacy classes.
struct SubgroupClasses {
  std::shared_ptr<const Subgroup> ambient;
  std::vector<ConjClass> classes;       // sorted by representative
  std::vector<std::int32_t> class_of;   // per parent element, -1 outside the subgroup

  element_t representative_of(element_t e) const {
    auto c = class_of.at(e);
    if (c < 0) throw Error(ErrorKind::NotInSubgroup, "element " + std::to_string(e) + " is not in the subgroup");
    return classes[static_cast<std::size_t>(c)].representative;
  }
  bool contains(element_t e) const { return class_of.at(e) >= 0; }
};

// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<element_t> orbit_under(const FiniteGroup& g, const std::vector<element_t>& acting, element_t x) {
  std::vector<element_t> orbit;
  orbit.reserve(acting.size());
  for (element_t k : acting) orbit.push_back(g.conj(k, x));
  std::sort(orbit.begin(), orbit.end());
  orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
  return orbit;
}

}  // namespace detail

inline FiniteGroup FiniteGroup::from_trusted(std::size_t n, std::vector<std::uint16_t> mul, element_t id,
                                             std::vector<std::string> names, std::string label) {
  auto impl = std::make_shared<Impl>();
  impl->n = n;
  impl->id = id;
  impl->mul = std::move(mul);
  impl->label = std::move(label);
  if (names.empty()) {
    names.reserve(n);
    for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  }
  impl->names = std::move(names);
  for (std::size_t i = 0; i < n; ++i) {
    if (!impl->by_name.emplace(impl->names[i], static_cast<element_t>(i)).second) {
      throw Error(ErrorKind::BadShape, "duplicate element name '" + impl->names[i] + "'");
    }
  }

  impl->inv.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (impl->mul[a * n + b] == id) {
        impl->inv[a] = static_cast<element_t>(b);
        break;
      }
    }
  }

  constexpr auto kUnassigned = static_cast<std::size_t>(-1);
  impl->class_of.assign(n, kUnassigned);
  for (std::size_t x = 0; x < n; ++x) {
    if (impl->class_of[x] != kUnassigned) continue;
    std::vector<element_t> cls;
    for (std::size_t k = 0; k < n; ++k) {
      auto kx = impl->mul[k * n + x];
      cls.push_back(impl->mul[kx * n + impl->inv[k]]);
    }
    std::sort(cls.begin(), cls.end());
    cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
    for (element_t m : cls) impl->class_of[m] = impl->classes.size();
    impl->classes.push_back(std::move(cls));
  }
  return FiniteGroup(std::move(impl));
}

inline FiniteGroup FiniteGroup::from_cayley_table(const Table& table, std::vector<std::string> names, std::string label,
                                                  std::size_t cap) {
  const std::size_t n = table.size();
  if (n == 0) throw Error(ErrorKind::BadShape, "empty Cayley table");
  if (n > std::min(cap, kHardGroupCap)) {
    throw Error(ErrorKind::GroupTooLarge, "order " + std::to_string(n) + " exceeds cap " + std::to_string(std::min(cap, kHardGroupCap)));
  }
  if (!names.empty() && names.size() != n) throw Error(ErrorKind::BadShape, "names length differs from table order");

  std::vector<std::uint16_t> mul(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n) throw Error(ErrorKind::BadShape, "row " + std::to_string(a) + " has wrong length");
    for (std::size_t b = 0; b < n; ++b) {
      if (table[a][b] >= n) throw Error(ErrorKind::BadShape, "entry out of range in row " + std::to_string(a));
      mul[a * n + b] = static_cast<std::uint16_t>(table[a][b]);
    }
  }
  auto at = [&](std::size_t a, std::size_t b) -> std::size_t { return mul[a * n + b]; };

  std::vector<char> seen(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < n; ++b) {
      if (seen[at(a, b)]++) {
        auto w = static_cast<element_t>(a);
        throw GroupAxiomError("row " + std::to_string(a) + " repeats an entry", {w, w, w});
      }
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < n; ++b) {
      if (seen[at(b, a)]++) {
        auto w = static_cast<element_t>(a);
        throw GroupAxiomError("column " + std::to_string(a) + " repeats an entry", {w, w, w});
      }
    }
  }

  // Light's test: checking (x s) y == x (s y) for s in a generating set of
  // the magma is enough for full associativity.
  std::vector<char> in_closure(n);
  std::vector<std::size_t> closure;
  std::vector<std::size_t> generators;
  auto absorb = [&](std::size_t start) {
    std::vector<std::size_t> queue{start};
    in_closure[start] = 1;
    closure.push_back(start);
    while (!queue.empty()) {
      std::size_t u = queue.back();
      queue.pop_back();
      for (std::size_t i = 0; i < closure.size(); ++i) {
        std::size_t v = closure[i];
        for (std::size_t w : {at(u, v), at(v, u)}) {
          if (!in_closure[w]) {
            in_closure[w] = 1;
            closure.push_back(w);
            queue.push_back(w);
          }
        }
      }
    }
  };
  for (std::size_t a = 0; a < n; ++a) {
    if (in_closure[a]) continue;
    generators.push_back(a);
    absorb(a);
  }
  for (std::size_t s : generators) {
    for (std::size_t x = 0; x < n; ++x) {
      std::size_t xs = at(x, s);
      for (std::size_t y = 0; y < n; ++y) {
        if (at(xs, y) != at(x, at(s, y))) {
          throw GroupAxiomError("not associative: (" + std::to_string(x) + "*" + std::to_string(s) + ")*" +
                                    std::to_string(y) + " != " + std::to_string(x) + "*(" + std::to_string(s) +
                                    "*" + std::to_string(y) + ")",
                                {static_cast<element_t>(x), static_cast<element_t>(s), static_cast<element_t>(y)});
        }
      }
    }
  }

  std::optional<std::size_t> id;
  for (std::size_t e = 0; e < n && !id; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = at(e, a) == a && at(a, e) == a;
    if (ok) id = e;
  }
  if (!id) throw GroupAxiomError("no two-sided identity", {0, 0, 0});

  for (std::size_t a = 0; a < n; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < n && !found; ++b) found = at(a, b) == *id && at(b, a) == *id;
    if (!found) {
      auto w = static_cast<element_t>(a);
      throw GroupAxiomError("element " + std::to_string(a) + " has no two-sided inverse", {w, w, w});
    }
  }

  return from_trusted(n, std::move(mul), static_cast<element_t>(*id), std::move(names), std::move(label));
}

inline std::vector<ConjClass> FiniteGroup::conjugacy_classes() const {
  auto whole = std::make_shared<const Subgroup>(Subgroup::whole(*this));
  std::vector<ConjClass> out;
  out.reserve(impl_->classes.size());
  for (const auto& members : impl_->classes) out.push_back(ConjClass{members.front(), members, whole});
  return out;
}

inline Subgroup FiniteGroup::centralizer(element_t x) const {
  std::vector<element_t> members;
  members.reserve(centralizer_order(x));
  for (std::size_t g = 0; g < impl_->n; ++g) {
    if (commute(static_cast<element_t>(g), x)) members.push_back(static_cast<element_t>(g));
  }
  return Subgroup(*this, std::move(members));
}

inline std::vector<ConjClass> conjugacy_classes(const FiniteGroup& g) { return g.conjugacy_classes(); }

inline Subgroup centralizer(const FiniteGroup& g, element_t x) {
  if (x >= g.order()) throw Error(ErrorKind::BadInput, "element index out of range");
  return g.centralizer(x);
}

inline element_t power(const FiniteGroup& g, element_t x, std::int64_t n) { return g.power(x, n); }

/// Conjugacy class of h inside H, i.e. the orbit under conjugation by H only.
inline ConjClass class_in_subgroup(const Subgroup& h_group, element_t h) {
  if (!h_group.contains(h)) throw Error(ErrorKind::NotInSubgroup, "element " + std::to_string(h) + " is not in the subgroup");
  auto members = detail::orbit_under(h_group.parent(), h_group.members(), h);
  element_t rep = members.front();
  return ConjClass{rep, std::move(members), std::make_shared<const Subgroup>(h_group)};
}

inline SubgroupClasses subgroup_classes(const Subgroup& h_group) {
  SubgroupClasses out;
  out.ambient = std::make_shared<const Subgroup>(h_group);
  out.class_of.assign(h_group.parent().order(), -1);
  for (element_t h : h_group.members()) {
    if (out.class_of[h] >= 0) continue;
    auto members = detail::orbit_under(h_group.parent(), h_group.members(), h);
    auto index = static_cast<std::int32_t>(out.classes.size());
    for (element_t m : members) out.class_of[m] = index;
    element_t rep = members.front();
    out.classes.push_back(ConjClass{rep, std::move(members), out.ambient});
  }
  // Members are scanned in ascending order, so classes come out sorted by representative.
  return out;
}

// ---------------------------------------------------------------------------
// Permutation groups

/// Zero-based images: perm[i] is the image of point i.
using Permutation = std::vector<std::uint32_t>;

inline constexpr std::size_t kMaxPermutationDegree = 255;

/// Cycle notation with one-based points, identity written "()".
inline std::string cycle_notation(const Permutation& perm) {
  std::string out;
  std::vector<char> done(perm.size());
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (done[start] || perm[start] == start) continue;
    out += '(';
    std::size_t i = start;
    bool first = true;
    while (!done[i]) {
      done[i] = 1;
      if (!first) out += ' ';
      out += std::to_string(i + 1);
      first = false;
      i = perm[i];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

/// Parses "(1 2)(3 4 5)" over {1..degree}. Cycles compose right to left.
/// Commas are accepted as separators inside a cycle.
inline Permutation parse_cycles(std::size_t degree, std::string_view text) {
  Permutation perm(degree);
  for (std::size_t i = 0; i < degree; ++i) perm[i] = static_cast<std::uint32_t>(i);
  std::vector<Permutation> cycles;
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) -> Error {
    return Error(ErrorKind::BadPermutation, why + " in '" + std::string(text) + "'");
  };
  while (pos < text.size()) {
    char c = text[pos];
    if (c == ' ' || c == '\t') {
      ++pos;
      continue;
    }
    if (c != '(') throw fail("expected '('");
    std::size_t close = text.find(')', pos);
    if (close == std::string_view::npos) throw fail("unterminated cycle");
    std::vector<std::uint32_t> points;
    std::string number;
    auto flush = [&] {
      if (number.empty()) return;
      unsigned long v = std::stoul(number);
      if (v < 1 || v > degree) throw fail("point " + number + " outside 1.." + std::to_string(degree));
      points.push_back(static_cast<std::uint32_t>(v - 1));
      number.clear();
    };
    for (std::size_t i = pos + 1; i < close; ++i) {
      char d = text[i];
      if (d >= '0' && d <= '9') {
        number += d;
      } else if (d == ' ' || d == ',' || d == '\t') {
        flush();
      } else {
        throw fail(std::string("unexpected character '") + d + "'");
      }
    }
    flush();
    auto sorted = points;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw fail("repeated point in a cycle");
    Permutation cyc(degree);
    for (std::size_t i = 0; i < degree; ++i) cyc[i] = static_cast<std::uint32_t>(i);
    for (std::size_t i = 0; i < points.size(); ++i) cyc[points[i]] = points[(i + 1) % points.size()];
    cycles.push_back(std::move(cyc));
    pos = close + 1;
  }
  for (const auto& cyc : cycles) {
    Permutation next(degree);
    for (std::size_t i = 0; i < degree; ++i) next[i] = perm[cyc[i]];
    perm = std::move(next);
  }
  return perm;
}

/// Closes the generators under composition, breadth first from the
/// identity. Products are function composition: (g*h)(i) = g(h(i)).
/// Element 0 is the identity; names are cycle notation.
inline FiniteGroup from_permutation_generators(std::size_t degree, const std::vector<Permutation>& generators,
                                               std::string label = {}, std::size_t cap = kDefaultGroupCap) {
  if (degree == 0 || degree > kMaxPermutationDegree) {
    throw Error(ErrorKind::BadPermutation, "degree must be in 1.." + std::to_string(kMaxPermutationDegree));
  }
  cap = std::min(cap, kHardGroupCap);
  for (const auto& g : generators) {
    auto sorted = g;
    std::sort(sorted.begin(), sorted.end());
    bool ok = g.size() == degree;
    for (std::size_t i = 0; ok && i < degree; ++i) ok = sorted[i] == i;
    if (!ok) throw Error(ErrorKind::BadPermutation, "generator is not a permutation of degree " + std::to_string(degree));
  }

  auto key = [](const Permutation& p) { return std::string(p.begin(), p.end()); };
  std::vector<Permutation> elements;
  std::unordered_map<std::string, element_t> index;
  // Breadth-first tree: element e = elements[parent[e]] * generators[via[e]].
  std::vector<element_t> parent;
  std::vector<std::size_t> via;
  std::vector<std::vector<element_t>> right_gen;

  Permutation id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = static_cast<std::uint32_t>(i);
  elements.push_back(id);
  index.emplace(key(id), 0);
  parent.push_back(0);
  via.push_back(0);

  for (std::size_t head = 0; head < elements.size(); ++head) {
    right_gen.emplace_back(generators.size());
    for (std::size_t s = 0; s < generators.size(); ++s) {
      Permutation prod(degree);
      for (std::size_t i = 0; i < degree; ++i) prod[i] = elements[head][generators[s][i]];
      auto [it, inserted] = index.emplace(key(prod), static_cast<element_t>(elements.size()));
      if (inserted) {
        if (elements.size() + 1 > cap) {
          throw Error(ErrorKind::GroupTooLarge, "generated group exceeds cap " + std::to_string(cap));
        }
        elements.push_back(std::move(prod));
        parent.push_back(static_cast<element_t>(head));
        via.push_back(s);
      }
      right_gen[head][s] = it->second;
    }
  }

  const std::size_t n = elements.size();
  std::vector<std::uint16_t> mul(n * n);
  for (std::size_t g = 0; g < n; ++g) {
    mul[g * n] = static_cast<std::uint16_t>(g);
    for (std::size_t h = 1; h < n; ++h) {
      auto gp = mul[g * n + parent[h]];
      mul[g * n + h] = static_cast<std::uint16_t>(right_gen[gp][via[h]]);
    }
  }
  std::vector<std::string> names;
  names.reserve(n);
  for (const auto& p : elements) names.push_back(cycle_notation(p));
  return FiniteGroup::from_trusted(n, std::move(mul), 0, std::move(names), std::move(label));
}

/// Generators separated by ';', each in cycle notation.
inline FiniteGroup from_permutation_generators(std::size_t degree, std::string_view generators,
                                               std::string label = {}, std::size_t cap = kDefaultGroupCap) {
  std::vector<Permutation> gens;
  std::size_t start = 0;
  while (start <= generators.size()) {
    std::size_t end = generators.find(';', start);
    if (end == std::string_view::npos) end = generators.size();
    auto piece = generators.substr(start, end - start);
    if (piece.find_first_not_of(" \t") != std::string_view::npos) gens.push_back(parse_cycles(degree, piece));
    start = end + 1;
  }
  return from_permutation_generators(degree, gens, std::move(label), cap);
}

// ---------------------------------------------------------------------------
// Built-in families

inline FiniteGroup cyclic_group(std::size_t n, std::size_t cap = kDefaultGroupCap) {
  if (n == 0) throw Error(ErrorKind::BadInput, "cyclic group order must be positive");
  if (n > std::min(cap, kHardGroupCap)) throw Error(ErrorKind::GroupTooLarge, "order " + std::to_string(n) + " exceeds cap");
  std::vector<std::uint16_t> mul(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) mul[a * n + b] = static_cast<std::uint16_t>((a + b) % n);
  return FiniteGroup::from_trusted(n, std::move(mul), 0, {}, "cyclic:" + std::to_string(n));
}

/// Symmetries of the n-gon, order 2n. Index f*n + i is s^f r^i.
inline FiniteGroup dihedral_group(std::size_t n, std::size_t cap = kDefaultGroupCap) {
  if (n == 0) throw Error(ErrorKind::BadInput, "dihedral parameter must be positive");
  const std::size_t order = 2 * n;
  if (order > std::min(cap, kHardGroupCap)) throw Error(ErrorKind::GroupTooLarge, "order " + std::to_string(order) + " exceeds cap");
  std::vector<std::uint16_t> mul(order * order);
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      std::size_t f = a / n, i = a % n, g = b / n, j = b % n;
      // r^i s = s r^-i
      std::size_t rot = (g == 0 ? i : (n - i) % n) + j;
      mul[a * order + b] = static_cast<std::uint16_t>(((f + g) % 2) * n + rot % n);
    }
  }
  std::vector<std::string> names;
  for (std::size_t f = 0; f < 2; ++f) {
    for (std::size_t i = 0; i < n; ++i) {
      std::string r = i == 0 ? "" : (i == 1 ? "r" : "r^" + std::to_string(i));
      std::string s = f == 0 ? "" : "s";
      names.push_back(s + r == "" ? "e" : s + r);
    }
  }
  return FiniteGroup::from_trusted(order, std::move(mul), 0, std::move(names), "dihedral:" + std::to_string(n));
}

inline FiniteGroup symmetric_group(std::size_t n, std::size_t cap = kDefaultGroupCap) {
  if (n == 0) throw Error(ErrorKind::BadInput, "symmetric group degree must be positive");
  std::vector<Permutation> gens;
  if (n >= 2) {
    Permutation swap(n), cycle(n);
    for (std::size_t i = 0; i < n; ++i) {
      swap[i] = static_cast<std::uint32_t>(i);
      cycle[i] = static_cast<std::uint32_t>((i + 1) % n);
    }
    std::swap(swap[0], swap[1]);
    gens.push_back(swap);
    if (n >= 3) gens.push_back(cycle);
  }
  return from_permutation_generators(n, gens, "symmetric:" + std::to_string(n), cap);
}

/// Units of the quaternions: 1, -1, i, -i, j, -j, k, -k.
inline FiniteGroup quaternion_group() {
  // basis product table: {sign, basis} for basis indices 0=1, 1=i, 2=j, 3=k
  static constexpr std::array<std::array<std::pair<int, int>, 4>, 4> kBasis{{
      {{{1, 0}, {1, 1}, {1, 2}, {1, 3}}},
      {{{1, 1}, {-1, 0}, {1, 3}, {-1, 2}}},
      {{{1, 2}, {-1, 3}, {-1, 0}, {1, 1}}},
      {{{1, 3}, {1, 2}, {-1, 1}, {-1, 0}}},
  }};
  std::vector<std::uint16_t> mul(64);
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      auto [sign, basis] = kBasis[a / 2][b / 2];
      bool negative = (sign < 0) != ((a % 2) != (b % 2));
      mul[a * 8 + b] = static_cast<std::uint16_t>(basis * 2 + (negative ? 1 : 0));
    }
  }
  return FiniteGroup::from_trusted(8, std::move(mul), 0, {"1", "-1", "i", "-i", "j", "-j", "k", "-k"}, "quaternion:8");
}

}  // namespace dwp
