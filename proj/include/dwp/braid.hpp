#pragma once

// Braid words and the combinatorics of their closures.
//
// Conventions: letters are read bottom to top, strands are oriented upward.
// Letter +i is the positive crossing in which the strand at position i
// passes over the strand at position i+1; -i is its inverse, where the
// strand at position i+1 passes over. Positions are 1-based in letters and
// text, 0-based everywhere else.

#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "dwp/error.hpp"

namespace dwp {

struct BraidWord {
  std::size_t strands = 1;
  std::vector<int> letters;

  /// Validates 1 <= |l| <= strands-1 for every letter.
  static BraidWord make(std::size_t strands, std::vector<int> letters) {
    if (strands == 0) throw Error(ErrorKind::BadBraid, "a braid needs at least one strand");
    for (int l : letters) {
      auto a = static_cast<std::size_t>(l < 0 ? -static_cast<long long>(l) : l);
      if (l == 0 || a > strands - 1) {
        throw Error(ErrorKind::BadBraid, "letter " + std::to_string(l) + " invalid for " + std::to_string(strands) + " strands");
      }
    }
    return BraidWord{strands, std::move(letters)};
  }

  std::size_t length() const noexcept { return letters.size(); }
  std::int64_t writhe() const noexcept {
    std::int64_t w = 0;
    for (int l : letters) w += l > 0 ? 1 : -1;
    return w;
  }

  /// "<m>: l1 l2 ..." and "<m>:" for the empty word.
  std::string to_string() const {
    std::string out = std::to_string(strands) + ":";
    for (int l : letters) out += " " + std::to_string(l);
    return out;
  }

  bool operator==(const BraidWord&) const = default;
};

inline BraidWord parse_braid(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) throw Error(ErrorKind::BadBraid, "expected '<m>: letters', got '" + std::string(text) + "'");
  std::istringstream head{std::string(text.substr(0, colon))};
  long long strands = 0;
  std::string trailing;
  if (!(head >> strands) || (head >> trailing) || strands < 1) {
    throw Error(ErrorKind::BadBraid, "invalid strand count in '" + std::string(text) + "'");
  }
  std::istringstream body{std::string(text.substr(colon + 1))};
  std::vector<int> letters;
  std::string token;
  while (body >> token) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size() || used == 0) throw Error(ErrorKind::BadBraid, "invalid letter '" + token + "'");
    letters.push_back(value);
  }
  return BraidWord::make(static_cast<std::size_t>(strands), std::move(letters));
}

/// Zero-based letter position: the crossing acts on positions (i, i+1).
inline std::size_t letter_position(int letter) noexcept {
  return static_cast<std::size_t>(letter > 0 ? letter : -letter) - 1;
}

/// sigma[i] is the top position of the strand that enters at bottom position i.
inline std::vector<std::size_t> permutation(const BraidWord& beta) {
  // occupant[pos] = bottom position of the strand currently at pos
  std::vector<std::size_t> occupant(beta.strands);
  std::iota(occupant.begin(), occupant.end(), std::size_t{0});
  for (int l : beta.letters) {
    auto i = letter_position(l);
    std::swap(occupant[i], occupant[i + 1]);
  }
  std::vector<std::size_t> sigma(beta.strands);
  for (std::size_t pos = 0; pos < beta.strands; ++pos) sigma[occupant[pos]] = pos;
  return sigma;
}

/// beta_outer * beta_inner: inner is read first (it sits below).
inline BraidWord compose(const BraidWord& outer, const BraidWord& inner) {
  if (outer.strands != inner.strands) {
    throw Error(ErrorKind::StrandMismatch,
                std::to_string(outer.strands) + " vs " + std::to_string(inner.strands) + " strands");
  }
  BraidWord out{inner.strands, inner.letters};
  out.letters.insert(out.letters.end(), outer.letters.begin(), outer.letters.end());
  return out;
}

inline constexpr std::size_t kMaxBraidLetters = std::size_t{1} << 24;

inline BraidWord braid_power(const BraidWord& beta, std::uint64_t n) {
  if (n == 0) throw Error(ErrorKind::BadInput, "braid power must be positive");
  if (!beta.letters.empty() && n > kMaxBraidLetters / beta.letters.size()) {
    throw Error(ErrorKind::SearchTooLarge, "braid power has too many letters");
  }
  BraidWord out{beta.strands, {}};
  out.letters.reserve(beta.letters.size() * n);
  for (std::uint64_t k = 0; k < n; ++k) out.letters.insert(out.letters.end(), beta.letters.begin(), beta.letters.end());
  return out;
}

inline BraidWord inverse(const BraidWord& beta) {
  BraidWord out{beta.strands, {}};
  for (auto it = beta.letters.rbegin(); it != beta.letters.rend(); ++it) out.letters.push_back(-*it);
  return out;
}

/// Markov stabilization: include into B_{m+1} and append sigma_m^sign.
inline BraidWord stabilize(const BraidWord& beta, int sign = 1) {
  BraidWord out{beta.strands + 1, beta.letters};
  out.letters.push_back(sign >= 0 ? static_cast<int>(beta.strands) : -static_cast<int>(beta.strands));
  return out;
}

/// Cycle structure of the closure. Component t is the cycle
/// (b, sigma(b), sigma^2(b), ...) with b = basepoints[t] minimal in the
/// cycle; components are sorted by basepoint.
struct ComponentData {
  std::size_t count = 0;
  std::vector<std::vector<std::size_t>> cycles;
  std::vector<std::size_t> basepoints;
  std::vector<std::int64_t> self_writhe;
  std::vector<std::vector<std::int64_t>> linking;
  std::vector<std::size_t> component_of;  // per bottom position
};

inline ComponentData components(const BraidWord& beta) {
  const auto sigma = permutation(beta);
  ComponentData data;
  constexpr auto kNone = static_cast<std::size_t>(-1);
  data.component_of.assign(beta.strands, kNone);
  for (std::size_t start = 0; start < beta.strands; ++start) {
    if (data.component_of[start] != kNone) continue;
    std::vector<std::size_t> cycle;
    for (std::size_t i = start; data.component_of[i] == kNone; i = sigma[i]) {
      data.component_of[i] = data.count;
      cycle.push_back(i);
    }
    data.basepoints.push_back(start);
    data.cycles.push_back(std::move(cycle));
    ++data.count;
  }

  data.self_writhe.assign(data.count, 0);
  data.linking.assign(data.count, std::vector<std::int64_t>(data.count, 0));
  std::vector<std::size_t> occupant(beta.strands);
  std::iota(occupant.begin(), occupant.end(), std::size_t{0});
  for (int l : beta.letters) {
    auto i = letter_position(l);
    std::int64_t sign = l > 0 ? 1 : -1;
    auto a = data.component_of[occupant[i]];
    auto b = data.component_of[occupant[i + 1]];
    if (a == b) {
      data.self_writhe[a] += sign;
    } else {
      data.linking[a][b] += sign;
      data.linking[b][a] += sign;
    }
    std::swap(occupant[i], occupant[i + 1]);
  }
  for (auto& row : data.linking) {
    for (auto& v : row) {
      // Two closed curves cross an even number of times.
      if (v % 2 != 0) throw Error(ErrorKind::BadBraid, "odd inter-component crossing sum");
      v /= 2;
    }
  }
  return data;
}

}  // namespace dwp
