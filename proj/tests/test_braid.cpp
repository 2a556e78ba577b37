#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "dwp/braid.hpp"
#include "support/test_support.hpp"

using namespace dwp;

namespace {

std::vector<std::size_t> compose_perm(const std::vector<std::size_t>& outer, const std::vector<std::size_t>& inner) {
  std::vector<std::size_t> r(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) r[i] = outer[inner[i]];
  return r;
}

std::vector<std::size_t> perm_power(const std::vector<std::size_t>& p, std::size_t n) {
  std::vector<std::size_t> r(p.size());
  std::iota(r.begin(), r.end(), std::size_t{0});
  for (std::size_t k = 0; k < n; ++k) r = compose_perm(p, r);
  return r;
}

std::size_t count_cycles(const std::vector<std::size_t>& p) {
  std::vector<char> seen(p.size());
  std::size_t cycles = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = p[j]) seen[j] = 1;
  }
  return cycles;
}

}  // namespace

TEST(BraidText, ParseAndFormat) {
  auto b = parse_braid("2: 1 1 1");
  EXPECT_EQ(b.strands, 2U);
  EXPECT_EQ(b.letters, (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(b.to_string(), "2: 1 1 1");
  auto empty = parse_braid("3:");
  EXPECT_TRUE(empty.letters.empty());
  EXPECT_EQ(empty.to_string(), "3:");
  EXPECT_EQ(parse_braid("  4 :  -3   2\t1 ").to_string(), "4: -3 2 1");
}

TEST(BraidText, Rejects) {
  for (const char* bad : {"", "2", "0:", "x: 1", "2: 2", "2: 0", "2: -2", "3: 1 a", "2: 1.5", "-1:"}) {
    EXPECT_THROW(parse_braid(bad), Error) << bad;
  }
  EXPECT_THROW(BraidWord::make(0, {}), Error);
  EXPECT_THROW(BraidWord::make(1, {1}), Error);
}

TEST(Permutation, Examples) {
  EXPECT_EQ(permutation(parse_braid("3:")), (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(permutation(parse_braid("2: 1")), (std::vector<std::size_t>{1, 0}));
  // Strand 1 goes to 2 and then 3, strand 3 drops to 2, strand 2 drops to 1.
  auto p = permutation(parse_braid("3: 1 2"));
  auto expected = compose_perm(std::vector<std::size_t>{0, 2, 1}, std::vector<std::size_t>{1, 0, 2});
  EXPECT_EQ(p, expected);
  EXPECT_EQ(count_cycles(p), 1U);
  EXPECT_EQ(permutation(parse_braid("3: -1 2")), p);
}

TEST(Compose, Examples) {
  auto b = parse_braid("3: 1 -2 1");
  EXPECT_EQ(compose(parse_braid("3:"), b), b);
  auto id_word = compose(parse_braid("2: -1"), parse_braid("2: 1"));
  EXPECT_EQ(id_word.letters, (std::vector<int>{1, -1}));
  EXPECT_EQ(permutation(id_word), (std::vector<std::size_t>{0, 1}));
  EXPECT_THROW(compose(parse_braid("2: 1"), parse_braid("3: 1")), Error);
  // Inner braid is read first.
  EXPECT_EQ(compose(parse_braid("3: 2"), parse_braid("3: 1")).letters, (std::vector<int>{1, 2}));
}

TEST(Compose, PermutationIsHomomorphism) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    auto inner = testsupport::random_braid(rng, 1, 6, 10);
    auto outer = testsupport::random_braid(rng, inner.strands, inner.strands, 10);
    EXPECT_EQ(permutation(compose(outer, inner)), compose_perm(permutation(outer), permutation(inner)));
  }
}

TEST(BraidPower, Examples) {
  auto b = parse_braid("3: 1 -2");
  EXPECT_EQ(braid_power(b, 1), b);
  EXPECT_EQ(braid_power(parse_braid("2: 1"), 3).letters, (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(braid_power(b, 4).length(), 8U);
  EXPECT_THROW(braid_power(b, 0), Error);
}

TEST(BraidPower, PermutationOfPower) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> exp(1, 12);
  for (int trial = 0; trial < 100; ++trial) {
    auto b = testsupport::random_braid(rng, 1, 6, 8);
    auto n = exp(rng);
    EXPECT_EQ(permutation(braid_power(b, n)), perm_power(permutation(b), n));
  }
}

TEST(Components, Examples) {
  auto unlink = components(parse_braid("2:"));
  EXPECT_EQ(unlink.count, 2U);
  EXPECT_EQ(unlink.self_writhe, (std::vector<std::int64_t>{0, 0}));
  EXPECT_EQ(unlink.linking[0][1], 0);

  auto hopf = components(parse_braid("2: 1 1"));
  EXPECT_EQ(hopf.count, 2U);
  EXPECT_EQ(hopf.self_writhe, (std::vector<std::int64_t>{0, 0}));
  EXPECT_EQ(hopf.linking[0][1], 1);
  EXPECT_EQ(hopf.linking[1][0], 1);

  auto trefoil = components(parse_braid("2: 1 1 1"));
  EXPECT_EQ(trefoil.count, 1U);
  EXPECT_EQ(trefoil.self_writhe, (std::vector<std::int64_t>{3}));
  EXPECT_EQ(trefoil.cycles[0], (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(trefoil.basepoints, (std::vector<std::size_t>{0}));

  auto negative_hopf = components(parse_braid("2: -1 -1"));
  EXPECT_EQ(negative_hopf.linking[0][1], -1);
}

TEST(Components, CanonicalOrdering) {
  // sigma = (1 3)(2)(4 5): components by minimal position.
  auto c = components(parse_braid("5: 1 2 -1 4"));
  auto sigma = permutation(parse_braid("5: 1 2 -1 4"));
  ASSERT_EQ(c.count, count_cycles(sigma));
  for (std::size_t t = 0; t < c.count; ++t) {
    EXPECT_EQ(c.basepoints[t], c.cycles[t].front());
    EXPECT_EQ(c.basepoints[t], *std::min_element(c.cycles[t].begin(), c.cycles[t].end()));
    if (t > 0) {
      EXPECT_LT(c.basepoints[t - 1], c.basepoints[t]);
    }
    for (std::size_t i = 0; i + 1 < c.cycles[t].size(); ++i) EXPECT_EQ(sigma[c.cycles[t][i]], c.cycles[t][i + 1]);
  }
}

TEST(Components, RandomInvariants) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::size_t> exp(1, 9);
  for (int trial = 0; trial < 300; ++trial) {
    auto b = testsupport::random_braid(rng, 1, 6, 12);
    auto c = components(b);
    std::size_t total = 0;
    std::vector<char> seen(b.strands);
    for (const auto& cycle : c.cycles) {
      total += cycle.size();
      for (auto i : cycle) {
        EXPECT_FALSE(seen[i]);
        seen[i] = 1;
      }
    }
    EXPECT_EQ(total, b.strands);
    EXPECT_EQ(c.count, count_cycles(permutation(b)));

    std::int64_t rhs = 0;
    for (std::size_t t = 0; t < c.count; ++t) {
      rhs += c.self_writhe[t];
      EXPECT_EQ(c.linking[t][t], 0);
      for (std::size_t s = t + 1; s < c.count; ++s) {
        EXPECT_EQ(c.linking[t][s], c.linking[s][t]);
        rhs += 2 * c.linking[t][s];
      }
    }
    EXPECT_EQ(b.writhe(), rhs);

    // A cycle of length e splits into gcd(e, n) cycles of the n-th power.
    auto n = exp(rng);
    std::size_t expected = 0;
    for (const auto& cycle : c.cycles) expected += std::gcd(cycle.size(), n);
    EXPECT_EQ(components(braid_power(b, n)).count, expected);
  }
}

TEST(Components, PowerScalesWritheAndLinking) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    auto b = testsupport::random_braid(rng, 2, 5, 10);
    auto c = components(b);
    bool coprime = true;
    for (const auto& cycle : c.cycles) coprime = coprime && std::gcd(cycle.size(), std::size_t{3}) == 1;
    if (!coprime) continue;
    auto c3 = components(braid_power(b, 3));
    ASSERT_EQ(c3.count, c.count);
    for (std::size_t t = 0; t < c.count; ++t) {
      EXPECT_EQ(c3.self_writhe[t], 3 * c.self_writhe[t]);
      for (std::size_t s = 0; s < c.count; ++s) EXPECT_EQ(c3.linking[t][s], 3 * c.linking[t][s]);
    }
  }
}

TEST(Inverse, CancelsPermutation) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    auto b = testsupport::random_braid(rng, 1, 6, 10);
    auto id = permutation(compose(inverse(b), b));
    for (std::size_t i = 0; i < id.size(); ++i) EXPECT_EQ(id[i], i);
    EXPECT_EQ(inverse(inverse(b)), b);
  }
}
