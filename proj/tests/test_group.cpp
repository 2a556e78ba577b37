#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <set>

#include "dwp/group_spec.hpp"
#include "support/test_support.hpp"

using namespace dwp;

namespace {

// Full axiom suite; associativity is exhaustive up to order 64 and sampled above.
void expect_group_invariants(const FiniteGroup& g) {
  const auto n = g.order();
  std::mt19937_64 rng(n);
  std::uniform_int_distribution<element_t> pick(0, static_cast<element_t>(n - 1));
  if (n <= 64) {
    for (element_t a = 0; a < n; ++a)
      for (element_t b = 0; b < n; ++b)
        for (element_t c = 0; c < n; ++c) ASSERT_EQ(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
  } else {
    for (int i = 0; i < 20000; ++i) {
      auto a = pick(rng), b = pick(rng), c = pick(rng);
      ASSERT_EQ(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
    }
  }
  for (element_t a = 0; a < n; ++a) {
    ASSERT_EQ(g.mul(g.identity(), a), a);
    ASSERT_EQ(g.mul(a, g.identity()), a);
    ASSERT_EQ(g.mul(a, g.inv(a)), g.identity());
    ASSERT_EQ(g.mul(g.inv(a), a), g.identity());
    std::vector<char> row(n), col(n);
    for (element_t b = 0; b < n; ++b) {
      row[g.mul(a, b)] = 1;
      col[g.mul(b, a)] = 1;
    }
    ASSERT_EQ(std::count(row.begin(), row.end(), 1), static_cast<long>(n));
    ASSERT_EQ(std::count(col.begin(), col.end(), 1), static_cast<long>(n));
  }

  std::size_t class_total = 0;
  for (const auto& c : g.conjugacy_classes()) {
    class_total += c.size();
    EXPECT_EQ(c.representative, c.members.front());
    for (element_t k = 0; k < n; ++k) EXPECT_TRUE(c.contains(g.conj(k, c.representative)));
  }
  EXPECT_EQ(class_total, n);

  for (element_t x = 0; x < n; ++x) {
    auto cen = g.centralizer(x);
    const auto class_size = g.class_members(g.class_index(x)).size();
    EXPECT_EQ(cen.order() * class_size, n) << "orbit-stabilizer at " << g.name(x);
    EXPECT_EQ(n % cen.order(), 0U);
    EXPECT_TRUE(cen.contains(x));
    EXPECT_TRUE(cen.contains(g.identity()));
    for (element_t a : cen.members()) {
      EXPECT_TRUE(cen.contains(g.inv(a)));
      for (element_t b : cen.members()) ASSERT_TRUE(cen.contains(g.mul(a, b)));
    }
    auto sc = subgroup_classes(cen);
    std::size_t total = 0;
    for (const auto& c : sc.classes) total += c.size();
    EXPECT_EQ(total, cen.order());
  }

  std::uniform_int_distribution<int> expo(-50, 50);
  for (int i = 0; i < 100; ++i) {
    auto x = pick(rng);
    int a = expo(rng), b = expo(rng);
    ASSERT_EQ(g.power(x, a + b), g.mul(g.power(x, a), g.power(x, b)));
  }
}

}  // namespace

TEST(FromCayleyTable, TrivialAndZ2) {
  auto trivial = FiniteGroup::from_cayley_table({{0}});
  EXPECT_EQ(trivial.order(), 1U);
  EXPECT_EQ(trivial.identity(), 0U);
  auto z2 = FiniteGroup::from_cayley_table({{0, 1}, {1, 0}});
  EXPECT_EQ(z2.order(), 2U);
  EXPECT_EQ(z2.identity(), 0U);
  EXPECT_EQ(z2.inv(1), 1U);
}

TEST(FromCayleyTable, IdentityNeedNotBeFirst) {
  // Z_2 with the identity listed second.
  auto g = FiniteGroup::from_cayley_table({{1, 0}, {0, 1}}, {"a", "e"});
  EXPECT_EQ(g.identity(), 1U);
  EXPECT_EQ(g.name(g.identity()), "e");
  expect_group_invariants(g);
}

TEST(FromCayleyTable, QuasigroupReportsAssociativityWitness) {
  // x*y = -x-y mod 3 is a Latin square but not associative.
  FiniteGroup::Table table(3, std::vector<element_t>(3));
  for (element_t x = 0; x < 3; ++x)
    for (element_t y = 0; y < 3; ++y) table[x][y] = (6 - x - y) % 3;
  try {
    FiniteGroup::from_cayley_table(table);
    FAIL() << "expected NotAGroup";
  } catch (const GroupAxiomError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAGroup);
    auto [a, b, c] = e.witness();
    EXPECT_NE(table[table[a][b]][c], table[a][table[b][c]]);
  }
}

TEST(FromCayleyTable, NonAssociativeLoopOfOrderFive) {
  FiniteGroup::Table loop{{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  try {
    FiniteGroup::from_cayley_table(loop);
    FAIL() << "expected NotAGroup";
  } catch (const GroupAxiomError& e) {
    auto [a, b, c] = e.witness();
    EXPECT_NE(loop[loop[a][b]][c], loop[a][loop[b][c]]);
  }
}

TEST(FromCayleyTable, RejectsMalformedTables) {
  auto kind_of = [](const FiniteGroup::Table& t) {
    try {
      FiniteGroup::from_cayley_table(t);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::BadInput;
  };
  EXPECT_EQ(kind_of({}), ErrorKind::BadShape);
  EXPECT_EQ(kind_of({{0, 1}, {1}}), ErrorKind::BadShape);
  EXPECT_EQ(kind_of({{0, 2}, {1, 0}}), ErrorKind::BadShape);
  EXPECT_EQ(kind_of({{0, 0}, {1, 1}}), ErrorKind::NotAGroup);
  EXPECT_EQ(kind_of({{1, 1}, {1, 1}}), ErrorKind::NotAGroup);
  EXPECT_THROW(FiniteGroup::from_cayley_table({{0, 1}, {1, 0}}, {"a"}), Error);
  EXPECT_THROW(FiniteGroup::from_cayley_table({{0, 1}, {1, 0}}, {"a", "a"}), Error);
}

TEST(FromCayleyTable, RoundTripsBuiltinTables) {
  for (const auto& g : testsupport::builtin_groups(12)) {
    FiniteGroup::Table t(g.order(), std::vector<element_t>(g.order()));
    for (element_t a = 0; a < g.order(); ++a)
      for (element_t b = 0; b < g.order(); ++b) t[a][b] = g.mul(a, b);
    auto h = FiniteGroup::from_cayley_table(t, g.names());
    EXPECT_EQ(h.class_count(), g.class_count()) << g.label();
  }
}

TEST(PermutationGenerators, SymmetricThree) {
  auto g = from_permutation_generators(3, "(1 2);(1 2 3)");
  EXPECT_EQ(g.order(), 6U);
  EXPECT_EQ(g.identity(), 0U);
  EXPECT_EQ(g.name(0), "()");
  expect_group_invariants(g);
}

TEST(PermutationGenerators, CyclicAndTrivial) {
  auto z4 = from_permutation_generators(4, "(1 2 3 4)");
  EXPECT_EQ(z4.order(), 4U);
  EXPECT_TRUE(z4.is_abelian());
  auto trivial = from_permutation_generators(2, std::vector<Permutation>{});
  EXPECT_EQ(trivial.order(), 1U);
}

TEST(PermutationGenerators, Errors) {
  EXPECT_THROW(from_permutation_generators(3, "(1 5)"), Error);
  EXPECT_THROW(from_permutation_generators(3, "(1 1)"), Error);
  EXPECT_THROW(from_permutation_generators(3, "(1 2"), Error);
  EXPECT_THROW(from_permutation_generators(3, "1 2"), Error);
  try {
    from_permutation_generators(3, "(1 2);(1 2 3)", "", 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::GroupTooLarge);
  }
}

TEST(PermutationGenerators, CycleNotationRoundTrip) {
  auto p = parse_cycles(5, "(1 3 5)(2 4)");
  EXPECT_EQ(cycle_notation(p), "(1 3 5)(2 4)");
  EXPECT_EQ(cycle_notation(parse_cycles(4, "()")), "()");
  // Right to left: 1 -> 2, 2 -> 3, 3 -> 1.
  auto q = parse_cycles(3, "(1 2)(2 3)");
  EXPECT_EQ(q[1], 2U);
  EXPECT_EQ(q[2], 0U);
  EXPECT_EQ(q[0], 1U);
}

TEST(ConjugacyClasses, SmallGroups) {
  auto trivial = cyclic_group(1);
  ASSERT_EQ(trivial.conjugacy_classes().size(), 1U);

  auto s3 = symmetric_group(3);
  std::vector<std::size_t> sizes;
  for (const auto& c : s3.conjugacy_classes()) sizes.push_back(c.size());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 3, 2}));

  auto z4 = cyclic_group(4);
  for (const auto& c : z4.conjugacy_classes()) EXPECT_EQ(c.size(), 1U);
  EXPECT_EQ(z4.class_count(), 4U);
}

TEST(ConjugacyClasses, MatchDirectPermutationConjugation) {
  // Independent route: conjugate the actual permutations.
  auto s4 = symmetric_group(4);
  std::vector<Permutation> perms;
  for (element_t e = 0; e < s4.order(); ++e) perms.push_back(parse_cycles(4, s4.name(e)));
  auto compose = [](const Permutation& a, const Permutation& b) {
    Permutation r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
    return r;
  };
  auto invert = [](const Permutation& a) {
    Permutation r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<std::uint32_t>(i);
    return r;
  };
  for (element_t x = 0; x < s4.order(); ++x) {
    std::set<std::string> direct;
    for (const auto& k : perms) direct.insert(cycle_notation(compose(compose(k, perms[x]), invert(k))));
    std::set<std::string> table;
    for (element_t m : s4.class_members(s4.class_index(x))) table.insert(s4.name(m));
    EXPECT_EQ(direct, table);
  }
  EXPECT_EQ(s4.class_count(), 5U);
}

TEST(Centralizer, Examples) {
  auto s3 = symmetric_group(3);
  EXPECT_TRUE(centralizer(s3, s3.identity()).is_whole());
  auto transposition = *s3.find("(1 2)");
  auto cen = centralizer(s3, transposition);
  EXPECT_EQ(cen.order(), 2U);
  EXPECT_TRUE(cen.contains(transposition));
  auto z5 = cyclic_group(5);
  for (element_t x = 0; x < 5; ++x) EXPECT_TRUE(centralizer(z5, x).is_whole());
  EXPECT_THROW(centralizer(s3, 17), Error);
}

TEST(ClassInSubgroup, Examples) {
  auto s3 = symmetric_group(3);
  Subgroup trivial(s3, {s3.identity()});
  auto c0 = class_in_subgroup(trivial, s3.identity());
  EXPECT_EQ(c0.members, std::vector<element_t>{s3.identity()});

  auto t = *s3.find("(1 2)");
  auto cen = s3.centralizer(t);
  auto c1 = class_in_subgroup(cen, t);
  EXPECT_EQ(c1.members, std::vector<element_t>{t});
  EXPECT_EQ(c1.ambient->order(), 2U);

  auto whole = Subgroup::whole(s3);
  auto c2 = class_in_subgroup(whole, *s3.find("(1 2 3)"));
  EXPECT_EQ(c2.size(), 2U);

  try {
    class_in_subgroup(cen, *s3.find("(1 2 3)"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotInSubgroup);
  }
}

TEST(ClassInSubgroup, FinerThanAmbientClasses) {
  // In Q8, Cen(i) = <i> is abelian, so -i and i are separate classes there
  // although they are conjugate in Q8.
  auto q = quaternion_group();
  auto i = *q.find("i"), mi = *q.find("-i");
  EXPECT_TRUE(q.conjugate(i, mi));
  auto sc = subgroup_classes(q.centralizer(i));
  EXPECT_EQ(sc.classes.size(), 4U);
  EXPECT_NE(sc.representative_of(i), sc.representative_of(mi));
}

TEST(Power, Examples) {
  auto z2 = cyclic_group(2);
  EXPECT_EQ(power(z2, 1, 0), z2.identity());
  EXPECT_EQ(power(z2, 1, 3), 1U);
  auto s3 = symmetric_group(3);
  auto c = *s3.find("(1 2 3)");
  auto by_hand = s3.identity();
  for (int i = 0; i < 9; ++i) by_hand = s3.mul(by_hand, c);
  EXPECT_EQ(power(s3, c, 9), by_hand);
  EXPECT_EQ(power(s3, c, 9), s3.identity());
  EXPECT_EQ(power(s3, c, 4), c);
  EXPECT_EQ(power(s3, c, -1), s3.inv(c));
}

TEST(BuiltinGroups, InvariantSuite) {
  for (const auto& g : testsupport::builtin_groups(24)) {
    SCOPED_TRACE(g.label());
    expect_group_invariants(g);
  }
  expect_group_invariants(testsupport::z7_semidirect_z3());
  expect_group_invariants(testsupport::alternating4());
  expect_group_invariants(symmetric_group(5));
}

TEST(BuiltinGroups, OrdersAndClassCounts) {
  EXPECT_EQ(dihedral_group(4).order(), 8U);
  EXPECT_EQ(dihedral_group(4).class_count(), 5U);
  EXPECT_EQ(dihedral_group(3).class_count(), 3U);
  EXPECT_EQ(quaternion_group().class_count(), 5U);
  auto z7z3 = testsupport::z7_semidirect_z3();
  EXPECT_EQ(z7z3.order(), 21U);
  EXPECT_EQ(z7z3.class_count(), 5U);
  EXPECT_EQ(symmetric_group(5).order(), 120U);
  EXPECT_EQ(testsupport::alternating4().class_count(), 4U);
}

TEST(GroupSpec, Families) {
  EXPECT_EQ(parse_group_spec("cyclic:6").order(), 6U);
  EXPECT_EQ(parse_group_spec("dihedral:5").order(), 10U);
  EXPECT_EQ(parse_group_spec("symmetric:4").order(), 24U);
  EXPECT_EQ(parse_group_spec("quaternion:8").order(), 8U);
  auto perm = parse_group_spec("perm:3:(1 2);(1 2 3)");
  EXPECT_EQ(perm.order(), 6U);
  EXPECT_EQ(perm.label(), "perm:3:(1 2);(1 2 3)");
  EXPECT_EQ(parse_group_spec("cyclic:6").name(5), "5");
}

TEST(GroupSpec, FileDocument) {
  auto path = std::filesystem::temp_directory_path() / "dwp_test_z3.json";
  {
    std::ofstream out(path);
    out << R"({"order": 3, "mul": [[0,1,2],[1,2,0],[2,0,1]], "names": ["e","a","b"]})";
  }
  auto g = parse_group_spec("file:" + path.string());
  EXPECT_EQ(g.order(), 3U);
  EXPECT_EQ(g.name(1), "a");
  {
    std::ofstream out(path);
    out << R"({"order": 2, "mul": [[0,0],[1,1]]})";
  }
  EXPECT_THROW(parse_group_spec("file:" + path.string()), Error);
  std::filesystem::remove(path);
  EXPECT_THROW(parse_group_spec("file:/nonexistent/group.json"), Error);
}

TEST(GroupSpec, Errors) {
  for (const char* bad : {"cyclic", "cyclic:", "cyclic:x", "cyclic:0", "quaternion:16", "alternating:4", "perm:3",
                          "symmetric:0"}) {
    EXPECT_THROW(parse_group_spec(bad), Error) << bad;
  }
  try {
    parse_group_spec("symmetric:8");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::GroupTooLarge);
  }
}
