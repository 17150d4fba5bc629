#include <gtest/gtest.h>

#include <stdexcept>

#include "akschur/io.hpp"
#include "printers.hpp"
#include "akschur/partition.hpp"

using namespace akschur::combinatorics;
using akschur::io::parseMultipartition;
using akschur::io::toLiteral;

namespace {

Multipartition mpOf(const char* text) { return parseMultipartition(text); }

// Number of partitions of n by the Euler recurrence.
long partitionCount(int n) {
  std::vector<long> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int m = part; m <= n; ++m) p[static_cast<std::size_t>(m)] += p[static_cast<std::size_t>(m - part)];
  return p[static_cast<std::size_t>(n)];
}

long multipartitionCount(int l, int n) {
  if (l == 1) return partitionCount(n);
  long total = 0;
  for (int first = 0; first <= n; ++first) total += partitionCount(first) * multipartitionCount(l - 1, n - first);
  return total;
}

}  // namespace

TEST(Partition, RejectsIncreasingParts) {
  EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
  EXPECT_THROW(Partition({2, -1}), std::invalid_argument);
  EXPECT_EQ(Partition({2, 1, 0, 0}).parts(), (std::vector<int>{2, 1}));
}

TEST(Partition, Conjugate) {
  EXPECT_EQ(conjugate(Partition{4, 1}), (Partition{2, 1, 1, 1}));
  EXPECT_EQ(conjugate(Partition{}), Partition{});
  EXPECT_EQ(conjugate(Partition{2, 2}), (Partition{2, 2}));
}

TEST(Partition, NFunction) {
  EXPECT_EQ(nFunction(Partition{}), 0);
  EXPECT_EQ(nFunction(Partition{1, 1, 1}), 3);
  EXPECT_EQ(nFunction(Partition{4, 2, 1, 1}), 7);
  for (int n = 0; n <= 8; ++n)
    for (const auto& p : enumeratePartitions(n)) EXPECT_EQ(nFunction(p), nFunctionViaConjugate(p));
}

TEST(Partition, GeneralisedHook) {
  EXPECT_EQ(genHookLength(Partition{2}, Partition{2}, 1, 1), 2);
  EXPECT_EQ(genHookLength(Partition{1}, Partition{}, 1, 1), 0);
  EXPECT_THROW(genHookLength(Partition{1}, Partition{}, 1, 2), std::domain_error);
  // Same partition: arm + leg + 1 counted by hand.
  for (int n = 0; n <= 6; ++n) {
    for (const auto& p : enumeratePartitions(n)) {
      const Partition c = conjugate(p);
      for (const auto& x : nodes(p)) EXPECT_EQ(genHookLength(p, p, x.row, x.column), (p[x.row] - x.column) + (c[x.column] - x.row) + 1);
    }
  }
}

TEST(Partition, Rebar) {
  EXPECT_EQ(rebar(mpOf("[[4,1],[],[2,1]]")), (Partition{4, 2, 1, 1}));
  EXPECT_EQ(rebar(mpOf("[[],[]]")), Partition{});
  EXPECT_EQ(rebar(mpOf("[[1],[1],[1]]")), (Partition{1, 1, 1}));
}

TEST(Partition, LSymbol) {
  EXPECT_EQ(lSymbol(mpOf("[[1],[]]"), 1), (std::vector<std::vector<int>>{{1}, {0}}));
  EXPECT_EQ(lSymbol(mpOf("[[],[]]"), 2), (std::vector<std::vector<int>>{{1, 0}, {1, 0}}));
  EXPECT_EQ(lSymbol(mpOf("[[2,1],[]]"), 3)[0], (std::vector<int>{4, 2, 0}));
  EXPECT_THROW(lSymbol(mpOf("[[1,1],[]]"), 1), std::domain_error);
}

TEST(Partition, CanonicalOrder) {
  const auto all = enumerateMultipartitions(1, 3);
  ASSERT_EQ(all.size(), 3u);
  EXPECT_EQ(toLiteral(all[0]), "[[3]]");
  EXPECT_EQ(toLiteral(all[1]), "[[2,1]]");
  EXPECT_EQ(toLiteral(all[2]), "[[1,1,1]]");
  const auto two = enumerateMultipartitions(2, 1);
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(toLiteral(two[0]), "[[1],[]]");
  EXPECT_EQ(toLiteral(two[1]), "[[],[1]]");
  for (int l = 1; l <= 3; ++l)
    for (int n = 0; n <= 5; ++n) {
      const auto v = enumerateMultipartitions(l, n);
      EXPECT_EQ(static_cast<long>(v.size()), multipartitionCount(l, n));
      for (std::size_t i = 1; i < v.size(); ++i) EXPECT_TRUE(precedes(v[i - 1], v[i]));
    }
  EXPECT_EQ(enumerateMultipartitions(3, 4).size(), 51u);
}

TEST(Partition, SigmaAction) {
  EXPECT_EQ(sigmaAction(mpOf("[[1],[1],[]]"), 3, 1), mpOf("[[],[1],[1]]"));
  EXPECT_EQ(sigmaAction(mpOf("[[2],[1]]"), 1, 2), mpOf("[[2],[1]]"));
  EXPECT_EQ(sigmaAction(mpOf("[[2],[1],[],[3]]"), 2, 2), mpOf("[[],[3],[2],[1]]"));
  EXPECT_THROW(sigmaAction(mpOf("[[1],[],[]]"), 2, 1), std::domain_error);
  for (int n = 0; n <= 4; ++n)
    for (const auto& mp : enumerateMultipartitions(4, n)) {
      Multipartition x = mp;
      for (int i = 0; i < 4; ++i) x = sigmaAction(x, 4, 1);
      EXPECT_EQ(x, mp);
    }
}

TEST(Partition, Orbits) {
  auto o = orbitAndStabilizer(mpOf("[[1],[1],[]]"), 3, 1);
  EXPECT_EQ(o.members.size(), 3u);
  EXPECT_EQ(o.stabilizerSize, 1);
  EXPECT_EQ(toLiteral(o.members.front()), "[[1],[1],[]]");
  o = orbitAndStabilizer(mpOf("[[1],[1],[1]]"), 3, 1);
  EXPECT_EQ(o.members.size(), 1u);
  EXPECT_EQ(o.stabilizerSize, 3);
  o = orbitAndStabilizer(mpOf("[[2],[]]"), 2, 1);
  ASSERT_EQ(o.members.size(), 2u);
  EXPECT_EQ(toLiteral(o.members[0]), "[[2],[]]");
  EXPECT_EQ(toLiteral(o.members[1]), "[[],[2]]");
  EXPECT_EQ(o.stabilizerSize, 1);
}
