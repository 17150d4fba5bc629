#include <gtest/gtest.h>

#include "akschur/io.hpp"
#include "printers.hpp"
#include "akschur/schur.hpp"

using namespace akschur::schur;
using akschur::combinatorics::enumerateMultipartitions;
using akschur::exactalg::MultiLaurent;
using akschur::exactalg::render;
using akschur::io::parseMultipartition;

TEST(Schur, CancellationFreeValues) {
  EXPECT_EQ(render(schurCancellationFree(parseMultipartition("[[2]]"))), "q + 1");
  EXPECT_EQ(render(schurCancellationFree(parseMultipartition("[[1,1]]"))), "1 + q^-1");
  EXPECT_EQ(render(schurCancellationFree(parseMultipartition("[[1],[]]"))), "-Q0*Q1^-1 + 1");
  EXPECT_EQ(render(schurCancellationFree(parseMultipartition("[[]]"))), "1");
}

TEST(Schur, MathasAndGIM) {
  EXPECT_EQ(render(schurMathas(parseMultipartition("[[2]]"))), "q + 1");
  const auto x = parseMultipartition("[[],[1]]");
  EXPECT_EQ(schurMathas(x), schurCancellationFree(x));
  EXPECT_EQ(render(schurGIM(parseMultipartition("[[1]]"), 1)), "1");
  EXPECT_THROW(schurGIM(parseMultipartition("[[1,1],[]]"), 1), std::domain_error);
  for (int n = 0; n <= 3; ++n)
    for (const auto& mp : enumerateMultipartitions(2, n)) {
      const auto expected = schurCancellationFree(mp);
      EXPECT_EQ(schurGIM(mp, mp.length()), expected);
      EXPECT_EQ(schurGIM(mp, mp.length() + 2), expected);
    }
}

TEST(Schur, XstRoutes) {
  // lambda^s empty: Q_s^{|lambda^t|} prod (q^h Q_t Q_s^{-1} - 1)
  const auto mp = parseMultipartition("[[],[2,1]]");
  MultiLaurent expected = MultiLaurent::Q(2, 0, 3);
  const auto& lt = mp[1];
  const auto& ls = mp[0];
  for (const auto& node : akschur::combinatorics::nodes(lt)) {
    const int h = akschur::combinatorics::genHookLength(lt, ls, node.row, node.column);
    expected *= MultiLaurent::monomial(2, {h, -1, 1}) - MultiLaurent::constant(2, 1);
  }
  EXPECT_EQ(xstFactor(mp, 0, 1), expected);
  EXPECT_EQ(xstMathas(parseMultipartition("[[1],[1]]"), 0, 1), xstClosedForm(parseMultipartition("[[1],[1]]"), 0, 1));
  for (int n = 0; n <= 4; ++n)
    for (const auto& m : enumerateMultipartitions(2, n)) EXPECT_EQ(xstMathas(m, 0, 1), xstClosedForm(m, 0, 1));
  EXPECT_THROW(xstFactor(mp, 1, 0), std::out_of_range);
  EXPECT_THROW(xstFactor(mp, 0, 2), std::out_of_range);
}

TEST(Schur, Lemmas) {
  EXPECT_TRUE(conjContentIdentity({1}, 1));
  EXPECT_TRUE(conjContentIdentity({2, 1}, 1));
  EXPECT_TRUE(conjContentIdentity({2, 1}, 2));
  EXPECT_THROW(conjContentIdentity({2, 1}, 3), std::domain_error);
  EXPECT_THROW(conjContentIdentity({2, 1}, 0), std::domain_error);
  EXPECT_TRUE(alphaIdentity(parseMultipartition("[[4,1],[],[2,1]]")));
  EXPECT_TRUE(alphaIdentity(parseMultipartition("[[],[],[]]")));
}

TEST(Schur, ArikiPoly) {
  EXPECT_EQ(render(arikiPoly(1, 2)), "q + 1");
  EXPECT_EQ(render(arikiPoly(2, 1)), "Q0 - Q1");
  EXPECT_EQ(render(arikiPoly(1, 1)), "1");
}

TEST(Schur, SpecValidation) {
  EXPECT_THROW(CycloSpec::cyclotomic(1, 1, 1, {0}), std::domain_error);
  try {
    CycloSpec::cyclotomic(4, 2, 1, {0});
    FAIL();
  } catch (const std::domain_error& ex) {
    EXPECT_STREQ(ex.what(), "gcd(k,e) must be 1");
  }
  EXPECT_THROW(CycloSpec::cyclotomic(4, 1, 0, {0}), std::domain_error);
  EXPECT_THROW(specMapFor(CycloSpec::cyclotomic(4, 1, 1, {0}), 2), std::domain_error);
}

TEST(Schur, Semisimplicity) {
  EXPECT_FALSE(isSemisimple(CycloSpec::cyclotomic(2, 1, 1, {0}), 1, 2));
  EXPECT_TRUE(isSemisimple(CycloSpec::cyclotomic(5, 1, 1, {0}), 1, 2));
  EXPECT_FALSE(isSemisimple(CycloSpec::cyclotomic(12, 1, 6, {3, -1, -2}), 3, 2));
  EXPECT_FALSE(isSemisimple(CycloSpec::rootOfUnity(2, 1, {0}), 1, 2));
  EXPECT_TRUE(isSemisimple(CycloSpec::rootOfUnity(5, 2, {0}), 1, 2));
  // Both routes on a small sweep.
  for (int e = 2; e <= 7; ++e)
    for (long r = 1; r <= 3; ++r) {
      const auto spec = CycloSpec::cyclotomic(e, 1, r, {0, 1});
      for (int n = 1; n <= 3; ++n) EXPECT_EQ(isSemisimpleByArikiPoly(spec, 2, n), isSemisimpleBySchurElements(spec, 2, n));
    }
}

TEST(Schur, DefectZero) {
  EXPECT_TRUE(isDefectZero(parseMultipartition("[[1]]"), 2, {0}));
  EXPECT_FALSE(isDefectZero(parseMultipartition("[[2]]"), 2, {0}));
  EXPECT_TRUE(isDefectZero(parseMultipartition("[[1],[]]"), 3, {0, 1}));
  EXPECT_TRUE(isDefectZero(parseMultipartition("[[],[1]]"), 3, {0, 1}));
  EXPECT_THROW(isDefectZeroByHooks(parseMultipartition("[[1]]"), 1, {0}), std::domain_error);
}

TEST(Schur, ValuationAValue) {
  const akschur::combinatorics::ChargeData one(1, {0});
  EXPECT_EQ(aValueViaValuation(parseMultipartition("[[1,1]]"), one), 1);
  EXPECT_EQ(aValueViaValuation(parseMultipartition("[[]]"), one), 0);
}
