#include <gtest/gtest.h>

#include "akschur/basicset.hpp"
#include "akschur/io.hpp"
#include "printers.hpp"

using namespace akschur::basicset;
using akschur::combinatorics::enumerateMultipartitions;
using akschur::io::parseMultipartition;
using akschur::io::toLiteral;

namespace {

MultipartitionSet setOf(std::initializer_list<const char*> literals) {
  MultipartitionSet out;
  for (const char* s : literals) out.insert(parseMultipartition(s));
  return out;
}

UglovCharge charge(int ePrime, std::vector<long> s) {
  UglovCharge c;
  c.ePrime = ePrime;
  c.s = std::move(s);
  return c;
}

const CycloSpec kG312 = CycloSpec::cyclotomic(12, 1, 6, {3, -1, -2});

// Cross-class pairs must have no witness d.
bool noCrossWitness(const DMPartition& dm, const CycloSpec& spec, int l, int n) {
  std::vector<int> owner(static_cast<std::size_t>(l));
  for (std::size_t c = 0; c < dm.classes.size(); ++c)
    for (int i : dm.classes[c]) owner[static_cast<std::size_t>(i)] = static_cast<int>(c);
  const long e = spec.e(), k = spec.k(), r = spec.r();
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) {
      if (owner[static_cast<std::size_t>(i)] == owner[static_cast<std::size_t>(j)]) continue;
      for (long d = -n + 1; d < n; ++d) {
        const long v = (i - j) * e + k * l * (spec.charges()[static_cast<std::size_t>(i)] - spec.charges()[static_cast<std::size_t>(j)] - r * d);
        if (v % (l * e) == 0) return false;
      }
    }
  return true;
}

}  // namespace

TEST(BasicSet, DipperMathasClasses) {
  auto dm = dmPartition(kG312, 3, 2);
  EXPECT_EQ(dm.classes, (std::vector<std::vector<int>>{{0, 1}, {2}}));
  ASSERT_EQ(dm.residuals.size(), 2u);
  EXPECT_EQ(dm.residuals[0], (std::vector<mpq_class>{mpq_class(1, 2), mpq_class(-1, 6)}));
  EXPECT_EQ(dm.residuals[1], (std::vector<mpq_class>{mpq_class(-1, 3)}));

  dm = dmPartition(CycloSpec::cyclotomic(12, 1, 6, {0, 0, 0}), 3, 2);
  EXPECT_EQ(dm.classes, (std::vector<std::vector<int>>{{0}, {1}, {2}}));

  dm = dmPartition(CycloSpec::cyclotomic(101, 1, 1, {0, 1, 2}), 3, 3);
  EXPECT_EQ(dm.classes.size(), 3u);
  EXPECT_THROW(dmPartition(CycloSpec::rootOfUnity(4, 1, {0}), 1, 1), std::domain_error);

  for (int e = 2; e <= 12; ++e)
    for (long r = 1; r <= 4; ++r) {
      const auto spec = CycloSpec::cyclotomic(e, 1, r, {0, 1, -1, 2});
      EXPECT_TRUE(noCrossWitness(dmPartition(spec, 4, 3), spec, 4, 3));
    }
}

TEST(BasicSet, Charges) {
  const auto dm = dmPartition(kG312, 3, 2);
  auto c = chargeFor(dm, 0, kG312);
  EXPECT_EQ(c.s, (std::vector<long>{0, 0}));
  EXPECT_EQ(c.ePrime, 2);
  EXPECT_EQ(c.modulus, 2);
  EXPECT_TRUE(c.exactRelation);
  EXPECT_TRUE(c.diagnostics.empty());
  c = chargeFor(dm, 1, kG312);
  EXPECT_EQ(c.s, (std::vector<long>{0}));
  EXPECT_THROW(chargeFor(dm, 2, kG312), std::out_of_range);

  // Every returned s_j solves its congruence.
  for (int e = 2; e <= 12; ++e)
    for (long r = 1; r <= 6; ++r) {
      const auto spec = CycloSpec::cyclotomic(e, 1, r, {0, 2, -1});
      const auto d = dmPartition(spec, 3, 3);
      for (int cls = 0; cls < static_cast<int>(d.classes.size()); ++cls) {
        const auto ch = chargeFor(d, cls, spec);
        const auto& members = d.classes[static_cast<std::size_t>(cls)];
        for (std::size_t j = 0; j < members.size(); ++j) {
          const long lhs = 3 * r * ch.s[j];
          const long rhs = (members[j] - members[0]) * e +
                           3 * (spec.charges()[static_cast<std::size_t>(members[j])] - spec.charges()[static_cast<std::size_t>(members[0])]);
          EXPECT_EQ(((lhs - rhs) % (3 * e) + 3 * e) % (3 * e), 0);
          EXPECT_EQ(lhs == rhs || !ch.exactRelation, true);
        }
      }
    }
}

TEST(BasicSet, ChargePrefersTheExactSolution) {
  // One class {0,1,2}; the exact relation gives s = (0,1,2) although 2 = -1 mod 3.
  const auto spec = CycloSpec::cyclotomic(9, 1, 3, {0, 0, 0});
  const auto dm = dmPartition(spec, 3, 2);
  ASSERT_EQ(dm.classes.size(), 1u);
  const auto c = chargeFor(dm, 0, spec);
  EXPECT_EQ(c.s, (std::vector<long>{0, 1, 2}));
  EXPECT_EQ(c.ePrime, 3);
  EXPECT_TRUE(c.exactRelation);
}

TEST(BasicSet, ChargeFallsBackToTheLeastResidue) {
  const auto spec = CycloSpec::cyclotomic(9, 1, 12, {0, 0, 0});
  const auto dm = dmPartition(spec, 3, 2);
  ASSERT_EQ(dm.classes.size(), 1u);
  const auto c = chargeFor(dm, 0, spec);
  EXPECT_EQ(c.s, (std::vector<long>{0, 1, -1}));
  EXPECT_FALSE(c.exactRelation);
  EXPECT_EQ(c.diagnostics.size(), 2u);
}

TEST(BasicSet, UglovSets) {
  EXPECT_EQ(uglovMultipartitions(2, 2, charge(2, {0, 0})), setOf({"[[2],[]]", "[[1],[1]]"}));
  EXPECT_EQ(uglovMultipartitions(2, 1, charge(2, {0, 0})), setOf({"[[1],[]]"}));
  EXPECT_EQ(uglovMultipartitions(1, 2, charge(2, {0})), setOf({"[[2]]"}));
  EXPECT_EQ(uglovMultipartitions(1, 0, charge(2, {0})), setOf({"[[]]"}));
  // Level one: e-regular partitions.
  for (int e = 2; e <= 4; ++e)
    for (int n = 0; n <= 7; ++n) {
      MultipartitionSet regular;
      for (const auto& mp : enumerateMultipartitions(1, n)) {
        bool ok = true;
        for (int i = 1; i + e - 1 <= mp[0].length(); ++i) ok = ok && mp[0][i] != mp[0][i + e - 1];
        if (ok) regular.insert(mp);
      }
      EXPECT_EQ(uglovMultipartitions(1, n, charge(e, {0})), regular) << "e=" << e << " n=" << n;
    }
}

TEST(BasicSet, UglovDownwardClosure) {
  const auto ch = charge(3, {0, 1, -2});
  for (int n = 1; n <= 5; ++n) {
    const auto below = uglovMultipartitions(3, n - 1, ch);
    for (const auto& mp : uglovMultipartitions(3, n, ch)) {
      EXPECT_EQ(mp.rank(), n);
      bool reached = false;
      for (const auto& x : below)
        for (int t = 0; t < 3 && !reached; ++t) {
          akschur::combinatorics::Multipartition grown = x;
          reached = applyCrystal(x, t, ch, grown) && grown == mp;
        }
      EXPECT_TRUE(reached) << toLiteral(mp);
    }
  }
}

TEST(BasicSet, DegenerateCharacteristic) {
  EXPECT_EQ(uglovMultipartitions(1, 3, charge(1, {0})).size(), 3u);
  EXPECT_THROW(uglovMultipartitions(2, 1, charge(1, {0, 0})), std::domain_error);
  EXPECT_EQ(uglovMultipartitions(2, 0, charge(1, {0, 0})).size(), 1u);
}

TEST(BasicSet, WorkedExampleLevelThree) {
  const auto B = assembleBasicSet(kG312, 3, 2);
  EXPECT_EQ(B.elements, setOf({"[[2],[],[]]", "[[1],[1],[]]", "[[1],[],[1]]", "[[],[],[2]]"}));
  EXPECT_FALSE(B.semisimple);
  EXPECT_EQ(assembleBasicSet(kG312, 3, 0).elements, setOf({"[[],[],[]]"}));
}

TEST(BasicSet, SemisimpleGivesEverything) {
  const auto spec = CycloSpec::cyclotomic(11, 1, 1, {0, 3});
  const auto B = assembleBasicSet(spec, 2, 2);
  EXPECT_TRUE(B.semisimple);
  EXPECT_EQ(B.elements.size(), enumerateMultipartitions(2, 2).size());
}

TEST(BasicSet, OrbitsForGl32) {
  const auto gpn = assembleBasicSetGPN(CycloSpec::cyclotomic(12, 1, 2, {0}), 3, 3, 2);
  EXPECT_EQ(gpn.ambient.elements,
            setOf({"[[1],[1],[]]", "[[],[1],[1]]", "[[1],[],[1]]", "[[2],[],[]]", "[[],[2],[]]", "[[],[],[2]]"}));
  ASSERT_EQ(gpn.orbits.size(), 2u);
  EXPECT_EQ(toLiteral(gpn.orbits[0].representative), "[[2],[],[]]");
  EXPECT_EQ(toLiteral(gpn.orbits[1].representative), "[[1],[1],[]]");
  for (const auto& o : gpn.orbits) {
    EXPECT_EQ(o.orbitSize, 3);
    EXPECT_EQ(o.stabilizerSize, 1);
  }
  EXPECT_EQ(gpn.orbits[1].labels, (std::vector<std::string>{"E^{[[1],[1],[]],0}"}));
}

TEST(BasicSet, GPNPreconditions) {
  const auto spec = CycloSpec::cyclotomic(12, 1, 2, {0});
  const auto pair = CycloSpec::cyclotomic(12, 1, 2, {0, 0});
  EXPECT_THROW(assembleBasicSetGPN(pair, 4, 2, 2), std::domain_error);  // n = 2 with p even
  EXPECT_THROW(assembleBasicSetGPN(spec, 3, 3, 1), std::domain_error);
  EXPECT_THROW(assembleBasicSetGPN(spec, 3, 2, 3), std::domain_error);  // p does not divide l
  EXPECT_THROW(assembleBasicSetGPN(CycloSpec::cyclotomic(12, 1, 2, {0, 1, 0}), 3, 3, 3), std::domain_error);
  EXPECT_THROW(assembleBasicSetGPN(spec, 4, 2, 3), std::domain_error);  // one charge for d = 2
  try {
    assembleBasicSetGPN(pair, 4, 2, 2);
    FAIL();
  } catch (const std::domain_error& ex) {
    EXPECT_STREQ(ex.what(), "need n > 2, or n = 2 with p odd");
  }
}

TEST(BasicSet, TrivialP) {
  const auto spec = CycloSpec::cyclotomic(12, 1, 6, {3, -1, -2});
  const auto gpn = assembleBasicSetGPN(spec, 3, 1, 2);
  const auto direct = assembleBasicSet(spec, 3, 2);
  ASSERT_EQ(gpn.orbits.size(), direct.elements.size());
  for (const auto& o : gpn.orbits) {
    EXPECT_EQ(o.orbitSize, 1);
    EXPECT_EQ(o.stabilizerSize, 1);
    EXPECT_TRUE(direct.elements.count(o.representative));
  }
}

TEST(BasicSet, WorkedExampleAValues) {
  const akschur::combinatorics::ChargeData m(6, {3, -1, -2});
  const auto B = assembleBasicSet(kG312, 3, 2).elements;
  const std::vector<akschur::combinatorics::Multipartition> xs(B.begin(), B.end());
  for (const auto& mp : xs) {
    const mpq_class a = akschur::combinatorics::aValueCombinatorial(mp, m);
    EXPECT_EQ(a, akschur::combinatorics::aValueHookFormula(mp, m));
    EXPECT_EQ(a, akschur::schur::aValueViaValuation(mp, m));
  }
  // Pairwise separated by kappa or by the a-value, at a common symbol size.
  int size = 0;
  for (const auto& mp : xs) size = std::max(size, akschur::combinatorics::autoSymbolSize(mp, m));
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      const bool kappaDiffers = akschur::combinatorics::kappa(xs[i], m, size).entries !=
                                akschur::combinatorics::kappa(xs[j], m, size).entries;
      const bool aDiffers = akschur::combinatorics::aValueHookFormula(xs[i], m) !=
                            akschur::combinatorics::aValueHookFormula(xs[j], m);
      EXPECT_TRUE(kappaDiffers || aDiffers) << toLiteral(xs[i]) << " " << toLiteral(xs[j]);
    }
}
