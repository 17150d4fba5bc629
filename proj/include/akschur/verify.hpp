#pragma once

// Exhaustive and randomised cross-checks. Each suite compares independent
// computations over every instance and reports the first failure in
// enumeration order.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace akschur::verify {

struct SuiteReport {
  std::string name;
  bool passed = true;
  long checks = 0;
  std::string firstCounterexample;
  double seconds = 0.0;
};

struct Options {
  int maxL = 3;
  int maxN = 4;
  unsigned jobs = 1;
  std::uint64_t seed = 0x5eed2024;
};

/// Outcome of one work item.
struct ItemResult {
  long checks = 0;
  std::string counterexample;  // empty when the item passed
};

/// Runs work(0..count-1) on `jobs` threads and merges in index order, so the
/// result does not depend on the thread count. Exceptions thrown by an item
/// become its counterexample.
SuiteReport runItems(const std::string& name, std::size_t count, unsigned jobs,
                     const std::function<ItemResult(std::size_t)>& work);

/// Rim-content identity for |lambda| <= maxN, every valid k; alpha identity on
/// Pi^3_maxN; n(lambda) against its conjugate form.
SuiteReport lemmas(const Options& opt);
/// The three Schur element formulas agree on Pi^l_n for l <= maxL, n <= maxN,
/// GIM at L in {len, len+1, len+3}; both X_st routes; the l = 1 hook product.
SuiteReport formulas(const Options& opt);
/// Three a-value routes on Pi^l_n with 10 random charge data per l; symbol size
/// invariance; sigma-invariance for p-periodic charges.
SuiteReport avalues(const Options& opt);
/// P-criterion against the all-Schur-elements verdict on a fixed grid of at
/// least 50 specialisations in both modes, l <= 3, n <= 3, e <= 12.
SuiteReport semisimple(const Options& opt);
/// Hook divisibility against zero-testing theta(s_lambda), e in {2,3,4,6},
/// five random charge vectors each.
SuiteReport defect0(const Options& opt);
/// kappa-dominance against a-values; multiset concatenation dominance against
/// brute-force partial sums; exact-algebra fuzzing.
SuiteReport properties(const Options& opt);
/// kappa-dominance implies a strictly smaller a-value, exhaustive.
SuiteReport kappaDominance(const Options& opt);
/// 1000 random instances of the concatenation lemma.
SuiteReport concatenation(const Options& opt);
/// At least 1500 random identities in the exact algebra layer.
SuiteReport exactalgFuzz(const Options& opt);
/// The G(3,1,2) and G(3,3,2) worked examples, checked against literal sets.
SuiteReport examples(const Options& opt);
/// sigma-stability of the ambient basic set for the G(3,3,2) data and for
/// l = 2, p = 2, n = 3 with five random specialisations.
SuiteReport sigmaStability(const Options& opt);

std::vector<std::string> suiteNames();
/// One suite, or every suite for "all". Throws std::invalid_argument for an
/// unknown name.
std::vector<SuiteReport> run(const std::string& suite, const Options& opt);

}  // namespace akschur::verify
