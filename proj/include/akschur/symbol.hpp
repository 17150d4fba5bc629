#pragma once

// Shifted m-symbols, kappa sequences, dominance, and the two combinatorial
// a-value routes.

#include <gmpxx.h>

#include <vector>

#include "akschur/partition.hpp"

namespace akschur::combinatorics {

/// Charges r_0..r_{l-1} over a positive integer r, with m_j = r_j / r kept exact.
class ChargeData {
public:
  /// Throws std::domain_error unless r >= 1 and charges is non-empty.
  ChargeData(long r, std::vector<long> charges);

  long r() const { return r_; }
  const std::vector<long>& charges() const { return charges_; }
  const std::vector<mpq_class>& m() const { return m_; }
  int level() const { return static_cast<int>(charges_.size()); }

private:
  long r_;
  std::vector<long> charges_;
  std::vector<mpq_class> m_;
};

/// Floor of a rational, so floorOf(-1/6) == -1.
long floorOf(const mpq_class& x);

struct ShiftedSymbol {
  int size = 0;
  /// rows[j][i-1] = lambda^j_i - i + size + m_j for i = 1..size+floor(m_j).
  std::vector<std::vector<mpq_class>> rows;
};

struct KappaSequence {
  std::vector<mpq_class> entries;  // weakly decreasing
  mpq_class nM;                    // sum (i-1) kappa_i
};

/// Throws std::domain_error when some component does not fit (size +
/// floor(m_j) < length of lambda^j) or an entry would be negative.
ShiftedSymbol shiftedSymbol(const Multipartition& mp, const ChargeData& m, int size);

KappaSequence kappa(const ShiftedSymbol& symbol);
KappaSequence kappa(const Multipartition& mp, const ChargeData& m, int size);

/// Smallest symbol size that is at least length(mp)+1 and holds every
/// component of mp.
int autoSymbolSize(const Multipartition& mp, const ChargeData& m);

/// r (n_m(lambda) - n_m(empty)), both symbols taken at a common size.
mpq_class aValueCombinatorial(const Multipartition& mp, const ChargeData& m);
/// Same, at an explicit common symbol size.
mpq_class aValueCombinatorial(const Multipartition& mp, const ChargeData& m, int size);

/// r (n(rebar) - sum over nodes and t != s of min(h^{s,t} + m_s - m_t, 0)).
mpq_class aValueHookFormula(const Multipartition& mp, const ChargeData& m);

enum class Dominance { Strict, Equal, Incomparable };

/// Whether x dominates y. Sequences are zero-padded to a common length and
/// compared as given. `Incomparable` also covers "y strictly dominates x".
/// Throws std::domain_error if the totals differ.
Dominance dominates(const std::vector<mpq_class>& x, const std::vector<mpq_class>& y);
Dominance dominates(const KappaSequence& x, const KappaSequence& y);

/// Dominance (including equality) of two multisets, each sorted decreasingly
/// first. Throws std::domain_error on cardinality or total mismatch.
bool multisetDominates(std::vector<mpq_class> x, std::vector<mpq_class> y);

}  // namespace akschur::combinatorics
