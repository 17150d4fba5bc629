#include "akschur/symbol.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace akschur::combinatorics {

ChargeData::ChargeData(long r, std::vector<long> charges) : r_(r), charges_(std::move(charges)) {
  if (r_ < 1) throw std::domain_error("r must be a positive integer");
  if (charges_.empty()) throw std::domain_error("need at least one charge");
  for (long c : charges_) {
    mpq_class q(c, r_);
    q.canonicalize();
    m_.push_back(q);
  }
}

long floorOf(const mpq_class& x) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return f.get_si();
}

ShiftedSymbol shiftedSymbol(const Multipartition& mp, const ChargeData& m, int size) {
  if (mp.level() != m.level()) throw std::domain_error("charge count does not match level");
  ShiftedSymbol symbol{size, {}};
  for (int j = 0; j < mp.level(); ++j) {
    const mpq_class& mj = m.m()[static_cast<std::size_t>(j)];
    const long rows = size + floorOf(mj);
    if (rows < mp[j].length() || rows < 0)
      throw std::domain_error("symbol size " + std::to_string(size) +
                              " is too small for component " + std::to_string(j));
    std::vector<mpq_class> row;
    for (int i = 1; i <= rows; ++i) {
      mpq_class entry = mpq_class(mp[j][i] - i + size) + mj;
      if (sgn(entry) < 0) throw std::domain_error("negative shifted-symbol entry");
      row.push_back(entry);
    }
    symbol.rows.push_back(std::move(row));
  }
  return symbol;
}

KappaSequence kappa(const ShiftedSymbol& symbol) {
  KappaSequence k;
  for (const auto& row : symbol.rows) k.entries.insert(k.entries.end(), row.begin(), row.end());
  std::sort(k.entries.begin(), k.entries.end(), std::greater<>());
  k.nM = 0;
  for (std::size_t i = 0; i < k.entries.size(); ++i) k.nM += mpq_class(static_cast<long>(i)) * k.entries[i];
  return k;
}

KappaSequence kappa(const Multipartition& mp, const ChargeData& m, int size) {
  return kappa(shiftedSymbol(mp, m, size));
}

int autoSymbolSize(const Multipartition& mp, const ChargeData& m) {
  long size = std::max(mp.length() + 1, 1);
  for (int j = 0; j < mp.level(); ++j)
    size = std::max(size, mp[j].length() - floorOf(m.m()[static_cast<std::size_t>(j)]));
  return static_cast<int>(size);
}

mpq_class aValueCombinatorial(const Multipartition& mp, const ChargeData& m, int size) {
  const auto empty = Multipartition::empty(mp.level());
  mpq_class a = mpq_class(m.r()) * (kappa(mp, m, size).nM - kappa(empty, m, size).nM);
  a.canonicalize();
  return a;
}

mpq_class aValueCombinatorial(const Multipartition& mp, const ChargeData& m) {
  const auto empty = Multipartition::empty(mp.level());
  const int size = std::max(autoSymbolSize(mp, m), autoSymbolSize(empty, m));
  return aValueCombinatorial(mp, m, size);
}

mpq_class aValueHookFormula(const Multipartition& mp, const ChargeData& m) {
  if (mp.level() != m.level()) throw std::domain_error("charge count does not match level");
  mpq_class correction = 0;
  for (int s = 0; s < mp.level(); ++s) {
    for (const Node& x : nodes(mp[s])) {
      for (int t = 0; t < mp.level(); ++t) {
        if (t == s) continue;
        mpq_class v = mpq_class(genHookLength(mp[s], mp[t], x.row, x.column)) +
                      m.m()[static_cast<std::size_t>(s)] - m.m()[static_cast<std::size_t>(t)];
        if (sgn(v) < 0) correction += v;
      }
    }
  }
  mpq_class a = mpq_class(m.r()) * (mpq_class(nFunction(rebar(mp))) - correction);
  a.canonicalize();
  return a;
}

Dominance dominates(const std::vector<mpq_class>& x, const std::vector<mpq_class>& y) {
  const std::size_t len = std::max(x.size(), y.size());
  mpq_class sx = 0, sy = 0;
  bool allGeq = true;
  bool same = true;
  for (std::size_t i = 0; i < len; ++i) {
    const mpq_class xi = i < x.size() ? x[i] : mpq_class(0);
    const mpq_class yi = i < y.size() ? y[i] : mpq_class(0);
    if (xi != yi) same = false;
    sx += xi;
    sy += yi;
    if (sx < sy) allGeq = false;
  }
  if (sx != sy) throw std::domain_error("dominance needs sequences with equal totals");
  if (same) return Dominance::Equal;
  return allGeq ? Dominance::Strict : Dominance::Incomparable;
}

Dominance dominates(const KappaSequence& x, const KappaSequence& y) {
  return dominates(x.entries, y.entries);
}

bool multisetDominates(std::vector<mpq_class> x, std::vector<mpq_class> y) {
  if (x.size() != y.size()) throw std::domain_error("multisets must have equal cardinality");
  std::sort(x.begin(), x.end(), std::greater<>());
  std::sort(y.begin(), y.end(), std::greater<>());
  return dominates(x, y) != Dominance::Incomparable;
}

}  // namespace akschur::combinatorics
