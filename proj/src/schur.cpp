#include "akschur/schur.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace akschur::schur {

using combinatorics::conjugate;
using combinatorics::genHookLength;
using combinatorics::nFunction;
using combinatorics::Node;
using combinatorics::nodes;
using exactalg::Exponent;

CycloSpec::CycloSpec(int e, int k, long r, std::vector<long> charges, SpecMode mode)
    : e_(e), k_(k), r_(r), charges_(std::move(charges)), mode_(mode) {
  if (e_ < 2) throw std::domain_error("e must be > 1");
  if (std::gcd(k_, e_) != 1) throw std::domain_error("gcd(k,e) must be 1");
  if (r_ < 1) throw std::domain_error("r must be >= 1");
  if (charges_.empty()) throw std::domain_error("need at least one charge");
}

CycloSpec CycloSpec::cyclotomic(int e, int k, long r, std::vector<long> charges) {
  return CycloSpec(e, k, r, std::move(charges), SpecMode::Cyclotomic);
}

CycloSpec CycloSpec::rootOfUnity(int e, int k, std::vector<long> v) {
  return CycloSpec(e, k, 1, std::move(v), SpecMode::RootOfUnity);
}

exactalg::SpecMap specMapFor(const CycloSpec& spec, int l) {
  if (static_cast<int>(spec.charges().size()) != l)
    throw std::domain_error("expected " + std::to_string(l) + " charges, got " +
                            std::to_string(spec.charges().size()));
  exactalg::SpecMap theta;
  if (spec.mode() == SpecMode::RootOfUnity) {
    theta.N = spec.e();
    theta.q = {spec.k(), 0};
    for (long v : spec.charges()) theta.Q.push_back({spec.k() * v, 0});
    return theta;
  }
  const int N = std::lcm(l, spec.e());
  const long eta = static_cast<long>(spec.k()) * (N / spec.e());
  const long etaL = N / l;
  theta.N = N;
  theta.q = {spec.r() * eta, 0};
  for (int j = 0; j < l; ++j)
    theta.Q.push_back({j * etaL + spec.charges()[static_cast<std::size_t>(j)] * eta, 0});
  return theta;
}

namespace {

Exponent zeroExponent(int l) { return Exponent(static_cast<std::size_t>(l + 1), 0); }

// q^h Q_s Q_t^{-1} - 1
MultiLaurent crossBinomial(int l, int h, int s, int t) {
  Exponent e = zeroExponent(l);
  e[0] = h;
  e[static_cast<std::size_t>(s + 1)] += 1;
  e[static_cast<std::size_t>(t + 1)] -= 1;
  return MultiLaurent::monomial(l, e) - MultiLaurent::constant(l, 1);
}

MultiLaurent signedMonomial(int l, bool negative, Exponent e) {
  return MultiLaurent::monomial(l, std::move(e), negative ? -1 : 1);
}

}  // namespace

MultiLaurent schurCancellationFree(const Multipartition& mp) {
  const int l = mp.level();
  const int n = mp.rank();
  Exponent lead = zeroExponent(l);
  lead[0] = static_cast<int>(-nFunction(combinatorics::rebar(mp)));
  MultiLaurent result = signedMonomial(l, (n * (l - 1)) % 2 != 0, lead);
  for (int s = 0; s < l; ++s) {
    for (const Node& x : nodes(mp[s])) {
      const int hook = genHookLength(mp[s], mp[s], x.row, x.column);
      if (hook < 1) throw std::logic_error("same-component hook below 1");
      result *= MultiLaurent::qInteger(l, hook);
      for (int t = 0; t < l; ++t)
        if (t != s) result *= crossBinomial(l, genHookLength(mp[s], mp[t], x.row, x.column), s, t);
    }
  }
  return result;
}

MultiLaurent xstMathas(const Multipartition& mp, int s, int t) {
  const int l = mp.level();
  if (s < 0 || t >= l || s >= t) throw std::out_of_range("need 0 <= s < t < l");
  const Partition& ls = mp[s];
  const Partition& lt = mp[t];
  const Partition ltConj = conjugate(lt);

  MultiLaurent num = MultiLaurent::constant(l, 1);
  std::vector<MultiLaurent> denominators;
  for (const Node& x : nodes(lt)) num *= MultiLaurent::binomial(l, x.column - x.row, t, 0, s);
  for (const Node& x : nodes(ls)) {
    const int c = x.column - x.row;
    num *= MultiLaurent::binomial(l, c, s, lt[1], t);
    for (int k = 1; k <= lt[1]; ++k) {
      num *= MultiLaurent::binomial(l, c, s, k - 1 - ltConj[k], t);
      denominators.push_back(MultiLaurent::binomial(l, c, s, k - ltConj[k], t));
    }
  }
  for (const auto& den : denominators) num = exactalg::exactDivide(num, den);
  return num;
}

MultiLaurent xstClosedForm(const Multipartition& mp, int s, int t) {
  const int l = mp.level();
  if (s < 0 || t >= l || s >= t) throw std::out_of_range("need 0 <= s < t < l");
  const Partition sConj = conjugate(mp[s]);
  const Partition tConj = conjugate(mp[t]);
  long overlap = 0;
  for (int i = 1; i <= std::min(sConj.length(), tConj.length()); ++i)
    overlap += static_cast<long>(sConj[i]) * tConj[i];

  Exponent lead = zeroExponent(l);
  lead[0] = static_cast<int>(-overlap);
  lead[static_cast<std::size_t>(s + 1)] = mp[t].size();
  lead[static_cast<std::size_t>(t + 1)] = mp[s].size();
  MultiLaurent result = MultiLaurent::monomial(l, lead);
  for (const Node& x : nodes(mp[s]))
    result *= crossBinomial(l, genHookLength(mp[s], mp[t], x.row, x.column), s, t);
  for (const Node& x : nodes(mp[t]))
    result *= crossBinomial(l, genHookLength(mp[t], mp[s], x.row, x.column), t, s);
  return result;
}

MultiLaurent xstFactor(const Multipartition& mp, int s, int t) {
  MultiLaurent viaMathas = xstMathas(mp, s, t);
  if (!(viaMathas == xstClosedForm(mp, s, t)))
    throw std::logic_error("X_st routes disagree for s=" + std::to_string(s) + ", t=" + std::to_string(t));
  return viaMathas;
}

MultiLaurent schurMathas(const Multipartition& mp) {
  const int l = mp.level();
  const int n = mp.rank();
  long alpha = 0;
  for (const auto& c : mp.components()) alpha += nFunction(c);

  Exponent lead = zeroExponent(l);
  lead[0] = static_cast<int>(-alpha);
  for (int j = 0; j < l; ++j) lead[static_cast<std::size_t>(j + 1)] = -n;
  MultiLaurent result = signedMonomial(l, (n * (l - 1)) % 2 != 0, lead);
  for (int s = 0; s < l; ++s) {
    for (const Node& x : nodes(mp[s])) {
      result *= MultiLaurent::Q(l, s);
      result *= MultiLaurent::qInteger(l, genHookLength(mp[s], mp[s], x.row, x.column));
    }
  }
  for (int s = 0; s < l; ++s)
    for (int t = s + 1; t < l; ++t) result *= xstMathas(mp, s, t);
  return result;
}

namespace {

// A product of binomials x^a - x^b kept as (sign) * x^unit * prod (x^key - 1)^mult,
// with each key oriented so that its first non-zero coordinate is positive.
// Identical keys cancel between numerator and denominator before anything is
// expanded.
class BinomialProduct {
public:
  explicit BinomialProduct(int l) : l_(l), unit_(zeroExponent(l)) {}

  void scaleByMonomial(bool negative, const Exponent& e) {
    negative_ ^= negative;
    for (std::size_t i = 0; i < unit_.size(); ++i) unit_[i] += e[i];
  }

  // (x^a - x^b)^power, power may be negative.
  void multiplyBinomial(const Exponent& a, const Exponent& b, int power) {
    Exponent diff(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) diff[i] = a[i] - b[i];
    const auto lead = std::find_if(diff.begin(), diff.end(), [](int v) { return v != 0; });
    if (lead == diff.end()) throw std::logic_error("vanishing binomial factor");
    const Exponent* base = &b;
    bool flip = false;
    if (*lead < 0) {
      for (int& v : diff) v = -v;
      base = &a;
      flip = true;
    }
    for (std::size_t i = 0; i < unit_.size(); ++i) unit_[i] += power * (*base)[i];
    if (flip && power % 2 != 0) negative_ = !negative_;
    auto& mult = keys_[diff];
    mult += power;
    if (mult == 0) keys_.erase(diff);
  }

  MultiLaurent numerator() const {
    MultiLaurent out = signedMonomial(l_, negative_, unit_);
    for (const auto& [key, mult] : keys_)
      if (mult > 0) out *= factor(key).pow(mult);
    return out;
  }

  MultiLaurent denominator() const {
    MultiLaurent out = MultiLaurent::constant(l_, 1);
    for (const auto& [key, mult] : keys_)
      if (mult < 0) out *= factor(key).pow(-mult);
    return out;
  }

private:
  MultiLaurent factor(const Exponent& key) const {
    return MultiLaurent::monomial(l_, key) - MultiLaurent::constant(l_, 1);
  }

  int l_;
  bool negative_ = false;
  Exponent unit_;
  std::map<Exponent, int> keys_;
};

Exponent monomialExponent(int l, int qPower, int j) {
  Exponent e = zeroExponent(l);
  e[0] = qPower;
  e[static_cast<std::size_t>(j + 1)] = 1;
  return e;
}

}  // namespace

MultiLaurent schurGIM(const Multipartition& mp, int L) {
  const int l = mp.level();
  const int n = mp.rank();
  const auto B = combinatorics::lSymbol(mp, L);

  const long aL = static_cast<long>(n) * (l - 1) + (static_cast<long>(l) * (l - 1) / 2) * (static_cast<long>(L) * (L - 1) / 2);
  const long bNumer = static_cast<long>(l) * L * (L - 1) * (2 * static_cast<long>(l) * L - l - 3);
  if (bNumer % 12 != 0) throw std::logic_error("b_L is not an integer");

  BinomialProduct product(l);
  Exponent prefactor = zeroExponent(l);
  prefactor[0] = static_cast<int>(bNumer / 12);
  for (int j = 0; j < l; ++j) prefactor[static_cast<std::size_t>(j + 1)] = -n;
  product.scaleByMonomial(aL % 2 != 0, prefactor);

  // nu
  for (int s = 0; s < l; ++s)
    for (int t = s + 1; t < l; ++t)
      product.multiplyBinomial(monomialExponent(l, 0, s), monomialExponent(l, 0, t), L);
  for (int s = 0; s < l; ++s)
    for (int t = 0; t < l; ++t)
      for (int b : B[static_cast<std::size_t>(s)])
        for (int k = 1; k <= b; ++k)
          product.multiplyBinomial(monomialExponent(l, k, s), monomialExponent(l, 0, t), 1);
  // delta
  for (int s = 0; s < l; ++s)
    for (int t = s + 1; t < l; ++t)
      for (int bs : B[static_cast<std::size_t>(s)])
        for (int bt : B[static_cast<std::size_t>(t)])
          product.multiplyBinomial(monomialExponent(l, bs, s), monomialExponent(l, bt, t), -1);
  for (int s = 0; s < l; ++s) {
    const auto& beta = B[static_cast<std::size_t>(s)];
    for (std::size_t i = 0; i < beta.size(); ++i)
      for (std::size_t j = i + 1; j < beta.size(); ++j)
        product.multiplyBinomial(monomialExponent(l, beta[i], s), monomialExponent(l, beta[j], s), -1);
  }

  MultiLaurent result = exactalg::exactDivide(product.numerator(), product.denominator());
  const MultiLaurent qMinusOne = MultiLaurent::q(l) - MultiLaurent::constant(l, 1);
  for (int i = 0; i < n; ++i) result = exactalg::exactDivide(result, qMinusOne);
  return result;
}

bool conjContentIdentity(const Partition& p, int k) {
  if (k < 1 || k > p[1]) throw std::domain_error("need 1 <= k <= lambda_1");
  const Partition conj = conjugate(p);
  // Q0 plays the role of y.
  auto f = [](int qPower) {
    return MultiLaurent::monomial(1, Exponent{qPower, 1}) - MultiLaurent::constant(1, 1);
  };
  MultiLaurent lhsNum = MultiLaurent::constant(1, 1);
  MultiLaurent lhsDen = f(p[1]);
  for (int i = 1; i <= conj[k]; ++i) {
    lhsNum *= f(p[i] - i + 1);
    lhsDen *= f(p[i] - i);
  }
  MultiLaurent rhsNum = MultiLaurent::constant(1, 1);
  MultiLaurent rhsDen = f(-conj[k] + k - 1);
  for (int j = k; j <= p[1]; ++j) {
    rhsNum *= f(-conj[j] + j - 1);
    rhsDen *= f(-conj[j] + j);
  }
  return lhsNum * rhsDen == rhsNum * lhsDen;
}

bool alphaIdentity(const Multipartition& mp) {
  std::vector<Partition> conj;
  long alpha = 0;
  for (const auto& c : mp.components()) {
    conj.push_back(conjugate(c));
    for (int v : conj.back().parts()) alpha += static_cast<long>(v - 1) * v;
  }
  alpha /= 2;
  long cross = 0;
  for (std::size_t s = 0; s < conj.size(); ++s)
    for (std::size_t t = s + 1; t < conj.size(); ++t)
      for (int i = 1; i <= std::min(conj[s].length(), conj[t].length()); ++i)
        cross += static_cast<long>(conj[s][i]) * conj[t][i];
  return alpha + cross == nFunction(combinatorics::rebar(mp));
}

MultiLaurent arikiPoly(int l, int n) {
  if (l < 1 || n < 1) throw std::domain_error("arikiPoly needs l, n >= 1");
  static std::mutex mutex;
  static std::map<std::pair<int, int>, MultiLaurent> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find({l, n}); it != cache.end()) return it->second;
  }
  MultiLaurent P = MultiLaurent::constant(l, 1);
  for (int i = 2; i <= n; ++i) P *= MultiLaurent::qInteger(l, i);
  for (int s = 0; s < l; ++s)
    for (int t = s + 1; t < l; ++t)
      for (int k = -n + 1; k < n; ++k) P *= MultiLaurent::binomial(l, k, s, 0, t);
  std::lock_guard lock(mutex);
  cache.emplace(std::make_pair(l, n), P);
  return P;
}

bool isSemisimpleBySchurElements(const CycloSpec& spec, int l, int n) {
  const auto theta = specMapFor(spec, l);
  for (const auto& mp : combinatorics::enumerateMultipartitions(l, n))
    if (exactalg::specialise(schurCancellationFree(mp), theta).isZero()) return false;
  return true;
}

bool isSemisimpleByArikiPoly(const CycloSpec& spec, int l, int n) {
  if (n == 0) return true;
  return !exactalg::specialise(arikiPoly(l, n), specMapFor(spec, l)).isZero();
}

bool isSemisimple(const CycloSpec& spec, int l, int n) {
  const bool verdict = isSemisimpleByArikiPoly(spec, l, n);
#ifdef AKSCHUR_CROSSCHECK
  if (verdict != isSemisimpleBySchurElements(spec, l, n))
    throw std::logic_error("semisimplicity criterion disagrees with the Schur elements");
#endif
  return verdict;
}

bool isDefectZeroBySpecialisation(const Multipartition& mp, int e, const std::vector<long>& v) {
  const auto spec = CycloSpec::rootOfUnity(e, 1, v);
  return !exactalg::specialise(schurCancellationFree(mp), specMapFor(spec, mp.level())).isZero();
}

bool isDefectZeroByHooks(const Multipartition& mp, int e, const std::vector<long>& v) {
  if (e < 2) throw std::domain_error("e must be >= 2");
  if (static_cast<int>(v.size()) != mp.level()) throw std::domain_error("need one charge per component");
  for (int s = 0; s < mp.level(); ++s) {
    for (const Node& x : nodes(mp[s])) {
      for (int t = 0; t < mp.level(); ++t) {
        const long value = genHookLength(mp[s], mp[t], x.row, x.column) + v[static_cast<std::size_t>(s)] -
                           v[static_cast<std::size_t>(t)];
        if (value % e == 0) return false;
      }
    }
  }
  return true;
}

bool isDefectZero(const Multipartition& mp, int e, const std::vector<long>& v) {
  const bool verdict = isDefectZeroByHooks(mp, e, v);
#ifdef AKSCHUR_CROSSCHECK
  if (verdict != isDefectZeroBySpecialisation(mp, e, v))
    throw std::logic_error("defect-0 criterion disagrees with the specialised Schur element");
#endif
  return verdict;
}

exactalg::SpecMap valuationSpecMap(const ChargeData& m) {
  exactalg::SpecMap theta;
  theta.N = m.level();
  theta.q = {0, m.r()};
  for (int j = 0; j < m.level(); ++j) theta.Q.push_back({j, m.charges()[static_cast<std::size_t>(j)]});
  return theta;
}

long aValueViaValuation(const Multipartition& mp, const ChargeData& m) {
  const auto f = exactalg::specialise(schurCancellationFree(mp), valuationSpecMap(m));
  if (f.isZero()) throw std::logic_error("specialised Schur element vanished");
  return -f.valuation();
}

}  // namespace akschur::schur
