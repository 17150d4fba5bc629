#pragma once

// Schur elements of Ariki-Koike algebras and the criteria built on them.

#include <vector>

#include "akschur/cyclotomic.hpp"
#include "akschur/laurent.hpp"
#include "akschur/partition.hpp"
#include "akschur/symbol.hpp"

namespace akschur::schur {

using combinatorics::ChargeData;
using combinatorics::Multipartition;
using combinatorics::Partition;
using exactalg::MultiLaurent;

enum class SpecMode {
  /// q -> eta^r, Q_j -> eta_l^j eta^{r_j}: a cyclotomic algebra specialised
  /// at eta = exp(2 pi i k / e).
  Cyclotomic,
  /// q -> eta, Q_j -> eta^{v_j}.
  RootOfUnity,
};

/// Specialisation parameters. Construction validates e > 1, r >= 1 and
/// gcd(k, e) = 1 (std::domain_error naming the violated condition).
class CycloSpec {
public:
  static CycloSpec cyclotomic(int e, int k, long r, std::vector<long> charges);
  static CycloSpec rootOfUnity(int e, int k, std::vector<long> v);

  int e() const { return e_; }
  int k() const { return k_; }
  long r() const { return r_; }
  const std::vector<long>& charges() const { return charges_; }
  SpecMode mode() const { return mode_; }

private:
  CycloSpec(int e, int k, long r, std::vector<long> charges, SpecMode mode);

  int e_;
  int k_;
  long r_;
  std::vector<long> charges_;
  SpecMode mode_;
};

/// The homomorphism theta for `spec` on l Q-variables. Conductor lcm(l, e) in
/// cyclotomic mode, e in root-of-unity mode. All u-exponents are zero.
exactalg::SpecMap specMapFor(const CycloSpec& spec, int l);

/// Pure product over nodes of [hook]_q and the cross binomials; no division.
MultiLaurent schurCancellationFree(const Multipartition& mp);

/// Mathas' expression with every X_st realised through exact division.
MultiLaurent schurMathas(const Multipartition& mp);

/// The beta-number expression for an L-symbol, L >= length(mp).
MultiLaurent schurGIM(const Multipartition& mp, int L);

/// X_st from Mathas' recipe (numerator product, then one exact division per
/// denominator binomial).
MultiLaurent xstMathas(const Multipartition& mp, int s, int t);
/// X_st from the closed product over generalised hooks.
MultiLaurent xstClosedForm(const Multipartition& mp, int s, int t);
/// Both routes; throws std::logic_error if they differ and std::out_of_range
/// unless 0 <= s < t < l.
MultiLaurent xstFactor(const Multipartition& mp, int s, int t);

/// The rim-content identity relating lambda and lambda', checked after
/// clearing denominators. Throws std::domain_error unless 1 <= k <= lambda_1.
bool conjContentIdentity(const Partition& p, int k);

/// alpha(lambda') + sum_{s<t} sum_i lambda^{s'}_i lambda^{t'}_i == n(rebar).
bool alphaIdentity(const Multipartition& mp);

/// prod_{i<=n} [i]_q * prod_{s<t} prod_{-n<k<n} (q^k Q_s - Q_t).
MultiLaurent arikiPoly(int l, int n);

/// theta(P) != 0. With AKSCHUR_CROSSCHECK defined, also compares against
/// the Schur-element route and throws std::logic_error on disagreement.
bool isSemisimple(const CycloSpec& spec, int l, int n);
bool isSemisimpleByArikiPoly(const CycloSpec& spec, int l, int n);
/// Reference route: theta(s_lambda) != 0 for every lambda in Pi^l_n.
bool isSemisimpleBySchurElements(const CycloSpec& spec, int l, int n);

/// Divisibility test on generalised hooks: e divides none of
/// h^{s,t}_{i,j} + v_s - v_t. Cross-checked like isSemisimple.
bool isDefectZero(const Multipartition& mp, int e, const std::vector<long>& v);
bool isDefectZeroByHooks(const Multipartition& mp, int e, const std::vector<long>& v);
/// Reference route: theta(s_lambda) != 0 with q -> eta, Q_j -> eta^{v_j}.
bool isDefectZeroBySpecialisation(const Multipartition& mp, int e, const std::vector<long>& v);

/// theta(q) = u^r, theta(Q_j) = zeta_l^j u^{r_j}.
exactalg::SpecMap valuationSpecMap(const ChargeData& m);
/// Minus the u-valuation of theta(s_lambda).
long aValueViaValuation(const Multipartition& mp, const ChargeData& m);

}  // namespace akschur::schur
