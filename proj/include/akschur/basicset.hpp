#pragma once

// Canonical basic sets: Dipper-Mathas reduction, Uglov multipartitions and
// the sigma-orbit labelling for G(l,p,n).

#include <gmpxx.h>

#include <string>
#include <vector>

#include "akschur/partition.hpp"
#include "akschur/schur.hpp"

namespace akschur::basicset {

using combinatorics::Multipartition;
using combinatorics::MultipartitionSet;
using schur::CycloSpec;

struct DMPartition {
  /// Each class sorted ascending; classes ordered by least element.
  std::vector<std::vector<int>> classes;
  /// m restricted to each class, m_j = r_j / r.
  std::vector<std::vector<mpq_class>> residuals;
};

struct UglovCharge {
  int ePrime = 1;
  std::vector<long> s;
  /// s_j is determined modulo this.
  long modulus = 1;
  /// Whether k l r s_j equals (i_j - i_1) e + k l (r_{i_j} - r_{i_1}) on the
  /// nose for every j, not only modulo l e.
  bool exactRelation = true;
  std::vector<std::string> diagnostics;
};

struct BasicSet {
  MultipartitionSet elements;
  CycloSpec params;
  int l = 0;
  int n = 0;
  DMPartition dm;
  std::vector<UglovCharge> charges;
  bool semisimple = false;
  std::vector<std::string> diagnostics;
};

struct OrbitDatum {
  Multipartition representative;
  int orbitSize = 0;
  int stabilizerSize = 0;
  /// "E^{[[1],[1],[]],0}", ..., one per stabilizer element.
  std::vector<std::string> labels;
};

struct GPNBasicSet {
  BasicSet ambient;
  int p = 1;
  std::vector<OrbitDatum> orbits;
};

/// Connected components of the graph joining i and j when some -n < d < n
/// has (i-j) e + k l (r_i - r_j - r d) = 0 mod l e. Needs cyclotomic mode.
DMPartition dmPartition(const CycloSpec& spec, int l, int n);

/// Charge vector of one class. Throws std::logic_error if a congruence has no
/// solution and std::out_of_range for a bad class index.
UglovCharge chargeFor(const DMPartition& dm, int classIndex, const CycloSpec& spec);

/// The good node for f_t, or false when f_t(mp) is zero.
bool goodNode(const Multipartition& mp, int t, const UglovCharge& charge, combinatorics::Node& out);
/// f_t applied to mp, or false when undefined.
bool applyCrystal(const Multipartition& mp, int t, const UglovCharge& charge, Multipartition& out);

/// The lc-multipartitions of nc reached from the empty one by crystal
/// operators. For ePrime = 1 this is all of Pi^lc_nc when the component
/// algebra is semisimple; otherwise std::domain_error.
MultipartitionSet uglovMultipartitions(int lc, int nc, const UglovCharge& charge);

BasicSet assembleBasicSet(const CycloSpec& spec, int l, int n);

/// The G(l,1,n) parameters underlying G(l,p,n) data: r becomes p r and the
/// charges are a d-tuple repeated p times (an l-tuple must already be
/// p-periodic). Throws std::domain_error.
CycloSpec ambientSpec(const CycloSpec& spec, int l, int p);

/// Throws std::domain_error naming the violated precondition, and
/// std::logic_error if the ambient basic set is not sigma-stable.
GPNBasicSet assembleBasicSetGPN(const CycloSpec& spec, int l, int p, int n);

}  // namespace akschur::basicset
