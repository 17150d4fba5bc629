#pragma once

// Partitions, multipartitions and the combinatorics that lives on them
// (conjugates, generalised hooks, beta numbers, the d-package rotation).

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <set>
#include <vector>

namespace akschur::combinatorics {

/// An integer partition stored as its positive parts, weakly decreasing.
class Partition {
public:
  Partition() = default;
  /// Throws std::invalid_argument unless `parts` is weakly decreasing and
  /// positive. Trailing zeros are accepted and dropped.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  /// 1-based row access; rows past the length are 0.
  int operator[](int row) const {
    return row >= 1 && row <= length() ? parts_[row - 1] : 0;
  }

  bool operator==(const Partition&) const = default;

private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Canonical order on partitions: larger size first, then parts compared
/// lexicographically with larger parts first. Returns true when `a` is
/// listed before `b`.
bool precedes(const Partition& a, const Partition& b);

/// An ordered l-tuple of partitions.
class Multipartition {
public:
  explicit Multipartition(std::vector<Partition> components);
  /// The l-tuple of empty partitions.
  static Multipartition empty(int l);

  int level() const { return static_cast<int>(components_.size()); }
  int rank() const { return rank_; }
  const std::vector<Partition>& components() const { return components_; }
  const Partition& operator[](int s) const { return components_.at(static_cast<std::size_t>(s)); }
  /// max of the component lengths.
  int length() const;

  bool operator==(const Multipartition&) const = default;

private:
  std::vector<Partition> components_;
  int rank_ = 0;
};

/// Canonical order on multipartitions: lexicographic on components using
/// the partition order above. Returns true when `a` is listed before `b`.
bool precedes(const Multipartition& a, const Multipartition& b);

struct CanonicalOrder {
  bool operator()(const Multipartition& a, const Multipartition& b) const { return precedes(a, b); }
};

using MultipartitionSet = std::set<Multipartition, CanonicalOrder>;

struct Node {
  int component = 0;
  int row = 1;
  int column = 1;
};

Partition conjugate(const Partition& p);

/// sum (i-1) lambda_i, cross-checked against the conjugate form.
long nFunction(const Partition& p);
long nFunctionViaConjugate(const Partition& p);

/// lam_i - i + mu'_j - j + 1. Throws std::domain_error if (i,j) is not a node
/// of `lam`.
int genHookLength(const Partition& lam, const Partition& mu, int row, int column);

/// All nodes (i, j) of the partition in row-major order; component is 0.
std::vector<Node> nodes(const Partition& p);

/// All parts of all components, re-sorted into a partition.
Partition rebar(const Multipartition& mp);

/// Beta numbers lambda^s_i + L - i, i = 1..L, one row per component.
/// Throws std::domain_error when L < mp.length().
std::vector<std::vector<int>> lSymbol(const Multipartition& mp, int L);

/// Rotation of the l = p*d components by one d-package.
/// Throws std::domain_error when l != p*d.
Multipartition sigmaAction(const Multipartition& mp, int p, int d);

struct Orbit {
  std::vector<Multipartition> members;  // canonical order
  int stabilizerSize = 0;
};

Orbit orbitAndStabilizer(const Multipartition& mp, int p, int d);

/// Partitions of n in canonical order.
std::vector<Partition> enumeratePartitions(int n);
/// Pi^l_n in canonical order.
std::vector<Multipartition> enumerateMultipartitions(int l, int n);

}  // namespace akschur::combinatorics
