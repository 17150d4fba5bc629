#include "akschur/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace akschur::combinatorics {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool precedes(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) return a.size() > b.size();
  return std::lexicographical_compare(b.parts().begin(), b.parts().end(),
                                      a.parts().begin(), a.parts().end());
}

Multipartition::Multipartition(std::vector<Partition> components)
    : components_(std::move(components)) {
  if (components_.empty())
    throw std::invalid_argument("a multipartition needs at least one component");
  for (const auto& c : components_) rank_ += c.size();
}

Multipartition Multipartition::empty(int l) {
  return Multipartition(std::vector<Partition>(static_cast<std::size_t>(l)));
}

int Multipartition::length() const {
  int len = 0;
  for (const auto& c : components_) len = std::max(len, c.length());
  return len;
}

bool precedes(const Multipartition& a, const Multipartition& b) {
  const auto& ca = a.components();
  const auto& cb = b.components();
  const std::size_t common = std::min(ca.size(), cb.size());
  for (std::size_t s = 0; s < common; ++s) {
    if (precedes(ca[s], cb[s])) return true;
    if (precedes(cb[s], ca[s])) return false;
  }
  return ca.size() < cb.size();
}

Partition conjugate(const Partition& p) {
  std::vector<int> conj;
  if (p.empty()) return Partition();
  conj.reserve(static_cast<std::size_t>(p[1]));
  for (int k = 1; k <= p[1]; ++k) {
    int count = 0;
    for (int part : p.parts()) count += part >= k ? 1 : 0;
    conj.push_back(count);
  }
  return Partition(std::move(conj));
}

long nFunction(const Partition& p) {
  long total = 0;
  for (int i = 1; i <= p.length(); ++i) total += static_cast<long>(i - 1) * p[i];
  return total;
}

long nFunctionViaConjugate(const Partition& p) {
  long twice = 0;
  const Partition conj = conjugate(p);
  for (int c : conj.parts()) twice += static_cast<long>(c - 1) * c;
  return twice / 2;
}

int genHookLength(const Partition& lam, const Partition& mu, int row, int column) {
  if (row < 1 || column < 1 || column > lam[row])
    throw std::domain_error("node (" + std::to_string(row) + "," + std::to_string(column) +
                            ") is not in the diagram");
  const Partition muConj = conjugate(mu);
  return lam[row] - row + muConj[column] - column + 1;
}

std::vector<Node> nodes(const Partition& p) {
  std::vector<Node> out;
  out.reserve(static_cast<std::size_t>(p.size()));
  for (int i = 1; i <= p.length(); ++i)
    for (int j = 1; j <= p[i]; ++j) out.push_back(Node{0, i, j});
  return out;
}

Partition rebar(const Multipartition& mp) {
  std::vector<int> all;
  for (const auto& c : mp.components())
    all.insert(all.end(), c.parts().begin(), c.parts().end());
  std::sort(all.begin(), all.end(), std::greater<>());
  return Partition(std::move(all));
}

std::vector<std::vector<int>> lSymbol(const Multipartition& mp, int L) {
  if (L < mp.length())
    throw std::domain_error("symbol size L=" + std::to_string(L) +
                            " is smaller than the length " + std::to_string(mp.length()));
  std::vector<std::vector<int>> symbol;
  for (const auto& c : mp.components()) {
    std::vector<int> row;
    for (int i = 1; i <= L; ++i) row.push_back(c[i] + L - i);
    symbol.push_back(std::move(row));
  }
  return symbol;
}

Multipartition sigmaAction(const Multipartition& mp, int p, int d) {
  if (p < 1 || d < 1 || mp.level() != p * d)
    throw std::domain_error("sigma needs l = p*d (l=" + std::to_string(mp.level()) +
                            ", p=" + std::to_string(p) + ", d=" + std::to_string(d) + ")");
  std::vector<Partition> rotated(mp.components());
  std::rotate(rotated.begin(), rotated.end() - d, rotated.end());
  return Multipartition(std::move(rotated));
}

Orbit orbitAndStabilizer(const Multipartition& mp, int p, int d) {
  MultipartitionSet seen;
  Multipartition current = mp;
  for (int i = 0; i < p; ++i) {
    seen.insert(current);
    current = sigmaAction(current, p, d);
  }
  if (!(current == mp)) throw std::logic_error("sigma^p is not the identity");
  const int orbitSize = static_cast<int>(seen.size());
  if (p % orbitSize != 0) throw std::logic_error("orbit size does not divide p");
  return Orbit{{seen.begin(), seen.end()}, p / orbitSize};
}

namespace {

void partitionsBounded(int n, int maxPart, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(n, maxPart); part >= 1; --part) {
    prefix.push_back(part);
    partitionsBounded(n - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumeratePartitions(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> prefix;
  partitionsBounded(n, n, prefix, out);
  return out;
}

std::vector<Multipartition> enumerateMultipartitions(int l, int n) {
  if (l < 1 || n < 0) throw std::domain_error("need l >= 1 and n >= 0");
  std::vector<std::vector<Partition>> byRank;
  for (int k = 0; k <= n; ++k) byRank.push_back(enumeratePartitions(k));

  std::vector<Multipartition> out;
  std::vector<Partition> current;
  // Components are filled left to right, larger first component sizes first,
  // which already yields canonical order.
  auto fill = [&](auto&& self, int remaining) -> void {
    if (static_cast<int>(current.size()) == l - 1) {
      for (const auto& last : byRank[static_cast<std::size_t>(remaining)]) {
        current.push_back(last);
        out.emplace_back(current);
        current.pop_back();
      }
      return;
    }
    for (int k = remaining; k >= 0; --k) {
      for (const auto& part : byRank[static_cast<std::size_t>(k)]) {
        current.push_back(part);
        self(self, remaining - k);
        current.pop_back();
      }
    }
  };
  fill(fill, n);
  return out;
}

}  // namespace akschur::combinatorics
