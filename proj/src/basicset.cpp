#include "akschur/basicset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>

#include "akschur/io.hpp"

namespace akschur::basicset {

using combinatorics::Node;
using combinatorics::Partition;

namespace {

long modulo(long a, long m) {
  const long r = a % m;
  return r < 0 ? r + m : r;
}

// Inverse of a modulo m, gcd(a, m) = 1.
long inverseMod(long a, long m) {
  long oldR = modulo(a, m), r = m, oldS = 1, s = 0;
  while (r != 0) {
    const long q = oldR / r;
    std::tie(oldR, r) = std::make_pair(r, oldR - q * r);
    std::tie(oldS, s) = std::make_pair(s, oldS - q * s);
  }
  return modulo(oldS, m);
}

std::string tupleText(const std::vector<long>& xs) {
  std::string out = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out + ")";
}

std::string classText(const std::vector<int>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out + "}";
}

void requireCyclotomic(const CycloSpec& spec, int l) {
  if (spec.mode() != schur::SpecMode::Cyclotomic)
    throw std::domain_error("basic sets need a cyclotomic specialisation");
  if (static_cast<int>(spec.charges().size()) != l)
    throw std::domain_error("expected " + std::to_string(l) + " charges, got " +
                            std::to_string(spec.charges().size()));
}

struct Signed {
  long gamma;
  int component;
  bool addable;
  Node node;
};

// Addable and removable nodes of residue t.
std::vector<Signed> signature(const Multipartition& mp, int t, const UglovCharge& charge) {
  std::vector<Signed> out;
  for (int c = 0; c < mp.level(); ++c) {
    const Partition& lam = mp[c];
    const long sc = charge.s[static_cast<std::size_t>(c)];
    for (int i = 1; i <= lam.length() + 1; ++i) {
      if (i == 1 || lam[i] < lam[i - 1]) {
        const long gamma = lam[i] + 1 - i + sc;
        if (modulo(gamma, charge.ePrime) == t) out.push_back({gamma, c, true, {c, i, lam[i] + 1}});
      }
      if (lam[i] > 0 && lam[i] > lam[i + 1]) {
        const long gamma = lam[i] - i + sc;
        if (modulo(gamma, charge.ePrime) == t) out.push_back({gamma, c, false, {c, i, lam[i]}});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Signed& a, const Signed& b) {
    if (a.gamma != b.gamma) return a.gamma > b.gamma;
    return a.component < b.component;
  });
  return out;
}

Multipartition addNode(const Multipartition& mp, const Node& x) {
  std::vector<Partition> comps = mp.components();
  std::vector<int> parts = comps[static_cast<std::size_t>(x.component)].parts();
  if (x.row > static_cast<int>(parts.size()))
    parts.push_back(1);
  else
    ++parts[static_cast<std::size_t>(x.row - 1)];
  comps[static_cast<std::size_t>(x.component)] = Partition(std::move(parts));
  return Multipartition(std::move(comps));
}

bool trivialComponentAlgebraSemisimple(int lc, int nc) {
  // All parameters specialise to 1; evaluate P there.
  mpz_class value = 0;
  const auto P = schur::arikiPoly(lc, nc);
  for (const auto& [exponent, c] : P.terms()) value += c;
  return sgn(value) != 0;
}

MultipartitionSet allMultipartitions(int l, int n) {
  const auto all = combinatorics::enumerateMultipartitions(l, n);
  return {all.begin(), all.end()};
}

void compositions(int n, int parts, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  if (parts == 1) {
    prefix.push_back(n);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int first = 0; first <= n; ++first) {
    prefix.push_back(first);
    compositions(n - first, parts - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

DMPartition dmPartition(const CycloSpec& spec, int l, int n) {
  requireCyclotomic(spec, l);
  const long e = spec.e(), k = spec.k(), r = spec.r(), M = static_cast<long>(l) * e;
  const auto& rj = spec.charges();

  std::vector<int> parent(static_cast<std::size_t>(l));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  for (int i = 0; i < l; ++i) {
    for (int j = i + 1; j < l; ++j) {
      for (long d = -n + 1; d < n; ++d) {
        const long lhs = (i - j) * e + k * l * (rj[static_cast<std::size_t>(i)] - rj[static_cast<std::size_t>(j)] - r * d);
        if (modulo(lhs, M) == 0) {
          const int a = find(i), b = find(j);
          parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
          break;
        }
      }
    }
  }

  std::map<int, std::vector<int>> byRoot;
  for (int i = 0; i < l; ++i) byRoot[find(i)].push_back(i);
  DMPartition out;
  for (auto& [root, members] : byRoot) out.classes.push_back(members);
  std::sort(out.classes.begin(), out.classes.end());
  for (const auto& cls : out.classes) {
    std::vector<mpq_class> m;
    for (int i : cls) {
      mpq_class x(rj[static_cast<std::size_t>(i)], r);
      x.canonicalize();
      m.push_back(x);
    }
    out.residuals.push_back(std::move(m));
  }
  return out;
}

UglovCharge chargeFor(const DMPartition& dm, int classIndex, const CycloSpec& spec) {
  if (classIndex < 0 || classIndex >= static_cast<int>(dm.classes.size()))
    throw std::out_of_range("class index out of range");
  const auto& cls = dm.classes[static_cast<std::size_t>(classIndex)];
  if (cls.empty()) throw std::logic_error("empty class");
  int l = 0;
  for (const auto& c : dm.classes) l += static_cast<int>(c.size());
  requireCyclotomic(spec, l);

  const long e = spec.e(), k = spec.k(), r = spec.r(), M = static_cast<long>(l) * e;
  const long A = k * l * r;
  const long g = std::gcd(A, M);
  const auto& rj = spec.charges();

  UglovCharge out;
  out.ePrime = static_cast<int>(e / std::gcd(e, r));
  out.modulus = M / g;
  const long i1 = cls.front();
  for (int i : cls) {
    const long B = (i - i1) * e + k * l * (rj[static_cast<std::size_t>(i)] - rj[static_cast<std::size_t>(i1)]);
    if (modulo(B, g) != 0)
      throw std::logic_error("no charge solves the congruence for " + std::to_string(i) + " in class " +
                             classText(cls));
    long sj = B / A;
    if (B % A != 0) {
      const long s0 = modulo((B / g) * inverseMod(A / g, out.modulus), out.modulus);
      sj = (out.modulus - s0 < s0) ? s0 - out.modulus : s0;
    }
    out.s.push_back(sj);
    if (A * sj != B) {
      out.exactRelation = false;
      out.diagnostics.push_back("class " + classText(cls) + ": s for " + std::to_string(i) + " solves " +
                                std::to_string(A) + "*s = " + std::to_string(B) + " only modulo " +
                                std::to_string(M));
    }
  }
  return out;
}

bool goodNode(const Multipartition& mp, int t, const UglovCharge& charge, Node& out) {
  if (static_cast<int>(charge.s.size()) != mp.level())
    throw std::domain_error("charge length differs from the level");
  std::vector<const Signed*> stack;
  const auto word = signature(mp, t, charge);
  for (const auto& x : word) {
    if (!x.addable && !stack.empty() && stack.back()->addable)
      stack.pop_back();
    else
      stack.push_back(&x);
  }
  for (const auto* x : stack) {
    if (x->addable) {
      out = x->node;
      return true;
    }
  }
  return false;
}

bool applyCrystal(const Multipartition& mp, int t, const UglovCharge& charge, Multipartition& out) {
  Node x;
  if (!goodNode(mp, t, charge, x)) return false;
  out = addNode(mp, x);
  return true;
}

MultipartitionSet uglovMultipartitions(int lc, int nc, const UglovCharge& charge) {
  if (lc < 1 || nc < 0) throw std::domain_error("need lc >= 1 and nc >= 0");
  if (static_cast<int>(charge.s.size()) != lc) throw std::domain_error("charge length differs from lc");
  if (nc == 0) return {Multipartition::empty(lc)};
  if (charge.ePrime == 1) {
    if (trivialComponentAlgebraSemisimple(lc, nc)) return allMultipartitions(lc, nc);
    throw std::domain_error("e' = 1 and the component algebra of level " + std::to_string(lc) + " and rank " +
                            std::to_string(nc) + " is not semisimple");
  }
  MultipartitionSet frontier{Multipartition::empty(lc)};
  for (int step = 0; step < nc; ++step) {
    MultipartitionSet next;
    for (const auto& mp : frontier) {
      for (int t = 0; t < charge.ePrime; ++t) {
        Multipartition grown = mp;
        if (applyCrystal(mp, t, charge, grown)) next.insert(std::move(grown));
      }
    }
    frontier = std::move(next);
  }
  return frontier;
}

BasicSet assembleBasicSet(const CycloSpec& spec, int l, int n) {
  requireCyclotomic(spec, l);
  if (n < 0) throw std::domain_error("n must be >= 0");
  BasicSet out{{}, spec, l, n, {}, {}, false, {}};
  if (n == 0) {
    out.semisimple = true;
    out.elements.insert(Multipartition::empty(l));
    return out;
  }
  out.dm = dmPartition(spec, l, n);
  for (int c = 0; c < static_cast<int>(out.dm.classes.size()); ++c) {
    out.charges.push_back(chargeFor(out.dm, c, spec));
    const auto& ch = out.charges.back();
    out.diagnostics.push_back("class " + classText(out.dm.classes[static_cast<std::size_t>(c)]) + ": e' = " +
                              std::to_string(ch.ePrime) + ", s = " + tupleText(ch.s) + " modulo " +
                              std::to_string(ch.modulus));
    for (const auto& d : ch.diagnostics) out.diagnostics.push_back(d);
  }
  out.semisimple = schur::isSemisimple(spec, l, n);
  if (out.semisimple) {
    out.elements = allMultipartitions(l, n);
    return out;
  }

  const int p = static_cast<int>(out.dm.classes.size());
  std::map<std::pair<int, int>, std::vector<Multipartition>> phi;
  auto uglov = [&](int c, int nc) -> const std::vector<Multipartition>& {
    auto it = phi.find({c, nc});
    if (it == phi.end()) {
      const int lc = static_cast<int>(out.dm.classes[static_cast<std::size_t>(c)].size());
      const auto set = uglovMultipartitions(lc, nc, out.charges[static_cast<std::size_t>(c)]);
      it = phi.emplace(std::make_pair(c, nc), std::vector<Multipartition>(set.begin(), set.end())).first;
    }
    return it->second;
  };

  std::vector<std::vector<int>> comps;
  std::vector<int> prefix;
  compositions(n, p, prefix, comps);
  for (const auto& ns : comps) {
    std::vector<const std::vector<Multipartition>*> factors;
    bool empty = false;
    for (int c = 0; c < p; ++c) {
      factors.push_back(&uglov(c, ns[static_cast<std::size_t>(c)]));
      empty = empty || factors.back()->empty();
    }
    if (empty) continue;
    std::vector<std::size_t> index(static_cast<std::size_t>(p), 0);
    while (true) {
      std::vector<Partition> assembled(static_cast<std::size_t>(l));
      for (int c = 0; c < p; ++c) {
        const auto& piece = (*factors[static_cast<std::size_t>(c)])[index[static_cast<std::size_t>(c)]];
        const auto& cls = out.dm.classes[static_cast<std::size_t>(c)];
        for (std::size_t j = 0; j < cls.size(); ++j)
          assembled[static_cast<std::size_t>(cls[j])] = piece[static_cast<int>(j)];
      }
      out.elements.emplace(std::move(assembled));
      int c = p - 1;
      while (c >= 0 && ++index[static_cast<std::size_t>(c)] == factors[static_cast<std::size_t>(c)]->size()) {
        index[static_cast<std::size_t>(c)] = 0;
        --c;
      }
      if (c < 0) break;
    }
  }
  return out;
}

CycloSpec ambientSpec(const CycloSpec& spec, int l, int p) {
  if (spec.mode() != schur::SpecMode::Cyclotomic)
    throw std::domain_error("basic sets need a cyclotomic specialisation");
  if (p < 1 || l < 1 || l % p != 0) throw std::domain_error("p must divide l");
  const int d = l / p;
  const auto& given = spec.charges();
  std::vector<long> charges;
  if (static_cast<int>(given.size()) == d) {
    for (int b = 0; b < p; ++b) charges.insert(charges.end(), given.begin(), given.end());
  } else if (static_cast<int>(given.size()) == l) {
    for (int j = 0; j < l; ++j)
      if (given[static_cast<std::size_t>(j)] != given[static_cast<std::size_t>(j % d)])
        throw std::domain_error("charges must repeat a d-tuple p times");
    charges = given;
  } else {
    throw std::domain_error("expected " + std::to_string(d) + " or " + std::to_string(l) + " charges, got " +
                            std::to_string(given.size()));
  }
  return CycloSpec::cyclotomic(spec.e(), spec.k(), static_cast<long>(p) * spec.r(), std::move(charges));
}

GPNBasicSet assembleBasicSetGPN(const CycloSpec& spec, int l, int p, int n) {
  const CycloSpec ambient = ambientSpec(spec, l, p);
  if (!(n > 2 || (n == 2 && p % 2 == 1))) throw std::domain_error("need n > 2, or n = 2 with p odd");
  const int d = l / p;

  GPNBasicSet out{assembleBasicSet(ambient, l, n), p, {}};
  const auto& B = out.ambient.elements;
  bool exact = true;
  for (const auto& c : out.ambient.charges) exact = exact && c.exactRelation;
  for (const auto& mp : B)
    if (!B.count(combinatorics::sigmaAction(mp, p, d)))
      throw std::logic_error("basic set is not sigma-stable at " + io::toLiteral(mp) +
                             (exact ? std::string() : " (the charge relation holds only modulo l e)"));

  MultipartitionSet seen;
  for (const auto& mp : B) {
    if (seen.count(mp)) continue;
    const auto orbit = combinatorics::orbitAndStabilizer(mp, p, d);
    seen.insert(orbit.members.begin(), orbit.members.end());
    OrbitDatum datum{orbit.members.front(), static_cast<int>(orbit.members.size()), orbit.stabilizerSize, {}};
    const std::string literal = io::toLiteral(datum.representative);
    for (int i = 0; i < datum.stabilizerSize; ++i)
      datum.labels.push_back("E^{" + literal + "," + std::to_string(i) + "}");
    out.orbits.push_back(std::move(datum));
  }
  return out;
}

}  // namespace akschur::basicset
