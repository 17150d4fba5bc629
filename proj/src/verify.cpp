#include "akschur/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "akschur/basicset.hpp"
#include "akschur/cyclotomic.hpp"
#include "akschur/io.hpp"
#include "akschur/laurent.hpp"
#include "akschur/partition.hpp"
#include "akschur/schur.hpp"
#include "akschur/symbol.hpp"

namespace akschur::verify {

using combinatorics::ChargeData;
using combinatorics::Multipartition;
using combinatorics::MultipartitionSet;
using combinatorics::Partition;
using exactalg::MultiLaurent;
using schur::CycloSpec;

SuiteReport runItems(const std::string& name, std::size_t count, unsigned jobs,
                     const std::function<ItemResult(std::size_t)>& work) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<ItemResult> results(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        results[i] = work(i);
      } catch (const std::exception& ex) {
        results[i].checks += 1;
        results[i].counterexample = std::string("exception: ") + ex.what();
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  SuiteReport report;
  report.name = name;
  for (const auto& r : results) {
    report.checks += r.checks;
    if (!r.counterexample.empty() && report.passed) {
      report.passed = false;
      report.firstCounterexample = r.counterexample;
    }
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

namespace {

using Rng = std::mt19937_64;

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

ChargeData randomChargeData(Rng& rng, int l) {
  const long r = uniform(rng, 1, 6);
  std::vector<long> charges;
  for (int j = 0; j < l; ++j) charges.push_back(uniform(rng, -6, 6));
  return ChargeData(r, std::move(charges));
}

std::string chargeText(const ChargeData& m) {
  std::string out = "r=" + std::to_string(m.r()) + " charges=";
  for (std::size_t j = 0; j < m.charges().size(); ++j) out += (j ? "," : "") + std::to_string(m.charges()[j]);
  return out;
}

std::string listText(const std::vector<long>& v) {
  std::string out;
  for (std::size_t j = 0; j < v.size(); ++j) out += (j ? "," : "") + std::to_string(v[j]);
  return out;
}

int randomUnit(Rng& rng, int e) {
  while (true) {
    const int k = static_cast<int>(uniform(rng, 1, e - 1));
    if (std::gcd(k, e) == 1) return k;
  }
}

struct Instance {
  int l;
  int n;
  Multipartition mp;
};

std::vector<Instance> allInstances(int maxL, int maxN) {
  std::vector<Instance> out;
  for (int l = 1; l <= maxL; ++l)
    for (int n = 0; n <= maxN; ++n)
      for (auto& mp : combinatorics::enumerateMultipartitions(l, n)) out.push_back({l, n, std::move(mp)});
  return out;
}

SuiteReport merge(const std::string& name, const std::vector<SuiteReport>& parts) {
  SuiteReport out;
  out.name = name;
  for (const auto& p : parts) {
    out.checks += p.checks;
    out.seconds += p.seconds;
    if (!p.passed && out.passed) {
      out.passed = false;
      out.firstCounterexample = p.name + ": " + p.firstCounterexample;
    }
  }
  return out;
}

// Partial sums of the decreasing rearrangements, computed directly.
bool bruteDominates(std::vector<mpq_class> x, std::vector<mpq_class> y) {
  if (x.size() != y.size()) return false;
  std::sort(x.begin(), x.end(), std::greater<>());
  std::sort(y.begin(), y.end(), std::greater<>());
  mpq_class sx = 0, sy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    if (sx < sy) return false;
  }
  return sx == sy;
}

std::string rationalsText(const std::vector<mpq_class>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + io::renderRational(xs[i]);
  return out + "}";
}

MultiLaurent randomLaurent(Rng& rng, int l) {
  MultiLaurent f(l);
  const long terms = uniform(rng, 0, 4);
  for (long t = 0; t < terms; ++t) {
    exactalg::Exponent e;
    for (int v = 0; v <= l; ++v) e.push_back(static_cast<int>(uniform(rng, -2, 2)));
    f.addTerm(e, mpz_class(uniform(rng, -5, 5)));
  }
  return f;
}

}  // namespace

SuiteReport lemmas(const Options& opt) {
  struct Work {
    Partition p;
    Multipartition mp;
    bool isMulti;
  };
  std::vector<Work> items;
  for (int n = 0; n <= opt.maxN; ++n)
    for (auto& p : combinatorics::enumeratePartitions(n)) items.push_back({p, Multipartition::empty(1), false});
  for (int n = 0; n <= opt.maxN; ++n)
    for (auto& mp : combinatorics::enumerateMultipartitions(3, n)) items.push_back({Partition{}, mp, true});

  return runItems("lemmas", items.size(), opt.jobs, [&](std::size_t i) {
    ItemResult r;
    const Work& w = items[i];
    if (w.isMulti) {
      ++r.checks;
      if (!schur::alphaIdentity(w.mp)) r.counterexample = "alpha identity fails at " + io::toLiteral(w.mp);
      return r;
    }
    const std::string lit = io::toLiteral(Multipartition({w.p}));
    ++r.checks;
    if (combinatorics::nFunction(w.p) != combinatorics::nFunctionViaConjugate(w.p)) {
      r.counterexample = "n(lambda) differs from its conjugate form at " + lit;
      return r;
    }
    for (int k = 1; k <= w.p[1]; ++k) {
      ++r.checks;
      if (!schur::conjContentIdentity(w.p, k)) {
        r.counterexample = "rim-content identity fails at " + lit + " k=" + std::to_string(k);
        return r;
      }
    }
    return r;
  });
}

SuiteReport formulas(const Options& opt) {
  const auto items = allInstances(opt.maxL, opt.maxN);
  return runItems("formulas", items.size(), opt.jobs, [&](std::size_t i) {
    ItemResult r;
    const Multipartition& mp = items[i].mp;
    const std::string lit = io::toLiteral(mp);
    const MultiLaurent cancel = schur::schurCancellationFree(mp);
    ++r.checks;
    if (!(schur::schurMathas(mp) == cancel)) {
      r.counterexample = "Mathas form differs at " + lit;
      return r;
    }
    const int len = mp.length();
    for (int L : {len, len + 1, len + 3}) {
      ++r.checks;
      if (!(schur::schurGIM(mp, L) == cancel)) {
        r.counterexample = "beta-number form differs at " + lit + " L=" + std::to_string(L);
        return r;
      }
    }
    for (int s = 0; s < mp.level(); ++s)
      for (int t = s + 1; t < mp.level(); ++t) {
        ++r.checks;
        schur::xstFactor(mp, s, t);
      }
    if (mp.level() == 1) {
      // q^{-n(lambda)} prod_hooks (q^h - 1) / (q - 1)^n
      const Partition& p = mp[0];
      MultiLaurent expected = MultiLaurent::q(1, static_cast<int>(-combinatorics::nFunction(p)));
      for (const auto& x : combinatorics::nodes(p))
        expected *= MultiLaurent::q(1, combinatorics::genHookLength(p, p, x.row, x.column)) - MultiLaurent::constant(1, 1);
      const MultiLaurent qm1 = MultiLaurent::q(1) - MultiLaurent::constant(1, 1);
      for (int j = 0; j < p.size(); ++j) expected = exactalg::exactDivide(expected, qm1);
      ++r.checks;
      if (!(expected == cancel)) r.counterexample = "hook product differs at " + lit;
    }
    return r;
  });
}

SuiteReport avalues(const Options& opt) {
  Rng rng(opt.seed ^ 0xa11);
  struct Work {
    Multipartition mp;
    ChargeData m;
  };
  std::vector<Work> items;
  for (int l = 1; l <= opt.maxL; ++l) {
    std::vector<ChargeData> data;
    for (int c = 0; c < 10; ++c) data.push_back(randomChargeData(rng, l));
    for (int n = 0; n <= opt.maxN; ++n)
      for (const auto& mp : combinatorics::enumerateMultipartitions(l, n))
        for (const auto& m : data) items.push_back({mp, m});
  }
  // p-periodic charges for the sigma check: l = p d.
  struct SigmaWork {
    Multipartition mp;
    ChargeData m;
    int p;
  };
  std::vector<SigmaWork> sigmaItems;
  for (int l = 2; l <= opt.maxL; ++l) {
    for (int p = 2; p <= l; ++p) {
      if (l % p != 0) continue;
      const int d = l / p;
      for (int c = 0; c < 5; ++c) {
        const long r = uniform(rng, 1, 6);
        std::vector<long> block;
        for (int j = 0; j < d; ++j) block.push_back(uniform(rng, -6, 6));
        std::vector<long> charges;
        for (int b = 0; b < p; ++b) charges.insert(charges.end(), block.begin(), block.end());
        const ChargeData m(r, charges);
        for (int n = 0; n <= opt.maxN; ++n)
          for (const auto& mp : combinatorics::enumerateMultipartitions(l, n)) sigmaItems.push_back({mp, m, p});
      }
    }
  }

  const std::size_t total = items.size() + sigmaItems.size();
  return runItems("avalues", total, opt.jobs, [&](std::size_t i) {
    ItemResult r;
    if (i < items.size()) {
      const auto& [mp, m] = items[i];
      const mpq_class comb = combinatorics::aValueCombinatorial(mp, m);
      const mpq_class hooks = combinatorics::aValueHookFormula(mp, m);
      const long val = schur::aValueViaValuation(mp, m);
      r.checks += 2;
      if (comb != hooks || comb != val) {
        r.counterexample = "a-values differ at " + io::toLiteral(mp) + " " + chargeText(m) + ": " +
                           io::renderRational(comb) + ", " + io::renderRational(hooks) + ", " + std::to_string(val);
        return r;
      }
      const int size = combinatorics::autoSymbolSize(mp, m);
      ++r.checks;
      if (combinatorics::aValueCombinatorial(mp, m, size + 1) != comb)
        r.counterexample = "a-value moves with the symbol size at " + io::toLiteral(mp) + " " + chargeText(m);
      return r;
    }
    const auto& w = sigmaItems[i - items.size()];
    const Multipartition moved = combinatorics::sigmaAction(w.mp, w.p, w.mp.level() / w.p);
    r.checks += 2;
    if (combinatorics::aValueCombinatorial(moved, w.m) != combinatorics::aValueCombinatorial(w.mp, w.m) ||
        schur::aValueViaValuation(moved, w.m) != schur::aValueViaValuation(w.mp, w.m))
      r.counterexample = "a-value not sigma-invariant at " + io::toLiteral(w.mp) + " " + chargeText(w.m) +
                         " p=" + std::to_string(w.p);
    return r;
  });
}

namespace {

struct SpecCase {
  CycloSpec spec;
  int l;
};

std::vector<SpecCase> semisimpleGrid(std::uint64_t seed) {
  Rng rng(seed ^ 0x5e);
  std::vector<SpecCase> out;
  const int es[] = {2, 3, 4, 5, 6, 8, 12};
  for (int l = 1; l <= 3; ++l) {
    for (int e : es) {
      for (int draw = 0; draw < 2; ++draw) {
        std::vector<long> charges;
        for (int j = 0; j < l; ++j) charges.push_back(uniform(rng, -6, 6));
        out.push_back({CycloSpec::cyclotomic(e, randomUnit(rng, e), uniform(rng, 1, 6), charges), l});
      }
      std::vector<long> v;
      for (int j = 0; j < l; ++j) v.push_back(uniform(rng, 0, e - 1));
      out.push_back({CycloSpec::rootOfUnity(e, randomUnit(rng, e), v), l});
    }
  }
  // Large e with spread charges, so semisimple verdicts also occur.
  for (int l = 1; l <= 3; ++l) {
    std::vector<long> charges;
    for (int j = 0; j < l; ++j) charges.push_back(3 * j);
    out.push_back({CycloSpec::cyclotomic(11, 1, 1, charges), l});
    out.push_back({CycloSpec::rootOfUnity(12, 5, charges), l});
  }
  return out;
}

std::string specText(const CycloSpec& spec, int l) {
  std::string out = spec.mode() == schur::SpecMode::Cyclotomic ? "cyclotomic" : "root-of-unity";
  out += " l=" + std::to_string(l) + " e=" + std::to_string(spec.e()) + " k=" + std::to_string(spec.k());
  if (spec.mode() == schur::SpecMode::Cyclotomic) out += " r=" + std::to_string(spec.r());
  return out + " charges=" + listText(spec.charges());
}

}  // namespace

SuiteReport semisimple(const Options& opt) {
  const auto grid = semisimpleGrid(opt.seed);
  auto report = runItems("semisimple", grid.size(), opt.jobs, [&](std::size_t i) {
    ItemResult r;
    const auto& [spec, l] = grid[i];
    for (int n = 1; n <= 3; ++n) {
      ++r.checks;
      if (schur::isSemisimpleByArikiPoly(spec, l, n) != schur::isSemisimpleBySchurElements(spec, l, n)) {
        r.counterexample = "verdicts differ for " + specText(spec, l) + " n=" + std::to_string(n);
        return r;
      }
    }
    return r;
  });
  return report;
}

SuiteReport defect0(const Options& opt) {
  Rng rng(opt.seed ^ 0xde);
  struct Work {
    Multipartition mp;
    int e;
    std::vector<long> v;
  };
  std::vector<Work> items;
  for (int l = 1; l <= opt.maxL; ++l) {
    for (int e : {2, 3, 4, 6}) {
      for (int draw = 0; draw < 5; ++draw) {
        std::vector<long> v;
        for (int j = 0; j < l; ++j) v.push_back(uniform(rng, -6, 6));
        for (int n = 0; n <= opt.maxN; ++n)
          for (const auto& mp : combinatorics::enumerateMultipartitions(l, n)) items.push_back({mp, e, v});
      }
    }
  }
  return runItems("defect0", items.size(), opt.jobs, [&](std::size_t i) {
    ItemResult r;
    const auto& w = items[i];
    ++r.checks;
    if (schur::isDefectZeroByHooks(w.mp, w.e, w.v) != schur::isDefectZeroBySpecialisation(w.mp, w.e, w.v))
      r.counterexample = "defect-0 verdicts differ at " + io::toLiteral(w.mp) + " e=" + std::to_string(w.e) +
                         " v=" + listText(w.v);
    return r;
  });
}

SuiteReport kappaDominance(const Options& opt) {
  Rng rng(opt.seed ^ 0x4a);
  struct Work {
    int l;
    int n;
    ChargeData m;
  };
  std::vector<Work> items;
  for (int l = 1; l <= opt.maxL; ++l) {
    std::vector<ChargeData> data;
    for (int c = 0; c < 3; ++c) data.push_back(randomChargeData(rng, l));
    for (int n = 1; n <= opt.maxN; ++n)
      for (const auto& m : data) items.push_back({l, n, m});
  }
  auto report = runItems("kappa-dominance", items.size(), opt.jobs, [&](std::size_t i) {
    ItemResult r;
    const auto& w = items[i];
    const auto all = combinatorics::enumerateMultipartitions(w.l, w.n);
    int size = 0;
    for (const auto& mp : all) size = std::max(size, combinatorics::autoSymbolSize(mp, w.m));
    std::vector<combinatorics::KappaSequence> kappas;
    std::vector<mpq_class> a;
    for (const auto& mp : all) {
      kappas.push_back(combinatorics::kappa(mp, w.m, size));
      a.push_back(combinatorics::aValueHookFormula(mp, w.m));
    }
    for (std::size_t x = 0; x < all.size(); ++x) {
      for (std::size_t y = 0; y < all.size(); ++y) {
        if (x == y) continue;
        const auto d = combinatorics::dominates(kappas[x], kappas[y]);
        if (d == combinatorics::Dominance::Incomparable) continue;
        ++r.checks;
        const bool ok = d == combinatorics::Dominance::Strict ? a[x] < a[y] : a[x] == a[y];
        if (!ok) {
          r.counterexample = "kappa of " + io::toLiteral(all[x]) + " dominates that of " + io::toLiteral(all[y]) +
                             " but a-values are " + io::renderRational(a[x]) + ", " + io::renderRational(a[y]) +
                             " (" + chargeText(w.m) + ")";
          return r;
        }
      }
    }
    return r;
  });
  return report;
}

SuiteReport concatenation(const Options& opt) {
  Rng rng(opt.seed ^ 0xc0);
  auto randomRational = [&] { return mpq_class(uniform(rng, -12, 12), static_cast<unsigned long>(uniform(rng, 1, 3))); };
  auto randomMultiset = [&](long size) {
    std::vector<mpq_class> out;
    for (long i = 0; i < size; ++i) {
      mpq_class x = randomRational();
      x.canonicalize();
      out.push_back(x);
    }
    return out;
  };
  // Moving mass from a smaller entry to a larger one gives a dominating multiset.
  auto dominating = [&](std::vector<mpq_class> y) {
    const long moves = uniform(rng, 0, 3);
    for (long t = 0; t < moves && y.size() > 1; ++t) {
      std::size_t i = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(y.size()) - 1));
      std::size_t j = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(y.size()) - 1));
      if (i == j) continue;
      if (y[i] < y[j]) std::swap(i, j);
      mpq_class delta(uniform(rng, 1, 6), 2);
      delta.canonicalize();
      y[i] += delta;
      y[j] -= delta;
    }
    std::shuffle(y.begin(), y.end(), rng);
    return y;
  };

  struct Work {
    std::vector<mpq_class> x, y, x2, y2, u, w;
  };
  std::vector<Work> items;
  for (int i = 0; i < 1000; ++i) {
    Work w;
    w.y = randomMultiset(uniform(rng, 1, 6));
    w.x = dominating(w.y);
    w.y2 = randomMultiset(uniform(rng, 1, 6));
    w.x2 = dominating(w.y2);
    const long size = uniform(rng, 1, 5);
    w.u = randomMultiset(size);
    w.w = randomMultiset(size);
    mpq_class shift = 0;
    for (const auto& v : w.u) shift += v;
    for (const auto& v : w.w) shift -= v;
    w.w.back() += shift;  // equal totals, dominance undecided
    items.push_back(std::move(w));
  }

  return runItems("concatenation", items.size(), opt.jobs, [&](std::size_t i) {
    ItemResult r;
    const auto& w = items[i];
    auto cat = [](std::vector<mpq_class> a, const std::vector<mpq_class>& b) {
      a.insert(a.end(), b.begin(), b.end());
      return a;
    };
    r.checks += 4;
    if (!bruteDominates(w.x, w.y) || !combinatorics::multisetDominates(w.x, w.y)) {
      r.counterexample = "generated pair does not dominate: " + rationalsText(w.x) + " vs " + rationalsText(w.y);
      return r;
    }
    if (!bruteDominates(w.x2, w.y2) || !combinatorics::multisetDominates(w.x2, w.y2)) {
      r.counterexample = "generated pair does not dominate: " + rationalsText(w.x2) + " vs " + rationalsText(w.y2);
      return r;
    }
    const auto cx = cat(w.x, w.x2), cy = cat(w.y, w.y2);
    if (!bruteDominates(cx, cy) || !combinatorics::multisetDominates(cx, cy)) {
      r.counterexample = "concatenation breaks dominance: " + rationalsText(cx) + " vs " + rationalsText(cy);
      return r;
    }
    if (bruteDominates(w.u, w.w) != combinatorics::multisetDominates(w.u, w.w))
      r.counterexample = "dominance test differs from partial sums: " + rationalsText(w.u) + " vs " + rationalsText(w.w);
    return r;
  });
}

SuiteReport exactalgFuzz(const Options& opt) {
  Rng rng(opt.seed ^ 0xf2);
  struct Work {
    MultiLaurent f, g, h;
    exactalg::SpecMap theta;
    int N;
    long k;
  };
  std::vector<Work> items;
  for (int i = 0; i < 1500; ++i) {
    const int l = static_cast<int>(uniform(rng, 1, 3));
    Work w{randomLaurent(rng, l), randomLaurent(rng, l), randomLaurent(rng, l), {}, 0, 0};
    w.N = static_cast<int>(uniform(rng, 1, 12));
    w.theta.N = w.N;
    w.theta.q = {uniform(rng, 0, w.N - 1), uniform(rng, -3, 3)};
    for (int j = 0; j < l; ++j) w.theta.Q.push_back({uniform(rng, 0, w.N - 1), uniform(rng, -3, 3)});
    w.k = uniform(rng, -30, 30);
    items.push_back(std::move(w));
  }

  return runItems("exactalg-fuzz", items.size(), opt.jobs, [&](std::size_t i) {
    ItemResult r;
    const auto& [f, g, h, theta, N, k] = items[i];
    auto fail = [&](const std::string& what) {
      r.counterexample = what + " with f = " + exactalg::render(f) + ", g = " + exactalg::render(g) +
                         ", h = " + exactalg::render(h);
      return r;
    };
    r.checks += 8;
    if (!((f * g) * h == f * (g * h))) return fail("associativity");
    if (!(f * (g + h) == f * g + f * h)) return fail("distributivity");
    if (!(f + g - g == f)) return fail("cancellation");
    if (!(f * g == g * f)) return fail("commutativity");
    if (!g.isZero() && !(exactalg::exactDivide(f * g, g) == f)) return fail("exact division");

    // The canonical form does not depend on the order terms arrive in.
    std::vector<std::pair<exactalg::Exponent, mpz_class>> terms(f.terms().begin(), f.terms().end());
    std::reverse(terms.begin(), terms.end());
    MultiLaurent rebuilt(f.level());
    for (const auto& [e, c] : terms) {
      rebuilt.addTerm(e, c + 1);
      rebuilt.addTerm(e, mpz_class(-1));
    }
    if (!(rebuilt == f) || exactalg::render(rebuilt) != exactalg::render(f)) return fail("canonical form");

    const auto sf = exactalg::specialise(f, theta), sg = exactalg::specialise(g, theta);
    if (!(exactalg::specialise(f * g, theta) == sf * sg)) return fail("specialisation of a product");
    auto sum = sf;
    sum += sg;
    if (!(exactalg::specialise(f + g, theta) == sum)) return fail("specialisation of a sum");

    r.checks += 2;
    const auto z = exactalg::CyclotomicInt::zeta(N, k);
    if (!(z * exactalg::CyclotomicInt::zeta(N, -k) == exactalg::CyclotomicInt(N, 1))) return fail("zeta inverse");
    exactalg::CyclotomicInt total(N, 0);
    for (int j = 0; j < N; ++j) total += exactalg::CyclotomicInt::zeta(N, j);
    if (!(total == exactalg::CyclotomicInt(N, N == 1 ? 1 : 0))) return fail("sum of N-th roots of unity");
    return r;
  });
}

SuiteReport properties(const Options& opt) {
  return merge("properties", {kappaDominance(opt), concatenation(opt), exactalgFuzz(opt)});
}

namespace {

MultipartitionSet literalSet(const std::vector<std::string>& literals) {
  MultipartitionSet out;
  for (const auto& s : literals) out.insert(io::parseMultipartition(s));
  return out;
}

std::string setText(const MultipartitionSet& set) {
  std::string out = "{";
  bool first = true;
  for (const auto& mp : set) {
    out += (first ? "" : ", ") + io::toLiteral(mp);
    first = false;
  }
  return out + "}";
}

}  // namespace

SuiteReport examples(const Options& opt) {
  std::vector<std::function<ItemResult()>> checks;

  checks.push_back([] {
    ItemResult r;
    const auto spec = CycloSpec::cyclotomic(12, 1, 6, {3, -1, -2});
    const auto dm = basicset::dmPartition(spec, 3, 2);
    ++r.checks;
    if (dm.classes != std::vector<std::vector<int>>{{0, 1}, {2}}) {
      r.counterexample = "G(3,1,2): unexpected Dipper-Mathas classes";
      return r;
    }
    const auto c0 = basicset::chargeFor(dm, 0, spec), c1 = basicset::chargeFor(dm, 1, spec);
    ++r.checks;
    if (c0.s != std::vector<long>{0, 0} || c1.s != std::vector<long>{0} || c0.ePrime != 2 || c1.ePrime != 2 ||
        !c0.exactRelation || !c1.exactRelation) {
      r.counterexample = "G(3,1,2): unexpected charges";
      return r;
    }
    const std::vector<std::pair<MultipartitionSet, MultipartitionSet>> phis = {
        {basicset::uglovMultipartitions(2, 2, c0), literalSet({"[[2],[]]", "[[1],[1]]"})},
        {basicset::uglovMultipartitions(2, 1, c0), literalSet({"[[1],[]]"})},
        {basicset::uglovMultipartitions(1, 1, c1), literalSet({"[[1]]"})},
        {basicset::uglovMultipartitions(1, 2, c1), literalSet({"[[2]]"})},
    };
    for (const auto& [got, want] : phis) {
      ++r.checks;
      if (got != want) {
        r.counterexample = "G(3,1,2): Uglov set " + setText(got) + " expected " + setText(want);
        return r;
      }
    }
    const auto B = basicset::assembleBasicSet(spec, 3, 2);
    const auto want = literalSet({"[[2],[],[]]", "[[1],[1],[]]", "[[1],[],[1]]", "[[],[],[2]]"});
    ++r.checks;
    if (B.elements != want || B.semisimple) {
      r.counterexample = "G(3,1,2): basic set " + setText(B.elements);
      return r;
    }
    const ChargeData m(6, {3, -1, -2});
    for (const auto& mp : B.elements) {
      ++r.checks;
      const mpq_class a = combinatorics::aValueCombinatorial(mp, m);
      if (a != combinatorics::aValueHookFormula(mp, m) || a != schur::aValueViaValuation(mp, m)) {
        r.counterexample = "G(3,1,2): a-values disagree at " + io::toLiteral(mp);
        return r;
      }
    }
    return r;
  });

  checks.push_back([] {
    ItemResult r;
    const auto spec = CycloSpec::cyclotomic(12, 1, 2, {0});
    const auto gpn = basicset::assembleBasicSetGPN(spec, 3, 3, 2);
    ++r.checks;
    if (gpn.ambient.dm.classes != std::vector<std::vector<int>>{{0}, {1}, {2}}) {
      r.counterexample = "G(3,3,2): unexpected Dipper-Mathas classes";
      return r;
    }
    for (const auto& c : gpn.ambient.charges) {
      ++r.checks;
      if (c.s != std::vector<long>{0} || c.ePrime != 2) {
        r.counterexample = "G(3,3,2): unexpected charges";
        return r;
      }
    }
    const auto want = literalSet(
        {"[[1],[1],[]]", "[[],[1],[1]]", "[[1],[],[1]]", "[[2],[],[]]", "[[],[2],[]]", "[[],[],[2]]"});
    ++r.checks;
    if (gpn.ambient.elements != want) {
      r.counterexample = "G(3,3,2): basic set " + setText(gpn.ambient.elements);
      return r;
    }
    ++r.checks;
    const std::vector<std::string> reps = {"[[2],[],[]]", "[[1],[1],[]]"};  // canonical order
    bool ok = gpn.orbits.size() == 2;
    for (std::size_t i = 0; ok && i < 2; ++i) {
      const auto& o = gpn.orbits[i];
      ok = io::toLiteral(o.representative) == reps[i] && o.orbitSize == 3 && o.stabilizerSize == 1 &&
           o.labels == std::vector<std::string>{"E^{" + reps[i] + ",0}"};
    }
    if (!ok) r.counterexample = "G(3,3,2): unexpected orbits";
    return r;
  });

  return runItems("examples", checks.size(), opt.jobs, [&](std::size_t i) { return checks[i](); });
}

SuiteReport sigmaStability(const Options& opt) {
  Rng rng(opt.seed ^ 0x51);
  struct Work {
    CycloSpec spec;
    int l, p, n;
  };
  std::vector<Work> items{{CycloSpec::cyclotomic(12, 1, 2, {0}), 3, 3, 2}};
  while (items.size() < 6) {
    const int e = static_cast<int>(uniform(rng, 2, 12));
    const long r = uniform(rng, 1, 6);
    if (e / std::gcd(static_cast<long>(e), 2 * r) == 1) continue;  // e' = 1 is refused by design
    items.push_back({CycloSpec::cyclotomic(e, randomUnit(rng, e), r, {uniform(rng, -6, 6)}), 2, 2, 3});
  }
  return runItems("sigma", items.size(), opt.jobs, [&](std::size_t i) {
    ItemResult r;
    const auto& w = items[i];
    const auto gpn = basicset::assembleBasicSetGPN(w.spec, w.l, w.p, w.n);
    ++r.checks;
    std::size_t covered = 0;
    for (const auto& o : gpn.orbits) {
      covered += static_cast<std::size_t>(o.orbitSize);
      if (o.orbitSize * o.stabilizerSize != w.p || static_cast<int>(o.labels.size()) != o.stabilizerSize)
        r.counterexample = "orbit-stabilizer count fails for " + specText(w.spec, w.l);
    }
    if (covered != gpn.ambient.elements.size()) r.counterexample = "orbits do not cover the basic set";
    return r;
  });
}

std::vector<std::string> suiteNames() {
  return {"lemmas", "formulas", "avalues", "semisimple", "defect0", "properties", "examples", "sigma"};
}

std::vector<SuiteReport> run(const std::string& suite, const Options& opt) {
  if (suite == "all") {
    std::vector<SuiteReport> out;
    for (const auto& name : suiteNames()) out.push_back(run(name, opt).front());
    return out;
  }
  if (suite == "lemmas") return {lemmas(opt)};
  if (suite == "formulas") return {formulas(opt)};
  if (suite == "avalues") return {avalues(opt)};
  if (suite == "semisimple") return {semisimple(opt)};
  if (suite == "defect0") return {defect0(opt)};
  if (suite == "properties") return {properties(opt)};
  if (suite == "examples") return {examples(opt)};
  if (suite == "sigma") return {sigmaStability(opt)};
  throw std::invalid_argument("unknown suite: " + suite);
}

}  // namespace akschur::verify
