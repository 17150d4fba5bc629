#include "akschur/cyclotomic.hpp"

#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

namespace akschur::exactalg {

namespace {

void trim(IntPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

IntPoly multiply(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

// Exact division by a monic polynomial; throws if the remainder is non-zero.
IntPoly divideMonic(IntPoly num, const IntPoly& den) {
  const std::size_t dd = den.size() - 1;
  if (num.size() < den.size()) {
    trim(num);
    if (!num.empty()) throw std::logic_error("cyclotomic division left a remainder");
    return {};
  }
  IntPoly quot(num.size() - dd, 0);
  for (std::size_t i = num.size(); i-- > dd;) {
    const mpz_class c = num[i];
    if (sgn(c) == 0) continue;
    quot[i - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  trim(num);
  if (!num.empty()) throw std::logic_error("cyclotomic division left a remainder");
  trim(quot);
  return quot;
}

IntPoly xPowerMinusOne(int N) {
  IntPoly p(static_cast<std::size_t>(N) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(N)] = 1;
  return p;
}

IntPoly cyclotomicMemo(int N, std::map<int, IntPoly>& memo) {
  if (auto it = memo.find(N); it != memo.end()) return it->second;
  IntPoly p = xPowerMinusOne(N);
  for (int d = 1; d < N; ++d)
    if (N % d == 0) p = divideMonic(std::move(p), cyclotomicMemo(d, memo));
  memo.emplace(N, p);
  return p;
}

}  // namespace

IntPoly cyclotomicPolynomial(int N) {
  if (N < 1) throw std::domain_error("conductor must be >= 1");
  std::map<int, IntPoly> memo;
  return cyclotomicMemo(N, memo);
}

long eulerPhi(int N) {
  long count = 0;
  for (int k = 1; k <= N; ++k) {
    int a = k, b = N;
    while (b != 0) {
      const int t = a % b;
      a = b;
      b = t;
    }
    count += a == 1 ? 1 : 0;
  }
  return count;
}

Conductor::Conductor(int N) : N_(N) {
  if (N < 1) throw std::domain_error("conductor must be >= 1");
  std::map<int, IntPoly> memo;
  phi_ = cyclotomicMemo(N, memo);

  IntPoly product{1};
  for (int d = 1; d <= N; ++d)
    if (N % d == 0) product = multiply(product, memo.at(d));
  if (product != xPowerMinusOne(N))
    throw std::logic_error("product of Phi_d over d | N differs from x^N - 1");
  if (degree() != eulerPhi(N)) throw std::logic_error("deg Phi_N differs from phi(N)");

  powers_.reserve(static_cast<std::size_t>(N));
  for (int k = 0; k < N; ++k) {
    IntPoly xk(static_cast<std::size_t>(k) + 1, 0);
    xk[static_cast<std::size_t>(k)] = 1;
    powers_.push_back(reduce(std::move(xk)));
  }
}

std::vector<mpz_class> Conductor::reduce(IntPoly p) const {
  const std::size_t deg = static_cast<std::size_t>(degree());
  for (std::size_t i = p.size(); i-- > deg;) {
    const mpz_class c = p[i];
    if (sgn(c) == 0) continue;
    for (std::size_t j = 0; j <= deg; ++j) p[i - deg + j] -= c * phi_[j];
  }
  p.resize(deg, 0);
  return p;
}

const std::vector<mpz_class>& Conductor::zetaPower(long k) const {
  long r = k % N_;
  if (r < 0) r += N_;
  return powers_[static_cast<std::size_t>(r)];
}

const Conductor& conductor(int N) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<Conductor>> registry;
  std::lock_guard lock(mutex);
  auto& slot = registry[N];
  if (!slot) slot = std::make_unique<Conductor>(N);
  return *slot;
}

CyclotomicInt::CyclotomicInt(int N, const mpz_class& value) : field_(&conductor(N)) {
  coeffs_.assign(static_cast<std::size_t>(field_->degree()), 0);
  coeffs_[0] = value;
}

CyclotomicInt CyclotomicInt::zeta(int N, long k) {
  const Conductor& f = conductor(N);
  return CyclotomicInt(&f, f.zetaPower(k));
}

CyclotomicInt CyclotomicInt::fromCoordinates(int N, std::vector<mpz_class> coeffs) {
  const Conductor& f = conductor(N);
  if (static_cast<int>(coeffs.size()) != f.degree())
    throw std::domain_error("expected phi(N) coordinates");
  return CyclotomicInt(&f, std::move(coeffs));
}

bool CyclotomicInt::isZero() const {
  for (const auto& c : coeffs_)
    if (sgn(c) != 0) return false;
  return true;
}

void CyclotomicInt::requireSameField(const CyclotomicInt& o) const {
  if (field_ != o.field_)
    throw std::domain_error("cyclotomic integers with different conductors (" + std::to_string(N()) +
                            " vs " + std::to_string(o.N()) + ")");
}

CyclotomicInt& CyclotomicInt::operator+=(const CyclotomicInt& o) {
  requireSameField(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

CyclotomicInt& CyclotomicInt::operator-=(const CyclotomicInt& o) {
  requireSameField(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

CyclotomicInt CyclotomicInt::operator-() const {
  CyclotomicInt out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CyclotomicInt operator*(const CyclotomicInt& a, const CyclotomicInt& b) {
  a.requireSameField(b);
  return CyclotomicInt(a.field_, a.field_->reduce(multiply(a.coeffs_, b.coeffs_)));
}

void CyclotomicInt::addScaledZetaPower(const mpz_class& c, long k) {
  const auto& basis = field_->zetaPower(k);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (sgn(basis[i]) != 0) coeffs_[i] += c * basis[i];
}

long CycloLaurent::valuation() const {
  if (terms_.empty()) throw std::domain_error("valuation of zero");
  return terms_.begin()->first;
}

void CycloLaurent::addTerm(long exponent, const CyclotomicInt& c) {
  if (c.N() != N_) throw std::domain_error("coefficient has the wrong conductor");
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) it->second += c;
  if (it->second.isZero()) terms_.erase(it);
}

void CycloLaurent::addScaledZetaPower(long exponent, const mpz_class& c, long k) {
  auto [it, inserted] = terms_.try_emplace(exponent, CyclotomicInt(N_, 0));
  it->second.addScaledZetaPower(c, k);
  if (it->second.isZero()) terms_.erase(it);
}

CycloLaurent& CycloLaurent::operator+=(const CycloLaurent& o) {
  if (o.N_ != N_) throw std::domain_error("mismatched conductors");
  for (const auto& [e, c] : o.terms_) addTerm(e, c);
  return *this;
}

CycloLaurent operator*(const CycloLaurent& a, const CycloLaurent& b) {
  if (a.N_ != b.N_) throw std::domain_error("mismatched conductors");
  CycloLaurent out(a.N_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.addTerm(ea + eb, ca * cb);
  return out;
}

CycloLaurent specialise(const MultiLaurent& f, const SpecMap& theta) {
  if (static_cast<int>(theta.Q.size()) != f.level())
    throw std::domain_error("specialisation has " + std::to_string(theta.Q.size()) +
                            " Q-images for a polynomial in " + std::to_string(f.level()) + " Q-variables");
  CycloLaurent out(theta.N);
  for (const auto& [e, c] : f.terms()) {
    long zeta = static_cast<long>(e[0]) * theta.q.zeta;
    long u = static_cast<long>(e[0]) * theta.q.u;
    for (std::size_t j = 0; j < theta.Q.size(); ++j) {
      zeta += static_cast<long>(e[j + 1]) * theta.Q[j].zeta;
      u += static_cast<long>(e[j + 1]) * theta.Q[j].u;
    }
    out.addScaledZetaPower(u, c, zeta);
  }
  return out;
}

}  // namespace akschur::exactalg
