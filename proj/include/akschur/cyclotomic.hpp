#pragma once

// Cyclotomic integers Z[zeta_N] in the power basis modulo Phi_N, Laurent
// polynomials in u over them, and specialisation of MultiLaurent values.

#include <gmpxx.h>

#include <map>
#include <vector>

#include "akschur/laurent.hpp"

namespace akschur::exactalg {

/// Integer polynomial, coefficients from the constant term upwards.
using IntPoly = std::vector<mpz_class>;

/// Phi_N, obtained by dividing x^N - 1 by Phi_d for every proper divisor d.
IntPoly cyclotomicPolynomial(int N);

long eulerPhi(int N);

/// Read-only tables for one conductor: Phi_N and zeta^k reduced to the power
/// basis for k = 0..N-1. Built once per N and shared.
class Conductor {
public:
  explicit Conductor(int N);

  int N() const { return N_; }
  int degree() const { return static_cast<int>(phi_.size()) - 1; }
  const IntPoly& minimalPolynomial() const { return phi_; }
  /// Power-basis coordinates of zeta^k, any integer k.
  const std::vector<mpz_class>& zetaPower(long k) const;
  /// Reduces a polynomial in zeta modulo Phi_N; the result has degree() entries.
  std::vector<mpz_class> reduce(IntPoly p) const;

private:
  int N_;
  IntPoly phi_;
  std::vector<std::vector<mpz_class>> powers_;
};

/// Shared instance for N (thread-safe, built on first use).
const Conductor& conductor(int N);

class CyclotomicInt {
public:
  CyclotomicInt(int N, const mpz_class& value);
  static CyclotomicInt zeta(int N, long k = 1);
  static CyclotomicInt fromCoordinates(int N, std::vector<mpz_class> coeffs);

  int N() const { return field_->N(); }
  const std::vector<mpz_class>& coordinates() const { return coeffs_; }
  bool isZero() const;

  CyclotomicInt& operator+=(const CyclotomicInt& o);
  CyclotomicInt& operator-=(const CyclotomicInt& o);
  friend CyclotomicInt operator+(CyclotomicInt a, const CyclotomicInt& b) { return a += b; }
  friend CyclotomicInt operator-(CyclotomicInt a, const CyclotomicInt& b) { return a -= b; }
  friend CyclotomicInt operator*(const CyclotomicInt& a, const CyclotomicInt& b);
  CyclotomicInt operator-() const;

  bool operator==(const CyclotomicInt& o) const { return N() == o.N() && coeffs_ == o.coeffs_; }

  /// this += c * zeta^k without building the intermediate value.
  void addScaledZetaPower(const mpz_class& c, long k);

private:
  CyclotomicInt(const Conductor* field, std::vector<mpz_class> coeffs)
      : field_(field), coeffs_(std::move(coeffs)) {}
  void requireSameField(const CyclotomicInt& o) const;

  const Conductor* field_;
  std::vector<mpz_class> coeffs_;
};

/// Laurent polynomial in u with coefficients in Z[zeta_N].
class CycloLaurent {
public:
  explicit CycloLaurent(int N) : N_(N) {}

  int N() const { return N_; }
  bool isZero() const { return terms_.empty(); }
  const std::map<long, CyclotomicInt>& terms() const { return terms_; }

  /// Least exponent with a non-zero coefficient; throws std::domain_error on 0.
  long valuation() const;

  void addTerm(long exponent, const CyclotomicInt& c);
  /// terms[exponent] += c * zeta^k.
  void addScaledZetaPower(long exponent, const mpz_class& c, long k);

  CycloLaurent& operator+=(const CycloLaurent& o);
  friend CycloLaurent operator+(CycloLaurent a, const CycloLaurent& b) { return a += b; }
  friend CycloLaurent operator*(const CycloLaurent& a, const CycloLaurent& b);

  bool operator==(const CycloLaurent& o) const { return N_ == o.N_ && terms_ == o.terms_; }

private:
  int N_;
  std::map<long, CyclotomicInt> terms_;
};

/// zeta_N^zeta * u^u.
struct RootPower {
  long zeta = 0;
  long u = 0;
};

/// A ring homomorphism Z[q^{+-1}, Q_j^{+-1}] -> Z[zeta_N][u^{+-1}].
struct SpecMap {
  int N = 1;
  RootPower q;
  std::vector<RootPower> Q;
};

/// Throws std::domain_error if the number of Q-images does not match f.
CycloLaurent specialise(const MultiLaurent& f, const SpecMap& theta);

}  // namespace akschur::exactalg
