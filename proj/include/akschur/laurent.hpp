#pragma once

// Exact Laurent polynomials in q, Q_0, ..., Q_{l-1} with GMP integer
// coefficients.

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace akschur::exactalg {

/// Exponent vector (e_q, e_Q0, ..., e_Q{l-1}).
using Exponent = std::vector<int>;

/// Graded lexicographic order: total degree first, then lexicographic with
/// q most significant.
struct GrlexLess {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

class InexactDivision : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class MultiLaurent {
public:
  using TermMap = std::map<Exponent, mpz_class, GrlexLess>;

  /// The zero polynomial with `l` Q-variables.
  explicit MultiLaurent(int l = 0) : l_(l) {}

  static MultiLaurent constant(int l, const mpz_class& c);
  static MultiLaurent monomial(int l, Exponent e, const mpz_class& c = 1);
  static MultiLaurent q(int l, int power = 1);
  static MultiLaurent Q(int l, int j, int power = 1);
  /// q^a Q_s - q^b Q_t.
  static MultiLaurent binomial(int l, int a, int s, int b, int t);
  /// 1 + q + ... + q^{m-1}; m >= 1.
  static MultiLaurent qInteger(int l, int m);

  int level() const { return l_; }
  bool isZero() const { return terms_.empty(); }
  /// Terms in ascending grlex order.
  const TermMap& terms() const { return terms_; }
  std::size_t termCount() const { return terms_.size(); }

  MultiLaurent operator-() const;
  MultiLaurent& operator+=(const MultiLaurent& o);
  MultiLaurent& operator-=(const MultiLaurent& o);
  MultiLaurent& operator*=(const MultiLaurent& o);
  friend MultiLaurent operator+(MultiLaurent a, const MultiLaurent& b) { return a += b; }
  friend MultiLaurent operator-(MultiLaurent a, const MultiLaurent& b) { return a -= b; }
  friend MultiLaurent operator*(const MultiLaurent& a, const MultiLaurent& b);

  MultiLaurent pow(int k) const;

  bool operator==(const MultiLaurent& o) const { return l_ == o.l_ && terms_ == o.terms_; }

  /// Adds c * x^e, dropping the term if it cancels.
  void addTerm(const Exponent& e, const mpz_class& c);

private:
  void requireSameLevel(const MultiLaurent& o) const;

  int l_;
  TermMap terms_;
};

/// c with c * den == num. Both sides are shifted to ordinary polynomials and
/// reduced in grlex order; throws InexactDivision on a non-zero remainder and
/// std::domain_error when den is zero.
MultiLaurent exactDivide(const MultiLaurent& num, const MultiLaurent& den);

/// Canonical text form, e.g. "q^2*Q0 - Q1 + 1". Terms descend in grlex.
std::string render(const MultiLaurent& f);

}  // namespace akschur::exactalg
