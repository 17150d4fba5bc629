#include "akschur/laurent.hpp"

#include <algorithm>
#include <numeric>

namespace akschur::exactalg {

bool GrlexLess::operator()(const Exponent& a, const Exponent& b) const {
  const long da = std::accumulate(a.begin(), a.end(), 0L);
  const long db = std::accumulate(b.begin(), b.end(), 0L);
  if (da != db) return da < db;
  return a < b;
}

MultiLaurent MultiLaurent::constant(int l, const mpz_class& c) {
  return monomial(l, Exponent(static_cast<std::size_t>(l + 1), 0), c);
}

MultiLaurent MultiLaurent::monomial(int l, Exponent e, const mpz_class& c) {
  if (static_cast<int>(e.size()) != l + 1) throw std::domain_error("exponent vector has the wrong length");
  MultiLaurent f(l);
  f.addTerm(e, c);
  return f;
}

MultiLaurent MultiLaurent::q(int l, int power) {
  Exponent e(static_cast<std::size_t>(l + 1), 0);
  e[0] = power;
  return monomial(l, std::move(e));
}

MultiLaurent MultiLaurent::Q(int l, int j, int power) {
  if (j < 0 || j >= l) throw std::domain_error("Q index out of range");
  Exponent e(static_cast<std::size_t>(l + 1), 0);
  e[static_cast<std::size_t>(j + 1)] = power;
  return monomial(l, std::move(e));
}

MultiLaurent MultiLaurent::binomial(int l, int a, int s, int b, int t) {
  Exponent left(static_cast<std::size_t>(l + 1), 0), right(static_cast<std::size_t>(l + 1), 0);
  left[0] = a;
  left[static_cast<std::size_t>(s + 1)] += 1;
  right[0] = b;
  right[static_cast<std::size_t>(t + 1)] += 1;
  MultiLaurent f(l);
  f.addTerm(left, 1);
  f.addTerm(right, -1);
  return f;
}

MultiLaurent MultiLaurent::qInteger(int l, int m) {
  if (m < 1) throw std::domain_error("[m]_q needs m >= 1");
  MultiLaurent f(l);
  Exponent e(static_cast<std::size_t>(l + 1), 0);
  for (int i = 0; i < m; ++i) {
    e[0] = i;
    f.addTerm(e, 1);
  }
  return f;
}

void MultiLaurent::addTerm(const Exponent& e, const mpz_class& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

void MultiLaurent::requireSameLevel(const MultiLaurent& o) const {
  if (l_ != o.l_)
    throw std::domain_error("Laurent polynomials over different variable sets (l=" + std::to_string(l_) +
                            " vs l=" + std::to_string(o.l_) + ")");
}

MultiLaurent MultiLaurent::operator-() const {
  MultiLaurent f(*this);
  for (auto& [e, c] : f.terms_) c = -c;
  return f;
}

MultiLaurent& MultiLaurent::operator+=(const MultiLaurent& o) {
  requireSameLevel(o);
  for (const auto& [e, c] : o.terms_) addTerm(e, c);
  return *this;
}

MultiLaurent& MultiLaurent::operator-=(const MultiLaurent& o) {
  requireSameLevel(o);
  for (const auto& [e, c] : o.terms_) addTerm(e, -c);
  return *this;
}

MultiLaurent operator*(const MultiLaurent& a, const MultiLaurent& b) {
  a.requireSameLevel(b);
  MultiLaurent out(a.l_);
  Exponent e(static_cast<std::size_t>(a.l_ + 1));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.addTerm(e, ca * cb);
    }
  }
  return out;
}

MultiLaurent& MultiLaurent::operator*=(const MultiLaurent& o) {
  *this = *this * o;
  return *this;
}

MultiLaurent MultiLaurent::pow(int k) const {
  if (k < 0) throw std::domain_error("negative powers are only defined for monomials");
  MultiLaurent out = constant(l_, 1);
  for (int i = 0; i < k; ++i) out *= *this;
  return out;
}

namespace {

Exponent minimalExponent(const MultiLaurent& f) {
  Exponent low = f.terms().begin()->first;
  for (const auto& [e, c] : f.terms())
    for (std::size_t i = 0; i < e.size(); ++i) low[i] = std::min(low[i], e[i]);
  return low;
}

MultiLaurent shifted(const MultiLaurent& f, const Exponent& by, int sign) {
  MultiLaurent out(f.level());
  Exponent e(by.size());
  for (const auto& [fe, c] : f.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = fe[i] + sign * by[i];
    out.addTerm(e, c);
  }
  return out;
}

}  // namespace

MultiLaurent exactDivide(const MultiLaurent& num, const MultiLaurent& den) {
  if (num.level() != den.level()) throw std::domain_error("exactDivide: mismatched levels");
  if (den.isZero()) throw std::domain_error("division by zero");
  if (num.isZero()) return MultiLaurent(num.level());

  const Exponent numShift = minimalExponent(num);
  const Exponent denShift = minimalExponent(den);
  MultiLaurent rem = shifted(num, numShift, -1);
  const MultiLaurent divisor = shifted(den, denShift, -1);
  const auto& [leadExp, leadCoeff] = *divisor.terms().rbegin();

  MultiLaurent quotient(num.level());
  Exponent e(leadExp.size());
  while (!rem.isZero()) {
    const auto& [remExp, remCoeff] = *rem.terms().rbegin();
    for (std::size_t i = 0; i < e.size(); ++i) {
      e[i] = remExp[i] - leadExp[i];
      if (e[i] < 0) throw InexactDivision("inexact division: leading term not divisible");
    }
    if (!mpz_divisible_p(remCoeff.get_mpz_t(), leadCoeff.get_mpz_t()))
      throw InexactDivision("inexact division: coefficient not divisible");
    const mpz_class c = remCoeff / leadCoeff;
    quotient.addTerm(e, c);
    rem -= MultiLaurent::monomial(num.level(), e, c) * divisor;
  }

  Exponent back(numShift.size());
  for (std::size_t i = 0; i < back.size(); ++i) back[i] = numShift[i] - denShift[i];
  return shifted(quotient, back, 1);
}

namespace {

std::string renderMonomial(const Exponent& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += i == 0 ? std::string("q") : "Q" + std::to_string(i - 1);
    if (e[i] != 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

}  // namespace

std::string render(const MultiLaurent& f) {
  if (f.isZero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = sgn(c) < 0;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    const mpz_class mag = abs(c);
    const std::string mono = renderMonomial(e);
    if (mono.empty())
      out += mag.get_str();
    else if (mag == 1)
      out += mono;
    else
      out += mag.get_str() + "*" + mono;
  }
  return out;
}

}  // namespace akschur::exactalg
