#pragma once

// Exact arithmetic over the generic ground ring Z[q, q^-1, Q_1, ..., Q_r]
// and its fraction field.  Nothing in this library uses floating point.

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace cycloschur {

/// Largest number of Q parameters a ground element can carry.
inline constexpr int kMaxQ = 8;

/// Exponent vector (d_q, d_Q1, ..., d_Q8).  The q exponent may be negative,
/// the Q exponents never are.  Ordered lexicographically.
struct Monomial {
  std::array<std::int16_t, kMaxQ + 1> exp{};

  int q() const { return exp[0]; }
  int Q(int k) const { return exp[k]; }

  Monomial operator*(const Monomial& o) const;
  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;
};

class GroundElement {
 public:
  using TermMap = std::map<Monomial, mpz_class>;

  GroundElement() = default;
  GroundElement(long c);  // NOLINT: integers embed implicitly
  explicit GroundElement(const mpz_class& c);

  static GroundElement monomial(const Monomial& m, const mpz_class& c = 1);
  static GroundElement q_pow(int d);
  /// Q_k^d, k in 1..kMaxQ.
  static GroundElement Q(int k, int d = 1);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  /// Highest Q index with a non-zero exponent (0 if none).
  int q_param_count() const;

  GroundElement& operator+=(const GroundElement& o);
  GroundElement& operator-=(const GroundElement& o);
  GroundElement& operator*=(const GroundElement& o);
  GroundElement operator-() const;
  friend GroundElement operator+(GroundElement a, const GroundElement& b) { return a += b; }
  friend GroundElement operator-(GroundElement a, const GroundElement& b) { return a -= b; }
  friend GroundElement operator*(const GroundElement& a, const GroundElement& b);
  bool operator==(const GroundElement& o) const { return terms_ == o.terms_; }

  /// Multiply by c * m in place.
  void mul_term(const Monomial& m, const mpz_class& c);
  /// this += c * m * o
  void add_scaled(const GroundElement& o, const Monomial& m, const mpz_class& c);

  /// Canonical text form, e.g. "q^-2*Q1 + 3*q^0".  Zero is "0".
  std::string to_string() const;
  static GroundElement parse(std::string_view text);

 private:
  void add_term(const Monomial& m, const mpz_class& c);
  TermMap terms_;
};

/// [k] = (q^k - q^-k)/(q - q^-1), as a Laurent polynomial.
GroundElement quantum_integer(int k);
/// [t]! = [t][t-1]...[1], [0]! = 1.
GroundElement quantum_factorial(int t);

/// Element of Q(q, Q_1, ..., Q_r).  Kept reduced only by integer content and
/// monomial content; equality is tested by cross multiplication.
class FieldElement {
 public:
  FieldElement() : num_(0), den_(1) {}
  FieldElement(GroundElement num);  // NOLINT
  FieldElement(GroundElement num, GroundElement den);

  const GroundElement& numerator() const { return num_; }
  const GroundElement& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const { return {-num_, den_}; }
  bool operator==(const FieldElement& o) const;

  std::string to_string() const;

 private:
  void normalize();
  GroundElement num_;
  GroundElement den_;
};

/// Value of an element in Q[q]/(1 + q^2 + ... + q^(2(e-1))): coefficients of
/// q^0 .. q^(2e-3).
struct CyclotomicValue {
  int e = 2;
  std::vector<mpq_class> coeffs;

  bool is_zero() const;
  bool operator==(const CyclotomicValue& o) const { return e == o.e && coeffs == o.coeffs; }
  std::string to_string() const;
};

/// Evaluate at q = q_val, Q_k = Q_vals[k-1].  Missing Q values are an error
/// when the corresponding variable occurs.
mpq_class specialize(const GroundElement& x, const mpq_class& q_val,
                     std::span<const mpq_class> Q_vals);
/// Throws std::domain_error when the denominator specializes to zero.
mpq_class specialize(const FieldElement& x, const mpq_class& q_val,
                     std::span<const mpq_class> Q_vals);
/// Evaluate with q a root of 1 + q^2 + ... + (q^2)^(e-1) = 0, e >= 2.
CyclotomicValue specialize_root(const GroundElement& x, int e,
                                std::span<const mpq_class> Q_vals);

}  // namespace cycloschur
