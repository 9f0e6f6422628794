#include "cycloschur/exactalg.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace cycloschur {

namespace {

std::int16_t checked_exp(long v) {
  if (v < std::numeric_limits<std::int16_t>::min() || v > std::numeric_limits<std::int16_t>::max())
    throw std::overflow_error("exponent out of range");
  return static_cast<std::int16_t>(v);
}

}  // namespace

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (int i = 0; i <= kMaxQ; ++i) r.exp[i] = checked_exp(long(exp[i]) + o.exp[i]);
  return r;
}

GroundElement::GroundElement(long c) {
  if (c != 0) terms_.emplace(Monomial{}, mpz_class(c));
}

GroundElement::GroundElement(const mpz_class& c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

GroundElement GroundElement::monomial(const Monomial& m, const mpz_class& c) {
  GroundElement g;
  if (c != 0) g.terms_.emplace(m, c);
  return g;
}

GroundElement GroundElement::q_pow(int d) {
  Monomial m;
  m.exp[0] = checked_exp(d);
  return monomial(m);
}

GroundElement GroundElement::Q(int k, int d) {
  if (k < 1 || k > kMaxQ) throw std::out_of_range("Q index out of range");
  if (d < 0) throw std::invalid_argument("negative Q exponent");
  Monomial m;
  m.exp[k] = checked_exp(d);
  return monomial(m);
}

bool GroundElement::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == Monomial{} && terms_.begin()->second == 1;
}

int GroundElement::q_param_count() const {
  int r = 0;
  for (const auto& [m, c] : terms_)
    for (int k = 1; k <= kMaxQ; ++k)
      if (m.exp[k] != 0) r = std::max(r, k);
  return r;
}

void GroundElement::add_term(const Monomial& m, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GroundElement& GroundElement::operator+=(const GroundElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

GroundElement& GroundElement::operator-=(const GroundElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

GroundElement GroundElement::operator-() const {
  GroundElement r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

GroundElement operator*(const GroundElement& a, const GroundElement& b) {
  GroundElement r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

GroundElement& GroundElement::operator*=(const GroundElement& o) {
  *this = *this * o;
  return *this;
}

void GroundElement::mul_term(const Monomial& m, const mpz_class& c) {
  if (c == 0) {
    terms_.clear();
    return;
  }
  TermMap out;
  for (const auto& [mm, cc] : terms_) out.emplace(mm * m, cc * c);
  terms_ = std::move(out);
}

void GroundElement::add_scaled(const GroundElement& o, const Monomial& m, const mpz_class& c) {
  for (const auto& [mm, cc] : o.terms_) add_term(mm * m, cc * c);
}

std::string GroundElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    mpz_class a = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (a != 1) os << a.get_str() << "*";
    os << "q^" << m.exp[0];
    for (int k = 1; k <= kMaxQ; ++k) {
      if (m.exp[k] == 0) continue;
      os << "*Q" << k;
      if (m.exp[k] != 1) os << "^" << m.exp[k];
    }
  }
  return os.str();
}

namespace {

class TermParser {
 public:
  explicit TermParser(std::string_view s) : s_(s) {}

  GroundElement parse() {
    GroundElement out;
    skip_ws();
    if (at_end()) fail("empty input");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      skip_ws();
      if (peek() == '+' || peek() == '-') {
        sign = (peek() == '-') ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      out += parse_term(sign);
      skip_ws();
    }
    return out;
  }

 private:
  GroundElement parse_term(int sign) {
    mpz_class coeff = sign;
    Monomial m;
    bool need_factor = true;
    while (need_factor) {
      skip_ws();
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff *= parse_uint();
      } else if (c == 'q') {
        ++pos_;
        m.exp[0] = checked_exp(m.exp[0] + parse_power());
      } else if (c == 'Q') {
        ++pos_;
        long k = parse_uint().get_si();
        if (k < 1 || k > kMaxQ) fail("Q index out of range");
        long d = parse_power();
        if (d < 0) fail("negative Q exponent");
        m.exp[k] = checked_exp(m.exp[k] + d);
      } else {
        fail("expected factor");
      }
      skip_ws();
      if (peek() == '*') {
        ++pos_;
      } else {
        need_factor = false;
      }
    }
    return GroundElement::monomial(m, coeff);
  }

  long parse_power() {
    skip_ws();
    if (peek() != '^') return 1;
    ++pos_;
    skip_ws();
    int sign = 1;
    if (peek() == '-') {
      sign = -1;
      ++pos_;
    }
    return sign * parse_uint().get_si();
  }

  mpz_class parse_uint() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return mpz_class(std::string(s_.substr(start, pos_ - start)));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  [[noreturn]] void fail(const char* what) const {
    throw std::invalid_argument(std::string("ground element parse error at ") +
                                std::to_string(pos_) + ": " + what);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

GroundElement GroundElement::parse(std::string_view text) {
  std::string_view t = text;
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.remove_prefix(1);
  if (t == "0") return {};
  return TermParser(text).parse();
}

GroundElement quantum_integer(int k) {
  if (k < 0) return -quantum_integer(-k);
  GroundElement out;
  for (int j = k - 1; j >= 1 - k; j -= 2) out += GroundElement::q_pow(j);
  return out;
}

GroundElement quantum_factorial(int t) {
  if (t < 0) throw std::invalid_argument("quantum_factorial of negative integer");
  GroundElement out = 1;
  for (int k = 2; k <= t; ++k) out *= quantum_integer(k);
  return out;
}

// ---------------------------------------------------------------------------

FieldElement::FieldElement(GroundElement num) : num_(std::move(num)), den_(1) {}

FieldElement::FieldElement(GroundElement num, GroundElement den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("zero denominator");
  normalize();
}

void FieldElement::normalize() {
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  mpz_class g = 0;
  Monomial lo = num_.terms().begin()->first;
  auto scan = [&](const GroundElement& x) {
    for (const auto& [m, c] : x.terms()) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
      for (int i = 0; i <= kMaxQ; ++i) lo.exp[i] = std::min(lo.exp[i], m.exp[i]);
    }
  };
  scan(num_);
  scan(den_);
  if (den_.terms().rbegin()->second < 0) g = -g;
  Monomial inv;
  for (int i = 0; i <= kMaxQ; ++i) inv.exp[i] = checked_exp(-long(lo.exp[i]));
  auto reduce = [&](GroundElement& x) {
    GroundElement out;
    for (const auto& [m, c] : x.terms()) out += GroundElement::monomial(m * inv, c / g);
    x = std::move(out);
  };
  reduce(num_);
  reduce(den_);
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  if (den_ == o.den_) return {num_ + o.num_, den_};
  return {num_ * o.den_ + o.num_ * den_, den_ * o.den_};
}

FieldElement FieldElement::operator-(const FieldElement& o) const { return *this + (-o); }

FieldElement FieldElement::operator*(const FieldElement& o) const {
  return {num_ * o.num_, den_ * o.den_};
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  if (o.is_zero()) throw std::domain_error("division by zero");
  return {num_ * o.den_, den_ * o.num_};
}

bool FieldElement::operator==(const FieldElement& o) const {
  return num_ * o.den_ == o.num_ * den_;
}

std::string FieldElement::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

// ---------------------------------------------------------------------------

namespace {

mpq_class pow_q(const mpq_class& base, int d) {
  mpq_class out = 1;
  mpq_class b = base;
  if (d < 0) {
    if (b == 0) throw std::domain_error("zero raised to a negative power");
    b = 1 / b;
    d = -d;
  }
  for (int i = 0; i < d; ++i) out *= b;
  return out;
}

mpq_class Q_value(std::span<const mpq_class> Q_vals, int k) {
  if (k > static_cast<int>(Q_vals.size()))
    throw std::invalid_argument("missing value for Q" + std::to_string(k));
  return Q_vals[k - 1];
}

}  // namespace

mpq_class specialize(const GroundElement& x, const mpq_class& q_val,
                     std::span<const mpq_class> Q_vals) {
  if (q_val == 0) throw std::domain_error("q must be invertible");
  mpq_class sum = 0;
  for (const auto& [m, c] : x.terms()) {
    mpq_class t = c;
    t *= pow_q(q_val, m.exp[0]);
    for (int k = 1; k <= kMaxQ; ++k)
      if (m.exp[k] != 0) t *= pow_q(Q_value(Q_vals, k), m.exp[k]);
    sum += t;
  }
  return sum;
}

mpq_class specialize(const FieldElement& x, const mpq_class& q_val,
                     std::span<const mpq_class> Q_vals) {
  mpq_class d = specialize(x.denominator(), q_val, Q_vals);
  if (d == 0) throw std::domain_error("denominator specializes to zero");
  return specialize(x.numerator(), q_val, Q_vals) / d;
}

bool CyclotomicValue::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const mpq_class& c) { return c == 0; });
}

std::string CyclotomicValue::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t d = 0; d < coeffs.size(); ++d) {
    if (coeffs[d] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << coeffs[d].get_str() << "*q^" << d;
  }
  if (first) os << "0";
  return os.str();
}

CyclotomicValue specialize_root(const GroundElement& x, int e, std::span<const mpq_class> Q_vals) {
  if (e < 2) throw std::invalid_argument("quantum characteristic must be >= 2");
  // q^(2e) = 1 modulo the relation, and q^(2e-2) = -(1 + q^2 + ... + q^(2e-4)).
  const int period = 2 * e;
  const int width = 2 * (e - 1);
  CyclotomicValue out;
  out.e = e;
  out.coeffs.assign(width, 0);
  for (const auto& [m, c] : x.terms()) {
    mpq_class t = c;
    for (int k = 1; k <= kMaxQ; ++k)
      if (m.exp[k] != 0) t *= pow_q(Q_value(Q_vals, k), m.exp[k]);
    int d = ((m.exp[0] % period) + period) % period;
    if (d < width) {
      out.coeffs[d] += t;
    } else {
      int parity = d - width;  // 0 or 1
      for (int j = 0; j < e - 1; ++j) out.coeffs[2 * j + parity] -= t;
    }
  }
  return out;
}

}  // namespace cycloschur
