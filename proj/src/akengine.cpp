#include "cycloschur/akengine.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace cycloschur {

// --- AKElement --------------------------------------------------------------

void AKElement::add_term(WordIndex w, const GroundElement& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

void AKElement::add_scaled(const AKElement& o, const GroundElement& c) {
  if (c.is_zero()) return;
  for (const auto& [w, v] : o.terms) add_term(w, v * c);
}

AKElement& AKElement::operator+=(const AKElement& o) {
  for (const auto& [w, v] : o.terms) add_term(w, v);
  return *this;
}

AKElement& AKElement::operator-=(const AKElement& o) {
  for (const auto& [w, v] : o.terms) add_term(w, -v);
  return *this;
}

AKElement& AKElement::operator*=(const GroundElement& c) {
  if (c.is_zero()) {
    terms.clear();
    return *this;
  }
  for (auto it = terms.begin(); it != terms.end();) {
    it->second *= c;
    if (it->second.is_zero())
      it = terms.erase(it);
    else
      ++it;
  }
  return *this;
}

AKElement AKElement::operator-() const {
  AKElement out = *this;
  for (auto& [w, v] : out.terms) v = -v;
  return out;
}

// --- AKAlgebra --------------------------------------------------------------

AKAlgebra::AKAlgebra(int n, int r, HeckeConvention conv) : n_(n), r_(r), conv_(conv) {
  if (n < 0) throw std::invalid_argument("AKAlgebra: n must be non-negative");
  if (r < 1 || r > kMaxQ) throw std::invalid_argument("AKAlgebra: r out of range");
  const GroundElement q = GroundElement::q_pow(1);
  const GroundElement qinv = GroundElement::q_pow(-1);
  if (conv == HeckeConvention::Symmetric) {
    quad_a_ = q - qinv;
    quad_b_ = 1;
    quad_b_inv_ = 1;
  } else {
    quad_a_ = q - 1;
    quad_b_ = q;
    quad_b_inv_ = qinv;
  }

  // prod_k (x - Q_k) = x^r + sum_{j<r} cyclo_[j] x^j
  std::vector<GroundElement> poly{GroundElement(1)};
  for (int k = 1; k <= r; ++k) {
    std::vector<GroundElement> next(poly.size() + 1);
    for (std::size_t j = 0; j < poly.size(); ++j) {
      next[j + 1] += poly[j];
      next[j] -= poly[j] * GroundElement::Q(k);
    }
    poly = std::move(next);
  }
  cyclo_.assign(poly.begin(), poly.begin() + r);

  for (int i = 0; i < n; ++i) lexp_count_ *= static_cast<std::size_t>(r);
  Perm p = identity_perm(n);
  do {
    perm_rank_.emplace(p, perms_.size());
    perms_.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  words_count_ = lexp_count_ * perms_.size();
  if (words_count_ > std::numeric_limits<WordIndex>::max())
    throw std::invalid_argument("AKAlgebra: dimension too large");

  perm_len_.resize(perms_.size());
  for (std::size_t k = 0; k < perms_.size(); ++k) perm_len_[k] = perm_length(perms_[k]);
  left_s_.assign(n, std::vector<std::size_t>(perms_.size()));
  for (int i = 1; i < n; ++i)
    for (std::size_t k = 0; k < perms_.size(); ++k) {
      Perm w = perms_[k];
      // s_i w swaps the values i and i+1.
      for (int& v : w) {
        if (v == i)
          v = i + 1;
        else if (v == i + 1)
          v = i;
      }
      left_s_[i][k] = perm_rank_.at(w);
    }
  build_tables();
}

WordIndex AKAlgebra::encode(const std::vector<int>& lexp, std::size_t perm_rank) const {
  std::size_t code = 0;
  for (int i = n_ - 1; i >= 0; --i) code = code * r_ + lexp[i];
  return static_cast<WordIndex>(perm_rank * lexp_count_ + code);
}

AKWord AKAlgebra::word(WordIndex idx) const {
  AKWord w;
  std::size_t code = idx % lexp_count_;
  w.perm = perms_.at(idx / lexp_count_);
  w.lexp.resize(n_);
  for (int i = 0; i < n_; ++i) {
    w.lexp[i] = static_cast<int>(code % r_);
    code /= r_;
  }
  return w;
}

WordIndex AKAlgebra::index_of(const AKWord& w) const {
  if (static_cast<int>(w.lexp.size()) != n_) throw std::invalid_argument("AKWord: wrong length");
  for (int a : w.lexp)
    if (a < 0 || a >= r_) throw std::invalid_argument("AKWord: L exponent out of range");
  auto it = perm_rank_.find(w.perm);
  if (it == perm_rank_.end()) throw std::invalid_argument("AKWord: not a permutation");
  return encode(w.lexp, it->second);
}

AKElement AKAlgebra::one() const { return scalar(1); }

AKElement AKAlgebra::scalar(const GroundElement& c) const {
  AKElement e = zero();
  e.add_term(encode(std::vector<int>(n_, 0), 0), c);
  return e;
}

AKElement AKAlgebra::from_word(const AKWord& w, const GroundElement& c) const {
  AKElement e = zero();
  e.add_term(index_of(w), c);
  return e;
}

AKElement AKAlgebra::L(int i) const {
  if (i < 1 || i > n_) throw std::out_of_range("L index out of range");
  AKElement x = gen(0);
  for (int j = 1; j < i; ++j) x = left_gen(j, mul(x, gen(j)));
  return x;
}

AKElement AKAlgebra::T(const Perm& w) const {
  auto it = perm_rank_.find(w);
  if (it == perm_rank_.end()) throw std::invalid_argument("T: not a permutation of the right size");
  AKElement e = zero();
  e.add_term(encode(std::vector<int>(n_, 0), it->second), 1);
  return e;
}

AKElement AKAlgebra::gen(int g) const {
  if (g < 0 || g >= n_) throw std::out_of_range("generator index out of range");
  return left_gen(g, one());
}

std::vector<std::tuple<int, int, int, GroundElement>> AKAlgebra::commute_T(int alpha,
                                                                           int beta) const {
  using Terms = std::vector<std::tuple<int, int, int, GroundElement>>;
  if (alpha == 0 && beta == 0) return Terms{{0, 0, 1, GroundElement(1)}};
  std::map<std::tuple<int, int, int>, GroundElement> acc;
  auto add = [&](int u, int v, int t, const GroundElement& c) {
    auto& slot = acc[{u, v, t}];
    slot += c;
  };
  if (alpha > 0) {
    // T x = b^-1 y T - b^-1 a y
    for (const auto& [u, v, t, c] : commute_T(alpha - 1, beta)) add(u, v + 1, t, c * quad_b_inv_);
    add(alpha - 1, beta + 1, 0, -(quad_b_inv_ * quad_a_));
  } else {
    // T y = a y + b x T
    add(0, beta, 0, quad_a_);
    for (const auto& [u, v, t, c] : commute_T(0, beta - 1)) add(u + 1, v, t, c * quad_b_);
  }
  Terms out;
  for (auto& [key, c] : acc)
    if (!c.is_zero()) out.emplace_back(std::get<0>(key), std::get<1>(key), std::get<2>(key), c);
  return out;
}

AKElement AKAlgebra::left_hecke(int i, const std::vector<int>& lexp, std::size_t rank,
                                const GroundElement& c) const {
  AKElement out = zero();
  std::size_t up = left_s_[i][rank];
  if (perm_len_[up] > perm_len_[rank]) {
    out.add_term(encode(lexp, up), c);
  } else {
    out.add_term(encode(lexp, rank), c * quad_a_);
    out.add_term(encode(lexp, up), c * quad_b_);
  }
  return out;
}

AKElement AKAlgebra::left_T_on_word(int i, WordIndex w) const {
  const std::size_t rank = w / lexp_count_;
  AKWord wd = word(w);
  AKElement out = zero();
  for (const auto& [u, v, t, c] : commute_T(wd.lexp[i - 1], wd.lexp[i])) {
    if (u >= r_ || v >= r_)
      throw std::logic_error("commutation produced an L exponent above the cyclotomic bound");
    std::vector<int> lexp = wd.lexp;
    lexp[i - 1] = u;
    lexp[i] = v;
    if (t == 0)
      out.add_term(encode(lexp, rank), c);
    else
      out += left_hecke(i, lexp, rank, c);
  }
  return out;
}

AKElement AKAlgebra::left_L1_on_word(WordIndex w) const {
  const std::size_t rank = w / lexp_count_;
  AKWord wd = word(w);
  AKElement out = zero();
  if (wd.lexp[0] + 1 < r_) {
    wd.lexp[0] += 1;
    out.add_term(encode(wd.lexp, rank), 1);
    return out;
  }
  // L_1^r = -sum_{j<r} c_j L_1^j
  for (int j = 0; j < r_; ++j) {
    wd.lexp[0] = j;
    out.add_term(encode(wd.lexp, rank), -cyclo_[j]);
  }
  return out;
}

void AKAlgebra::build_tables() {
  gen_table_.assign(n_, {});
  for (int g = 0; g < n_; ++g) {
    gen_table_[g].reserve(words_count_);
    for (std::size_t w = 0; w < words_count_; ++w)
      gen_table_[g].push_back(g == 0 ? left_L1_on_word(static_cast<WordIndex>(w))
                                     : left_T_on_word(g, static_cast<WordIndex>(w)));
  }
}

void AKAlgebra::check(const AKElement& x) const {
  if (x.n != n_ || x.r != r_)
    throw std::invalid_argument("Ariki-Koike element of H_{" + std::to_string(x.n) + "," +
                                std::to_string(x.r) + "} used in H_{" + std::to_string(n_) + "," +
                                std::to_string(r_) + "}");
}

AKElement AKAlgebra::left_gen(int g, const AKElement& x) const {
  check(x);
  if (g < 0 || g >= n_) throw std::out_of_range("generator index out of range");
  AKElement out = zero();
  for (const auto& [w, c] : x.terms) out.add_scaled(gen_table_[g][w], c);
  return out;
}

std::vector<int> AKAlgebra::word_as_generators(WordIndex w) const {
  AKWord wd = word(w);
  std::vector<int> seq;
  for (int j = 1; j <= n_; ++j) {
    for (int e = 0; e < wd.lexp[j - 1]; ++e) {
      for (int t = j - 1; t >= 1; --t) seq.push_back(t);
      seq.push_back(0);
      for (int t = 1; t <= j - 1; ++t) seq.push_back(t);
    }
  }
  for (int i : reduced_word(wd.perm)) seq.push_back(i);
  return seq;
}

AKElement AKAlgebra::mul(const AKElement& x, const AKElement& y) const {
  check(x);
  check(y);
  AKElement out = zero();
  if (x.is_zero() || y.is_zero()) return out;
  for (const auto& [w, c] : x.terms) {
    AKElement v = y;
    auto seq = word_as_generators(w);
    for (auto it = seq.rbegin(); it != seq.rend(); ++it) v = left_gen(*it, v);
    out.add_scaled(v, c);
  }
  return out;
}

AKElement AKAlgebra::star(const AKElement& x) const {
  check(x);
  AKElement out = zero();
  for (const auto& [w, c] : x.terms) {
    AKWord wd = word(w);
    AKElement lpart = from_word({wd.lexp, identity_perm(n_)});
    out.add_scaled(mul(T(inverse(wd.perm)), lpart), c);
  }
  return out;
}

AKElement AKAlgebra::m_mu(const MultiComposition& mu) const {
  if (mu.size() != n_) throw std::invalid_argument("m_mu: composition size differs from n");
  if (mu.r() != r_) throw std::invalid_argument("m_mu: component count differs from r");
  // Block id of every position 1..n under the Young subgroup S_mu.
  std::vector<int> block(n_);
  int pos = 0, id = 0;
  for (int part : mu.flatten()) {
    for (int j = 0; j < part; ++j) block[pos++] = id;
    ++id;
  }
  AKElement sym = zero();
  for (std::size_t k = 0; k < perms_.size(); ++k) {
    const Perm& w = perms_[k];
    bool inside = true;
    for (int i = 0; i < n_ && inside; ++i) inside = block[w[i] - 1] == block[i];
    if (inside) sym.add_term(encode(std::vector<int>(n_, 0), k), GroundElement::q_pow(perm_len_[k]));
  }
  AKElement prod = one();
  int a = 0;  // a_k = |mu^(1)| + ... + |mu^(k-1)|
  for (int k = 1; k <= r_; ++k) {
    for (int i = 1; i <= a; ++i) {
      AKElement factor = L(i) - scalar(GroundElement::Q(k));
      prod = mul(prod, factor);
    }
    for (int v : mu.comps[k - 1]) a += v;
  }
  return mul(sym, prod);
}

AKElement AKAlgebra::m_mu(const MultiPartition& la) const {
  return m_mu(MultiComposition(la.comps));
}

AKElement AKAlgebra::m_st(const StdTableau& s, const StdTableau& t) const {
  if (!(s.shape == t.shape)) throw std::invalid_argument("m_st: tableaux have different shapes");
  AKElement m = m_mu(s.shape);
  return mul(mul(T(inverse(tableau_perm(s))), m), T(tableau_perm(t)));
}

std::string AKAlgebra::to_string(const AKElement& x) const {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : x.terms) {
    if (!first) os << " + ";
    first = false;
    AKWord wd = word(w);
    os << "(" << c.to_string() << ")*L^(";
    for (int i = 0; i < n_; ++i) os << (i ? "," : "") << wd.lexp[i];
    os << ")T[";
    for (int i = 0; i < n_; ++i) os << (i ? "," : "") << wd.perm[i];
    os << "]";
  }
  return os.str();
}

AKElement iota_H(const AKAlgebra& from, const AKAlgebra& to, const AKElement& x) {
  if (to.n() != from.n() + 1 || to.r() != from.r() || to.convention() != from.convention())
    throw std::invalid_argument("iota_H: target must be H_{n+1,r} with the same convention");
  AKElement out = to.zero();
  for (const auto& [w, c] : x.terms) {
    AKWord wd = from.word(w);
    wd.lexp.push_back(0);
    wd.perm.push_back(to.n());
    out.add_term(to.index_of(wd), c);
  }
  return out;
}

}  // namespace cycloschur
