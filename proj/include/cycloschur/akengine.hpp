#pragma once

// The Ariki-Koike algebra H_{n,r} over Z[q, q^-1, Q_1, ..., Q_r].
//
// Hecke normalization: (T_i - q)(T_i + q^-1) = 0 for 1 <= i <= n-1, so
// T_i^2 = 1 + (q - q^-1) T_i.  Every generator formula in schurgen depends on
// this choice.  The classical (T_i - q)(T_i + 1) = 0 convention is available
// only as a deliberately mismatched negative control.
//
// Elements are stored in the normal form L_1^{a_1} ... L_n^{a_n} T_w with
// 0 <= a_i < r, where L_1 = T_0 and L_{i+1} = T_i L_i T_i.  Products are
// computed by writing the left factor as a word in T_0, ..., T_{n-1} and
// applying memoized left generator actions to the right factor.

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "cycloschur/combi.hpp"
#include "cycloschur/exactalg.hpp"

namespace cycloschur {

enum class HeckeConvention {
  Symmetric,  // (T - q)(T + q^-1) = 0
  Classical,  // (T - q)(T + 1) = 0
};

struct AKWord {
  std::vector<int> lexp;  // a_1, ..., a_n
  Perm perm;              // w
  bool operator==(const AKWord&) const = default;
};

using WordIndex = std::uint32_t;

struct AKElement {
  int n = 0;
  int r = 1;
  std::map<WordIndex, GroundElement> terms;

  bool is_zero() const { return terms.empty(); }
  AKElement& operator+=(const AKElement& o);
  AKElement& operator-=(const AKElement& o);
  AKElement& operator*=(const GroundElement& c);
  friend AKElement operator+(AKElement a, const AKElement& b) { return a += b; }
  friend AKElement operator-(AKElement a, const AKElement& b) { return a -= b; }
  friend AKElement operator*(const GroundElement& c, AKElement a) { return a *= c; }
  AKElement operator-() const;
  bool operator==(const AKElement& o) const { return n == o.n && r == o.r && terms == o.terms; }

  /// this += c * o
  void add_scaled(const AKElement& o, const GroundElement& c);
  void add_term(WordIndex w, const GroundElement& c);
};

class AKAlgebra {
 public:
  AKAlgebra(int n, int r, HeckeConvention conv = HeckeConvention::Symmetric);

  int n() const { return n_; }
  int r() const { return r_; }
  HeckeConvention convention() const { return conv_; }
  /// r^n n!, the number of normal-form words.
  std::size_t dim() const { return words_count_; }

  AKWord word(WordIndex idx) const;
  WordIndex index_of(const AKWord& w) const;

  AKElement zero() const { return {n_, r_, {}}; }
  AKElement one() const;
  AKElement from_word(const AKWord& w, const GroundElement& c = 1) const;
  /// L_i, 1 <= i <= n.
  AKElement L(int i) const;
  /// T_w for a permutation w of {1..n}.
  AKElement T(const Perm& w) const;
  /// Generator T_g, 0 <= g <= n-1 (T_0 = L_1).
  AKElement gen(int g) const;
  AKElement scalar(const GroundElement& c) const;

  /// T_g * x.
  AKElement left_gen(int g, const AKElement& x) const;
  AKElement mul(const AKElement& x, const AKElement& y) const;
  /// Anti-involution fixing every T_i.
  AKElement star(const AKElement& x) const;

  /// (sum_{w in S_mu} q^{l(w)} T_w) prod_k prod_{i <= a_k} (L_i - Q_k).
  AKElement m_mu(const MultiComposition& mu) const;
  AKElement m_mu(const MultiPartition& la) const;
  /// T*_{d(s)} m_la T_{d(t)}.
  AKElement m_st(const StdTableau& s, const StdTableau& t) const;

  /// Coefficients a, b of the quadratic relation T^2 = a T + b.
  const GroundElement& quad_a() const { return quad_a_; }
  const GroundElement& quad_b() const { return quad_b_; }

  std::string to_string(const AKElement& x) const;

 private:
  struct Step {
    std::vector<int> lexp;
    int t;  // 0: no trailing T_i, 1: trailing T_i
    GroundElement coeff;
  };

  WordIndex encode(const std::vector<int>& lexp, std::size_t perm_rank) const;
  void build_tables();
  /// T_i x^alpha y^beta with x = L_i, y = L_{i+1}: terms c * x^u y^v T_i^t.
  std::vector<std::tuple<int, int, int, GroundElement>> commute_T(int alpha, int beta) const;
  AKElement left_T_on_word(int i, WordIndex w) const;
  AKElement left_L1_on_word(WordIndex w) const;
  AKElement left_hecke(int i, const std::vector<int>& lexp, std::size_t perm_rank,
                       const GroundElement& c) const;
  void check(const AKElement& x) const;
  std::vector<int> word_as_generators(WordIndex w) const;

  int n_;
  int r_;
  HeckeConvention conv_;
  GroundElement quad_a_;
  GroundElement quad_b_;
  GroundElement quad_b_inv_;
  std::size_t lexp_count_ = 1;
  std::size_t words_count_ = 1;
  std::vector<Perm> perms_;
  std::map<Perm, std::size_t> perm_rank_;
  std::vector<std::vector<std::size_t>> left_s_;  // left_s_[i][rank] = rank of s_i w
  std::vector<int> perm_len_;
  /// Monic cyclotomic polynomial prod_k (x - Q_k), coefficients c_0 .. c_{r-1}.
  std::vector<GroundElement> cyclo_;
  /// gen_table_[g][w] = T_g * word w.
  std::vector<std::vector<AKElement>> gen_table_;
};

/// Natural embedding H_{n,r} -> H_{n+1,r}, T_i -> T_i.
AKElement iota_H(const AKAlgebra& from, const AKAlgebra& to, const AKElement& x);

}  // namespace cycloschur
