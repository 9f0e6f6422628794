#pragma once

// The cyclotomic q-Schur algebra S_{n,r}(Lambda_{n,r}(m)) realized as
// endomorphisms of the direct sum of the permutation modules M^mu = m_mu H.
//
// An endomorphism is stored as a family of left multipliers: the component
// (mu, nu, a) sends m_mu h to a m_mu h in M^nu.  Two endomorphisms are equal
// iff they agree on every generator m_mu, which is what `equals` tests.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cycloschur/akengine.hpp"
#include "cycloschur/combi.hpp"
#include "cycloschur/exactalg.hpp"

namespace cycloschur {

/// Deliberate defects used as negative controls for the verifiers.
enum class Perturbation {
  None,
  DropEPrefactor,           // E loses its q^{-mu_{i+1}+1} factor
  WrongHeckeNormalization,  // same formulas over (T - q)(T + 1) = 0
  XSetOffByOne,             // E's coset sum stops one element early
};

std::string to_string(Perturbation p);
/// Accepts "none", "drop-e-prefactor", "wrong-hecke", "xset-off-by-one".
Perturbation parse_perturbation(const std::string& s);

using WeightIndex = std::size_t;

struct SchurElement {
  /// (source, target) -> multiplier.
  std::map<std::pair<WeightIndex, WeightIndex>, AKElement> components;

  bool empty() const { return components.empty(); }
};

/// Values phi(m_mu) split by target weight.
using ValueMap = std::map<WeightIndex, AKElement>;

/// x / denom, used for divided powers E^l/[l]!.
struct DividedPower {
  SchurElement numer;
  GroundElement denom;
};

class SchurAlgebra {
 public:
  SchurAlgebra(int n, int r, Bounds m, Perturbation p = Perturbation::None);
  SchurAlgebra(std::shared_ptr<const AKAlgebra> hecke, Bounds m,
               Perturbation p = Perturbation::None);

  int n() const { return hecke_->n(); }
  int r() const { return hecke_->r(); }
  const Bounds& bounds() const { return m_; }
  Perturbation perturbation() const { return pert_; }
  const AKAlgebra& hecke() const { return *hecke_; }
  std::shared_ptr<const AKAlgebra> hecke_ptr() const { return hecke_; }

  const std::vector<MultiComposition>& weights() const { return weights_; }
  std::optional<WeightIndex> weight_index(const MultiComposition& mu) const;
  WeightIndex require_weight(const MultiComposition& mu) const;
  const std::vector<GammaIndex>& gamma_prime() const { return gamma_prime_; }
  bool in_gamma_prime(GammaIndex idx) const;

  /// mu + sign * alpha_{(i,k)} when it lies in Lambda.
  std::optional<WeightIndex> shift(WeightIndex mu, GammaIndex idx, int sign) const;
  /// m_mu, computed once per weight; safe to call from several threads.
  const AKElement& m(WeightIndex mu) const;

  /// Multiplier of E_{(i,k)} (resp. F) at mu, or nothing when it kills m_mu.
  std::optional<std::pair<WeightIndex, AKElement>> E_multiplier(GammaIndex idx,
                                                                WeightIndex mu) const;
  std::optional<std::pair<WeightIndex, AKElement>> F_multiplier(GammaIndex idx,
                                                                WeightIndex mu) const;

  SchurElement zero() const { return {}; }
  SchurElement identity() const;
  SchurElement idem(WeightIndex la) const;
  SchurElement idem(const MultiComposition& la) const { return idem(require_weight(la)); }
  SchurElement gen_E(GammaIndex idx) const;
  SchurElement gen_F(GammaIndex idx) const;
  /// E^l/[l]! and F^l/[l]!, l >= 1.
  DividedPower E_div(GammaIndex idx, int l) const;
  DividedPower F_div(GammaIndex idx, int l) const;

  /// psi o phi.
  SchurElement compose(const SchurElement& psi, const SchurElement& phi) const;
  SchurElement add(const SchurElement& a, const SchurElement& b) const;
  SchurElement scale(const SchurElement& a, const GroundElement& c) const;
  SchurElement sub(const SchurElement& a, const SchurElement& b) const {
    return add(a, scale(b, -1));
  }

  /// phi applied to v, where v is an element of M^mu.
  ValueMap apply(const SchurElement& phi, WeightIndex mu, const AKElement& v) const;
  ValueMap values(const SchurElement& phi, WeightIndex mu) const { return apply(phi, mu, m(mu)); }
  /// Sum over targets of phi(m_mu).
  AKElement eval_on_m(const SchurElement& phi, WeightIndex mu) const;
  bool equals(const SchurElement& a, const SchurElement& b) const;

  /// sigma^la_{(i,k)}(m_la) = m_la (L_{N+1} + ... + L_{N+la_i^{(k)}}), (i,k) in Gamma(m).
  AKElement jm_value(GammaIndex idx, WeightIndex la) const;
  /// eta^la_{(i,k)}(m_la) with the JM polynomials replaced by their values.
  AKElement eta_value(GammaIndex idx, WeightIndex la) const;

  std::string weight_string(WeightIndex mu) const { return weights_[mu].to_string(); }

 private:
  int entry(WeightIndex mu, GammaIndex idx) const;
  /// N = sum_{l<k} |mu^(l)| + sum_{j<=i} mu_j^(k).
  int prefix(WeightIndex mu, GammaIndex idx, bool inclusive) const;
  std::optional<WeightIndex> find_flat(std::vector<int> flat) const;

  std::shared_ptr<const AKAlgebra> hecke_;
  Bounds m_;
  Perturbation pert_;
  std::vector<MultiComposition> weights_;
  std::vector<std::vector<int>> flat_;
  std::map<std::vector<int>, WeightIndex> index_;
  std::vector<GammaIndex> gamma_prime_;

  struct MCache;
  std::shared_ptr<MCache> mcache_;
};

std::string gamma_string(GammaIndex idx);

// --- verification -------------------------------------------------------------

struct RelationReport {
  std::string relation;
  std::vector<std::pair<std::string, std::string>> params;
  bool pass = true;
  bool vacuous = false;
  /// First non-zero difference, empty on PASS.
  std::string witness;
};

struct VerifyOptions {
  int workers = 1;
  Perturbation perturbation = Perturbation::None;
};

bool all_pass(const std::vector<RelationReport>& reports);

/// Every instance of the defining relations of the presentation, checked on
/// every m_mu.  Relation ids:
///   idem-orth, idem-sum               1_la 1_mu = delta 1_la, sum 1_la = 1
///   E-idem, F-idem                    E 1_la, F 1_la
///   idem-E, idem-F                    1_la E, 1_la F
///   EF-commutator                     [E_a, F_b] = delta_{ab} sum eta
///   E-serre, E-commute, F-serre, F-commute
std::vector<RelationReport> verify_presentation(int n, int r, const Bounds& m,
                                                const VerifyOptions& opt = {});

/// star(E^(l)(m_mu)) = q^{l(mu_i - mu_{i+1} + l)} F^(l)(m_{mu + l alpha}).
std::vector<RelationReport> verify_theta(int n, int r, const Bounds& m, int l_max,
                                         const VerifyOptions& opt = {});

/// xi = sum of 1_la over the image of gamma, as an element of the larger algebra.
SchurElement xi(const SchurAlgebra& big);

/// Embedding checks between level n with bounds m' and level n+1 with bounds m.
/// `m` is the level n+1 bound vector.
std::vector<RelationReport> verify_iota(int n, int r, const Bounds& m,
                                        const VerifyOptions& opt = {});

/// T_0 and T_i as elements of 1_omega S 1_omega, evaluated on m_omega = 1,
/// at level n (bounds m') and level n+1 (bounds m, including the T_n clause).
std::vector<RelationReport> verify_dictionary(int n, int r, const Bounds& m,
                                              const VerifyOptions& opt = {});

}  // namespace cycloschur
