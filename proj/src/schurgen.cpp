#include "cycloschur/schurgen.hpp"

#include <mutex>
#include <numeric>
#include <stdexcept>

namespace cycloschur {

struct SchurAlgebra::MCache {
  explicit MCache(std::size_t count) : flags(new std::once_flag[count]), values(count) {}
  std::unique_ptr<std::once_flag[]> flags;
  std::vector<AKElement> values;
};

std::string to_string(Perturbation p) {
  switch (p) {
    case Perturbation::None: return "none";
    case Perturbation::DropEPrefactor: return "drop-e-prefactor";
    case Perturbation::WrongHeckeNormalization: return "wrong-hecke";
    case Perturbation::XSetOffByOne: return "xset-off-by-one";
  }
  return "none";
}

Perturbation parse_perturbation(const std::string& s) {
  for (auto p : {Perturbation::None, Perturbation::DropEPrefactor,
                 Perturbation::WrongHeckeNormalization, Perturbation::XSetOffByOne})
    if (to_string(p) == s) return p;
  throw std::invalid_argument("unknown perturbation: " + s);
}

std::string gamma_string(GammaIndex idx) {
  return "(" + std::to_string(idx.i) + "," + std::to_string(idx.k) + ")";
}

namespace {

Perm simple_reflection(int n, int i) {
  Perm s = identity_perm(n);
  std::swap(s[i - 1], s[i]);
  return s;
}

/// s_{a_1} s_{a_2} ... as a permutation.
Perm product_of_simple(int n, const std::vector<int>& word) {
  Perm w = identity_perm(n);
  for (int a : word) w = compose(w, simple_reflection(n, a));
  return w;
}

HeckeConvention convention_for(Perturbation p) {
  return p == Perturbation::WrongHeckeNormalization ? HeckeConvention::Classical
                                                    : HeckeConvention::Symmetric;
}

void add_value(ValueMap& acc, WeightIndex tgt, const AKElement& v, const GroundElement& c) {
  auto it = acc.find(tgt);
  if (it == acc.end()) {
    AKElement x = v;
    x *= c;
    if (!x.is_zero()) acc.emplace(tgt, std::move(x));
    return;
  }
  it->second.add_scaled(v, c);
  if (it->second.is_zero()) acc.erase(it);
}

}  // namespace

SchurAlgebra::SchurAlgebra(int n, int r, Bounds m, Perturbation p)
    : SchurAlgebra(std::make_shared<AKAlgebra>(n, r, convention_for(p)), std::move(m), p) {}

SchurAlgebra::SchurAlgebra(std::shared_ptr<const AKAlgebra> hecke, Bounds m, Perturbation p)
    : hecke_(std::move(hecke)), m_(std::move(m)), pert_(p) {
  const int n = hecke_->n(), r = hecke_->r();
  if (n < 1) throw std::invalid_argument("SchurAlgebra: n must be positive");
  if (static_cast<int>(m_.size()) != r)
    throw std::invalid_argument("SchurAlgebra: bound vector must have r entries");
  for (int mk : m_)
    if (mk < n) throw std::invalid_argument("SchurAlgebra: every m_k must be at least n");
  if (hecke_->convention() != convention_for(p))
    throw std::invalid_argument("SchurAlgebra: Hecke convention does not match perturbation");

  weights_ = enumerate_compositions(n, m_);
  for (std::size_t w = 0; w < weights_.size(); ++w) {
    flat_.push_back(weights_[w].flatten());
    index_.emplace(flat_.back(), w);
  }
  gamma_prime_ = gamma_prime_set(m_);
  mcache_ = std::make_shared<MCache>(weights_.size());
}

std::optional<WeightIndex> SchurAlgebra::weight_index(const MultiComposition& mu) const {
  if (mu.r() != r() || mu.bounds() != m_) return std::nullopt;
  return find_flat(mu.flatten());
}

WeightIndex SchurAlgebra::require_weight(const MultiComposition& mu) const {
  auto w = weight_index(mu);
  if (!w) throw std::invalid_argument("not a weight of this algebra: " + mu.to_string());
  return *w;
}

std::optional<WeightIndex> SchurAlgebra::find_flat(std::vector<int> flat) const {
  auto it = index_.find(flat);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool SchurAlgebra::in_gamma_prime(GammaIndex idx) const {
  for (const auto& g : gamma_prime_)
    if (g == idx) return true;
  return false;
}

int SchurAlgebra::entry(WeightIndex mu, GammaIndex idx) const {
  return flat_[mu][gamma_position(m_, idx) - 1];
}

int SchurAlgebra::prefix(WeightIndex mu, GammaIndex idx, bool inclusive) const {
  const auto& f = flat_[mu];
  int pos = gamma_position(m_, idx) - 1 + (inclusive ? 1 : 0);
  return std::accumulate(f.begin(), f.begin() + pos, 0);
}

std::optional<WeightIndex> SchurAlgebra::shift(WeightIndex mu, GammaIndex idx, int sign) const {
  auto flat = flat_[mu];
  int a = gamma_position(m_, idx) - 1;
  if (a + 1 >= static_cast<int>(flat.size())) return std::nullopt;
  flat[a] += sign;
  flat[a + 1] -= sign;
  if (flat[a] < 0 || flat[a + 1] < 0) return std::nullopt;
  return find_flat(std::move(flat));
}

const AKElement& SchurAlgebra::m(WeightIndex mu) const {
  std::call_once(mcache_->flags[mu],
                 [&] { mcache_->values[mu] = hecke_->m_mu(weights_[mu]); });
  return mcache_->values[mu];
}

std::optional<std::pair<WeightIndex, AKElement>> SchurAlgebra::E_multiplier(GammaIndex idx,
                                                                            WeightIndex mu) const {
  auto tgt = shift(mu, idx, +1);
  if (!tgt) return std::nullopt;
  const AKAlgebra& H = *hecke_;
  const int n = H.n();
  const int N = prefix(mu, idx, true);
  const int mu_i = entry(mu, idx);
  const int mu_next = entry(mu, gamma_next(m_, idx));

  int top = mu_i;
  if (pert_ == Perturbation::XSetOffByOne) --top;
  AKElement sum = H.zero();
  for (int j = 0; j <= top; ++j) {
    std::vector<int> word;
    for (int a = N - j + 1; a <= N; ++a) word.push_back(a);
    sum.add_scaled(H.T(product_of_simple(n, word)), GroundElement::q_pow(j));
  }
  if (pert_ != Perturbation::DropEPrefactor) sum *= GroundElement::q_pow(1 - mu_next);
  if (idx.i == m_[idx.k - 1]) sum = H.mul(sum, H.L(N + 1) - H.scalar(GroundElement::Q(idx.k + 1)));
  return std::make_pair(*tgt, std::move(sum));
}

std::optional<std::pair<WeightIndex, AKElement>> SchurAlgebra::F_multiplier(GammaIndex idx,
                                                                            WeightIndex mu) const {
  auto tgt = shift(mu, idx, -1);
  if (!tgt) return std::nullopt;
  const AKAlgebra& H = *hecke_;
  const int n = H.n();
  const int N = prefix(mu, idx, true);
  const int mu_i = entry(mu, idx);
  const int mu_next = entry(mu, gamma_next(m_, idx));

  AKElement sum = H.zero();
  for (int j = 0; j <= mu_next; ++j) {
    std::vector<int> word;
    for (int a = N + j - 1; a >= N; --a) word.push_back(a);
    sum.add_scaled(H.T(product_of_simple(n, word)), GroundElement::q_pow(j));
  }
  sum *= GroundElement::q_pow(1 - mu_i);
  return std::make_pair(*tgt, std::move(sum));
}

SchurElement SchurAlgebra::identity() const {
  SchurElement x;
  for (WeightIndex w = 0; w < weights_.size(); ++w) x.components.emplace(std::pair{w, w}, hecke_->one());
  return x;
}

SchurElement SchurAlgebra::idem(WeightIndex la) const {
  if (la >= weights_.size()) throw std::out_of_range("idem: weight index out of range");
  SchurElement x;
  x.components.emplace(std::pair{la, la}, hecke_->one());
  return x;
}

SchurElement SchurAlgebra::gen_E(GammaIndex idx) const {
  if (!in_gamma_prime(idx)) throw std::out_of_range("gen_E: index not in Gamma'(m)");
  SchurElement x;
  for (WeightIndex w = 0; w < weights_.size(); ++w)
    if (auto c = E_multiplier(idx, w)) x.components.emplace(std::pair{w, c->first}, std::move(c->second));
  return x;
}

SchurElement SchurAlgebra::gen_F(GammaIndex idx) const {
  if (!in_gamma_prime(idx)) throw std::out_of_range("gen_F: index not in Gamma'(m)");
  SchurElement x;
  for (WeightIndex w = 0; w < weights_.size(); ++w)
    if (auto c = F_multiplier(idx, w)) x.components.emplace(std::pair{w, c->first}, std::move(c->second));
  return x;
}

DividedPower SchurAlgebra::E_div(GammaIndex idx, int l) const {
  if (l < 1) throw std::invalid_argument("divided power needs l >= 1");
  SchurElement e = gen_E(idx), p = e;
  for (int t = 1; t < l; ++t) p = compose(e, p);
  return {std::move(p), quantum_factorial(l)};
}

DividedPower SchurAlgebra::F_div(GammaIndex idx, int l) const {
  if (l < 1) throw std::invalid_argument("divided power needs l >= 1");
  SchurElement f = gen_F(idx), p = f;
  for (int t = 1; t < l; ++t) p = compose(f, p);
  return {std::move(p), quantum_factorial(l)};
}

SchurElement SchurAlgebra::compose(const SchurElement& psi, const SchurElement& phi) const {
  SchurElement out;
  for (const auto& [st, a] : phi.components) {
    auto it = psi.components.lower_bound({st.second, 0});
    for (; it != psi.components.end() && it->first.first == st.second; ++it) {
      auto key = std::pair{st.first, it->first.second};
      AKElement prod = hecke_->mul(it->second, a);
      auto [pos, inserted] = out.components.try_emplace(key, hecke_->zero());
      pos->second += prod;
      if (pos->second.is_zero()) out.components.erase(pos);
    }
  }
  return out;
}

SchurElement SchurAlgebra::add(const SchurElement& a, const SchurElement& b) const {
  SchurElement out = a;
  for (const auto& [key, v] : b.components) {
    auto [pos, inserted] = out.components.try_emplace(key, hecke_->zero());
    pos->second += v;
    if (pos->second.is_zero()) out.components.erase(pos);
  }
  return out;
}

SchurElement SchurAlgebra::scale(const SchurElement& a, const GroundElement& c) const {
  SchurElement out;
  if (c.is_zero()) return out;
  for (const auto& [key, v] : a.components) {
    AKElement x = v;
    x *= c;
    out.components.emplace(key, std::move(x));
  }
  return out;
}

ValueMap SchurAlgebra::apply(const SchurElement& phi, WeightIndex mu, const AKElement& v) const {
  ValueMap out;
  auto it = phi.components.lower_bound({mu, 0});
  for (; it != phi.components.end() && it->first.first == mu; ++it) {
    if (it->second.terms.size() == 1 && it->second == hecke_->one())
      add_value(out, it->first.second, v, 1);
    else
      add_value(out, it->first.second, hecke_->mul(it->second, v), 1);
  }
  return out;
}

AKElement SchurAlgebra::eval_on_m(const SchurElement& phi, WeightIndex mu) const {
  AKElement total = hecke_->zero();
  for (const auto& [tgt, v] : values(phi, mu)) total += v;
  return total;
}

bool SchurAlgebra::equals(const SchurElement& a, const SchurElement& b) const {
  SchurElement d = sub(a, b);
  for (const auto& [key, v] : d.components)
    if (!values(d, key.first).empty()) return false;
  return true;
}

AKElement SchurAlgebra::jm_value(GammaIndex idx, WeightIndex la) const {
  const int rows = entry(la, idx);
  if (rows == 0) return hecke_->zero();
  const int N = prefix(la, idx, false);
  AKElement s = hecke_->zero();
  for (int t = 1; t <= rows; ++t) s += hecke_->L(N + t);
  return hecke_->mul(m(la), s);
}

AKElement SchurAlgebra::eta_value(GammaIndex idx, WeightIndex la) const {
  const int d = entry(la, idx) - entry(la, gamma_next(m_, idx));
  AKElement out = m(la);
  if (idx.i != m_[idx.k - 1]) {
    out *= quantum_integer(d);
    return out;
  }
  out *= -GroundElement::Q(idx.k + 1) * quantum_integer(d);
  AKElement jm = hecke_->zero();
  jm.add_scaled(jm_value(idx, la), GroundElement::q_pow(-1));
  jm.add_scaled(jm_value(GammaIndex{1, idx.k + 1}, la), -GroundElement::q_pow(1));
  out.add_scaled(jm, GroundElement::q_pow(d));
  return out;
}

}  // namespace cycloschur
