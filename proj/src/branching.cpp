#include "cycloschur/branching.hpp"

#include <algorithm>
#include <stdexcept>

namespace cycloschur {

int residue(const Node& x, const Charge& charge) {
  if (charge.e < 2) throw std::invalid_argument("residue: e must be at least 2");
  if (x.comp < 1 || x.comp > static_cast<int>(charge.s.size()))
    throw std::invalid_argument("residue: node component outside the charge");
  int v = (x.col - x.row + charge.s[x.comp - 1]) % charge.e;
  return v < 0 ? v + charge.e : v;
}

std::string to_string(Direction d) { return d == Direction::Res ? "res" : "ind"; }

Bounds branching_bounds(int size, int r) { return Bounds(r, std::max(size, 2)); }

namespace {

void check_bounds(const Bounds& m, int r) {
  if (static_cast<int>(m.size()) != r) throw std::invalid_argument("bounds must have r entries");
  for (int mk : m)
    if (mk < 1) throw std::invalid_argument("bounds must be positive");
}

FiltrationReport refine(FiltrationReport rep, int i, const Charge& charge) {
  if (i < 0 || i >= charge.e) throw std::invalid_argument("residue class out of range");
  if (static_cast<int>(charge.s.size()) != rep.source.r())
    throw std::invalid_argument("charge length must equal r");
  std::vector<FiltrationFactor> kept;
  for (auto& f : rep.factors) {
    f.residue = residue(f.node, charge);
    if (f.residue == i) kept.push_back(std::move(f));
  }
  rep.factors = std::move(kept);
  return rep;
}

}  // namespace

FiltrationReport res_filtration(const MultiPartition& la, const std::optional<Bounds>& m,
                                bool costandard) {
  la.validate();
  if (la.size() == 0) throw std::invalid_argument("res_filtration: empty multipartition");
  FiltrationReport rep;
  rep.direction = Direction::Res;
  rep.source = la;
  rep.costandard = costandard;
  Bounds big = m ? *m : branching_bounds(la.size(), la.r());
  check_bounds(big, la.r());
  rep.bounds = shrink_bounds(big);
  for (const auto& x : removable_nodes(la)) {
    FiltrationFactor f;
    f.node = x;
    f.shape = remove_node(la, x);
    f.dim = weyl_dim(f.shape, rep.bounds);
    rep.factors.push_back(std::move(f));
  }
  return rep;
}

FiltrationReport ind_filtration(const MultiPartition& mu, const Bounds& m) {
  mu.validate();
  check_bounds(m, mu.r());
  FiltrationReport rep;
  rep.direction = Direction::Ind;
  rep.source = mu;
  rep.bounds = m;
  auto nodes = addable_nodes(mu, m);
  std::reverse(nodes.begin(), nodes.end());
  for (const auto& x : nodes) {
    FiltrationFactor f;
    f.node = x;
    f.shape = add_node(mu, x);
    f.dim = weyl_dim(f.shape, m);
    rep.factors.push_back(std::move(f));
  }
  return rep;
}

FiltrationReport i_res_filtration(const MultiPartition& la, int i, const Charge& charge,
                                  const std::optional<Bounds>& m) {
  return refine(res_filtration(la, m), i, charge);
}

FiltrationReport i_ind_filtration(const MultiPartition& mu, int i, const Charge& charge,
                                  const Bounds& m) {
  return refine(ind_filtration(mu, m), i, charge);
}

bool res_dim_check(const MultiPartition& la, const Bounds& m, const Bounds& m_prime) {
  std::uint64_t lhs = 0, rhs = 0;
  for (const auto& mu : enumerate_compositions(la.size(), m))
    if (is_in_gamma_image(mu)) lhs += enumerate_ssts(la, mu).size();
  for (const auto& x : removable_nodes(la)) rhs += weyl_dim(remove_node(la, x), m_prime);
  return lhs == rhs;
}

bool specht_induction_check(int n_max, int r) {
  if (n_max < 1) throw std::invalid_argument("specht_induction_check: n_max must be positive");
  for (int n = 0; n <= n_max; ++n)
    for (const auto& mu : enumerate_multipartitions(n, r)) {
      std::uint64_t total = 0;
      for (const auto& x : addable_nodes(mu)) total += std_count(add_node(mu, x));
      if (total != static_cast<std::uint64_t>(r) * (n + 1) * std_count(mu)) return false;
    }
  return true;
}

}  // namespace cycloschur
