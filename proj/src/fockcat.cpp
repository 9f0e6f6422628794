#include "cycloschur/fockcat.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cycloschur {

namespace {

void check_charge(const Charge& charge, int r) {
  if (charge.e < 2) throw std::invalid_argument("e must be at least 2");
  if (static_cast<int>(charge.s.size()) != r)
    throw std::invalid_argument("charge length must equal r");
}

void check_class(int i, const Charge& charge) {
  if (i < 0 || i >= charge.e) throw std::invalid_argument("residue class out of range");
}

void add_to(FockVector& v, const MultiPartition& la, const mpz_class& c) {
  auto [it, inserted] = v.try_emplace(la, 0);
  it->second += c;
  if (it->second == 0) v.erase(it);
}

int count_residue(const std::vector<Node>& nodes, int i, const Charge& charge) {
  int c = 0;
  for (const auto& x : nodes)
    if (residue(x, charge) == i) ++c;
  return c;
}

std::string key_string(const BlockKey& k) {
  std::string s = "(";
  for (std::size_t i = 0; i < k.size(); ++i) s += (i ? "," : "") + std::to_string(k[i]);
  return s + ")";
}

}  // namespace

BlockKey block_key(const MultiPartition& la, const Charge& charge) {
  check_charge(charge, la.r());
  BlockKey key(charge.e, 0);
  for (int k = 1; k <= la.r(); ++k)
    for (int i = 1; i <= static_cast<int>(la.comps[k - 1].size()); ++i)
      for (int j = 1; j <= la.part(i, k); ++j) ++key[residue(Node{i, j, k}, charge)];
  return key;
}

std::map<BlockKey, std::vector<MultiPartition>> blocks(int n, int r, const Charge& charge) {
  check_charge(charge, r);
  std::map<BlockKey, std::vector<MultiPartition>> out;
  for (const auto& la : enumerate_multipartitions(n, r)) out[block_key(la, charge)].push_back(la);
  return out;
}

std::vector<BlockKey> residue_keys(int n, int r, const Charge& charge) {
  std::vector<BlockKey> keys;
  for (const auto& [k, members] : blocks(n, r, charge)) keys.push_back(k);
  return keys;
}

FockVector basis_vector(const MultiPartition& la) {
  la.validate();
  return {{la, 1}};
}

FockVector e_apply(int i, const FockVector& v, const Charge& charge) {
  check_class(i, charge);
  FockVector out;
  for (const auto& [la, c] : v) {
    check_charge(charge, la.r());
    for (const auto& x : removable_nodes(la))
      if (residue(x, charge) == i) add_to(out, remove_node(la, x), c);
  }
  return out;
}

FockVector f_apply(int i, const FockVector& v, const Charge& charge, const std::optional<Bounds>& m) {
  check_class(i, charge);
  FockVector out;
  for (const auto& [la, c] : v) {
    check_charge(charge, la.r());
    for (const auto& x : addable_nodes(la, m))
      if (residue(x, charge) == i) add_to(out, add_node(la, x), c);
  }
  return out;
}

std::string to_string(const FockVector& v) {
  if (v.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [la, c] : v) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    mpz_class a = abs(c);
    if (a != 1) os << a.get_str() << "*";
    os << "|" << la.to_string() << ">";
  }
  return os.str();
}

CheckResult commutator_check(int i, int j, int n_max, int r, const Charge& charge) {
  check_charge(charge, r);
  check_class(i, charge);
  check_class(j, charge);
  CheckResult res;
  for (int n = 0; n <= n_max && res.ok; ++n)
    for (const auto& la : enumerate_multipartitions(n, r)) {
      ++res.instances;
      FockVector b = basis_vector(la);
      FockVector lhs = e_apply(i, f_apply(j, b, charge), charge);
      for (const auto& [mu, c] : f_apply(j, e_apply(i, b, charge), charge)) add_to(lhs, mu, -c);
      FockVector rhs;
      if (i == j) {
        int h = count_residue(addable_nodes(la), i, charge) - count_residue(removable_nodes(la), i, charge);
        add_to(rhs, la, h);
      }
      if (lhs != rhs) {
        res.ok = false;
        res.detail = "at " + la.to_string() + ": got " + to_string(lhs) + ", expected " + to_string(rhs);
        break;
      }
    }
  return res;
}

CheckResult categorification_check(int n_max, int r, const Charge& charge, const BoundsSchedule& schedule) {
  check_charge(charge, r);
  auto bounds_at = [&](int level) { return schedule ? schedule(level) : branching_bounds(level, r); };
  CheckResult res;
  auto fail = [&](const std::string& why) {
    if (res.ok) res.detail = why;
    res.ok = false;
  };
  auto support = [](const FockVector& v) {
    std::multiset<MultiPartition> s;
    for (const auto& [la, c] : v)
      for (mpz_class t = 0; t < c; ++t) s.insert(la);
    return s;
  };
  for (int n = 0; n <= n_max && res.ok; ++n)
    for (const auto& la : enumerate_multipartitions(n, r)) {
      const BlockKey key = block_key(la, charge);
      const Bounds m_up = bounds_at(n + 1);
      std::multiset<MultiPartition> res_all, ind_all;
      for (int i = 0; i < charge.e; ++i) {
        ++res.instances;
        const std::string where = la.to_string() + " i=" + std::to_string(i);
        FockVector up = f_apply(i, basis_vector(la), charge, m_up);
        std::multiset<MultiPartition> ind_shapes;
        for (const auto& f : i_ind_filtration(la, i, charge, m_up).factors) {
          ind_shapes.insert(f.shape);
          ind_all.insert(f.shape);
        }
        if (ind_shapes != support(up)) fail("i-ind factors differ from f_i support at " + where);
        for (const auto& [mu, c] : up) {
          BlockKey k = key;
          ++k[i];
          if (block_key(mu, charge) != k)
            fail("f_i moved block " + key_string(key) + " to " + key_string(block_key(mu, charge)));
          if (c != 1) fail("f_i coefficient " + c.get_str() + " at " + where);
        }
        if (n == 0) continue;
        FockVector down = e_apply(i, basis_vector(la), charge);
        std::multiset<MultiPartition> res_shapes;
        for (const auto& f : i_res_filtration(la, i, charge, bounds_at(n)).factors) {
          res_shapes.insert(f.shape);
          res_all.insert(f.shape);
        }
        if (res_shapes != support(down)) fail("i-res factors differ from e_i support at " + where);
        for (const auto& [mu, c] : down) {
          BlockKey k = key;
          --k[i];
          if (block_key(mu, charge) != k)
            fail("e_i moved block " + key_string(key) + " to " + key_string(block_key(mu, charge)));
          if (c != 1) fail("e_i coefficient " + c.get_str() + " at " + where);
        }
      }
      // the i-refined lists partition the unrefined ones
      std::multiset<MultiPartition> ind_full;
      for (const auto& f : ind_filtration(la, m_up).factors) ind_full.insert(f.shape);
      if (ind_full != ind_all) fail("i-ind lists do not partition the ind list at " + la.to_string());
      if (n > 0) {
        std::multiset<MultiPartition> res_full;
        for (const auto& f : res_filtration(la, bounds_at(n)).factors) res_full.insert(f.shape);
        if (res_full != res_all) fail("i-res lists do not partition the res list at " + la.to_string());
      }
    }
  return res;
}

SparseMatrix fock_matrix(char op, int i, int n, int r, const Charge& charge) {
  check_charge(charge, r);
  check_class(i, charge);
  if (op != 'e' && op != 'f') throw std::invalid_argument("operator must be e or f");
  if (n < 0) throw std::invalid_argument("degree must be non-negative");
  SparseMatrix M;
  M.cols = enumerate_multipartitions(n, r);
  if (op == 'f') M.rows = enumerate_multipartitions(n + 1, r);
  else if (n > 0) M.rows = enumerate_multipartitions(n - 1, r);
  std::map<MultiPartition, std::size_t> row_of;
  for (std::size_t k = 0; k < M.rows.size(); ++k) row_of.emplace(M.rows[k], k);
  for (std::size_t c = 0; c < M.cols.size(); ++c) {
    FockVector b = basis_vector(M.cols[c]);
    FockVector img = op == 'e' ? e_apply(i, b, charge) : f_apply(i, b, charge);
    for (const auto& [mu, v] : img) M.entries.push_back({row_of.at(mu), c, v});
  }
  std::sort(M.entries.begin(), M.entries.end(),
            [](const auto& a, const auto& b) { return std::tie(a.row, a.col) < std::tie(b.row, b.col); });
  return M;
}

}  // namespace cycloschur
