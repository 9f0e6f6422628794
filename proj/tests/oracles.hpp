#pragma once

// Brute-force reference implementations, deliberately naive.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "cycloschur/combi.hpp"

namespace oracle {

using cycloschur::Bounds;
using cycloschur::MultiPartition;
using cycloschur::Node;
using cycloschur::Partition;

// every sequence of positive ints with sum n, kept if weakly decreasing
inline std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  std::function<void(int, Partition&)> rec = [&](int left, Partition& cur) {
    if (left == 0) {
      if (std::is_sorted(cur.rbegin(), cur.rend())) out.push_back(cur);
      return;
    }
    for (int p = 1; p <= left; ++p) {
      cur.push_back(p);
      rec(left - p, cur);
      cur.pop_back();
    }
  };
  Partition cur;
  rec(n, cur);
  return out;
}

inline std::set<MultiPartition> multipartitions(int n, int r) {
  std::set<MultiPartition> out;
  std::function<void(int, int, std::vector<Partition>&)> rec = [&](int k, int left, std::vector<Partition>& cur) {
    if (k == r) {
      if (left == 0) out.insert(MultiPartition(cur));
      return;
    }
    for (int s = 0; s <= left; ++s)
      for (const auto& p : partitions(s)) {
        cur.push_back(p);
        rec(k + 1, left - s, cur);
        cur.pop_back();
      }
  };
  std::vector<Partition> cur;
  rec(0, n, cur);
  return out;
}

inline std::vector<Node> nodes(const MultiPartition& la) {
  std::vector<Node> out;
  for (int k = 1; k <= la.r(); ++k)
    for (int i = 1; i <= static_cast<int>(la.comps[k - 1].size()); ++i)
      for (int j = 1; j <= la.comps[k - 1][i - 1]; ++j) out.push_back({i, j, k});
  return out;
}

inline bool is_multipartition(const std::vector<Partition>& comps) {
  for (const auto& p : comps)
    for (std::size_t i = 0; i < p.size(); ++i)
      if (p[i] <= 0 || (i && p[i] > p[i - 1])) return false;
  return true;
}

// add/remove one box in each row and keep the result if it is still a multipartition
inline std::set<Node> addable(const MultiPartition& la) {
  std::set<Node> out;
  for (int k = 1; k <= la.r(); ++k) {
    const auto& p = la.comps[k - 1];
    for (int i = 1; i <= static_cast<int>(p.size()) + 1; ++i) {
      auto comps = la.comps;
      if (i > static_cast<int>(p.size())) comps[k - 1].push_back(0);
      int j = ++comps[k - 1][i - 1];
      if (is_multipartition(comps)) out.insert({i, j, k});
    }
  }
  return out;
}

inline std::set<Node> removable(const MultiPartition& la) {
  std::set<Node> out;
  for (int k = 1; k <= la.r(); ++k)
    for (int i = 1; i <= static_cast<int>(la.comps[k - 1].size()); ++i) {
      auto comps = la.comps;
      int j = comps[k - 1][i - 1]--;
      // a zero row may only be the last one
      if (comps[k - 1][i - 1] == 0 && i != static_cast<int>(comps[k - 1].size())) continue;
      if (comps[k - 1][i - 1] == 0) comps[k - 1].pop_back();
      if (is_multipartition(comps)) out.insert({i, j, k});
    }
  return out;
}

// all n! fillings, keep the standard ones
inline std::uint64_t std_count(const MultiPartition& la) {
  auto xs = nodes(la);
  std::vector<int> fill(xs.size());
  std::iota(fill.begin(), fill.end(), 1);
  std::uint64_t count = 0;
  do {
    auto val = [&](int i, int j, int k) -> int {
      for (std::size_t t = 0; t < xs.size(); ++t)
        if (xs[t].row == i && xs[t].col == j && xs[t].comp == k) return fill[t];
      return -1;
    };
    bool ok = true;
    for (std::size_t t = 0; t < xs.size() && ok; ++t) {
      const auto& x = xs[t];
      int right = val(x.row, x.col + 1, x.comp), below = val(x.row + 1, x.col, x.comp);
      if (right >= 0 && right < fill[t]) ok = false;
      if (below >= 0 && below < fill[t]) ok = false;
    }
    if (ok) ++count;
  } while (std::next_permutation(fill.begin(), fill.end()));
  return count;
}

// every assignment of labels (a,c), a <= m_c, to the nodes; keep the semistandard
// ones.  `accept` sees the label vector in node order.
inline std::uint64_t sst_count(const MultiPartition& la, const Bounds& m,
                               const std::function<bool(const std::vector<std::pair<int, int>>&)>& accept = {}) {
  auto xs = nodes(la);
  std::vector<std::pair<int, int>> labels;  // (c, a): compares like the label order
  for (int c = 1; c <= static_cast<int>(m.size()); ++c)
    for (int a = 1; a <= m[c - 1]; ++a) labels.push_back({c, a});
  std::vector<std::size_t> pick(xs.size(), 0);
  std::uint64_t count = 0;
  auto index_of = [&](int i, int j, int k) -> int {
    for (std::size_t t = 0; t < xs.size(); ++t)
      if (xs[t].row == i && xs[t].col == j && xs[t].comp == k) return static_cast<int>(t);
    return -1;
  };
  while (true) {
    bool ok = true;
    for (std::size_t t = 0; t < xs.size() && ok; ++t) {
      const auto& x = xs[t];
      auto v = labels[pick[t]];
      if (v.first < x.comp) ok = false;
      int right = index_of(x.row, x.col + 1, x.comp), below = index_of(x.row + 1, x.col, x.comp);
      if (right >= 0 && labels[pick[right]] < v) ok = false;
      if (below >= 0 && !(v < labels[pick[below]])) ok = false;
    }
    if (ok) {
      std::vector<std::pair<int, int>> ac;
      for (std::size_t t = 0; t < xs.size(); ++t) ac.push_back({labels[pick[t]].second, labels[pick[t]].first});
      if (!accept || accept(ac)) ++count;
    }
    std::size_t t = 0;
    while (t < pick.size() && ++pick[t] == labels.size()) pick[t++] = 0;
    if (t == pick.size()) break;
  }
  return count;
}

inline std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace oracle
