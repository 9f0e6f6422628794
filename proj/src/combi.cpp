#include "cycloschur/combi.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cycloschur {

std::string Node::to_string() const {
  return "(" + std::to_string(row) + "," + std::to_string(col) + "," + std::to_string(comp) + ")";
}

bool node_precedes(const Node& x, const Node& y) {
  return x.comp < y.comp || (x.comp == y.comp && x.row < y.row);
}

// --- MultiPartition ---------------------------------------------------------

MultiPartition::MultiPartition(std::vector<Partition> c) : comps(std::move(c)) {
  for (auto& p : comps)
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int MultiPartition::size() const {
  int s = 0;
  for (const auto& p : comps) s += std::accumulate(p.begin(), p.end(), 0);
  return s;
}

int MultiPartition::part(int i, int k) const {
  const auto& p = comps[k - 1];
  return i <= static_cast<int>(p.size()) ? p[i - 1] : 0;
}

bool MultiPartition::contains(const Node& x) const {
  return x.comp >= 1 && x.comp <= r() && x.row >= 1 && x.col >= 1 && x.col <= part(x.row, x.comp);
}

void MultiPartition::validate() const {
  for (const auto& p : comps) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] <= 0) throw std::invalid_argument("multipartition has non-positive part");
      if (i > 0 && p[i] > p[i - 1])
        throw std::invalid_argument("multipartition component is not weakly decreasing");
    }
  }
}

namespace {

std::string list_to_string(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "]";
}

std::string nested_to_string(const std::vector<std::vector<int>>& comps) {
  std::string s = "[";
  for (std::size_t k = 0; k < comps.size(); ++k) {
    if (k) s += ",";
    s += list_to_string(comps[k]);
  }
  return s + "]";
}

}  // namespace

std::string MultiPartition::to_string() const { return nested_to_string(comps); }

MultiPartition MultiPartition::parse(const std::string& text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](char c) {
    skip();
    if (pos >= text.size() || text[pos] != c)
      throw std::invalid_argument("malformed multipartition \"" + text + "\": expected '" +
                                  std::string(1, c) + "'");
    ++pos;
  };
  auto peek = [&] {
    skip();
    return pos < text.size() ? text[pos] : '\0';
  };
  std::vector<Partition> comps;
  expect('[');
  if (peek() != ']') {
    while (true) {
      expect('[');
      Partition p;
      if (peek() != ']') {
        while (true) {
          skip();
          std::size_t start = pos;
          while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
          if (start == pos)
            throw std::invalid_argument("malformed multipartition \"" + text + "\": expected part");
          p.push_back(std::stoi(text.substr(start, pos - start)));
          if (peek() == ',') {
            ++pos;
            continue;
          }
          break;
        }
      }
      expect(']');
      comps.push_back(std::move(p));
      if (peek() == ',') {
        ++pos;
        continue;
      }
      break;
    }
  }
  expect(']');
  skip();
  if (pos != text.size())
    throw std::invalid_argument("malformed multipartition \"" + text + "\": trailing input");
  if (comps.empty()) throw std::invalid_argument("multipartition needs at least one component");
  MultiPartition la(std::move(comps));
  la.validate();
  return la;
}

// --- MultiComposition -------------------------------------------------------

int MultiComposition::size() const {
  int s = 0;
  for (const auto& c : comps) s += std::accumulate(c.begin(), c.end(), 0);
  return s;
}

Bounds MultiComposition::bounds() const {
  Bounds m;
  for (const auto& c : comps) m.push_back(static_cast<int>(c.size()));
  return m;
}

bool MultiComposition::is_partition() const {
  for (const auto& c : comps)
    for (std::size_t i = 1; i < c.size(); ++i)
      if (c[i] > c[i - 1]) return false;
  return true;
}

std::vector<int> MultiComposition::flatten() const {
  std::vector<int> v;
  for (const auto& c : comps) v.insert(v.end(), c.begin(), c.end());
  return v;
}

std::string MultiComposition::to_string() const { return nested_to_string(comps); }

// --- Gamma(m) ---------------------------------------------------------------

std::vector<GammaIndex> gamma_set(const Bounds& m) {
  std::vector<GammaIndex> out;
  for (int k = 1; k <= static_cast<int>(m.size()); ++k)
    for (int i = 1; i <= m[k - 1]; ++i) out.push_back({i, k});
  return out;
}

std::vector<GammaIndex> gamma_prime_set(const Bounds& m) {
  auto out = gamma_set(m);
  if (!out.empty()) out.pop_back();
  return out;
}

int gamma_position(const Bounds& m, GammaIndex idx) {
  int pos = idx.i;
  for (int j = 1; j < idx.k; ++j) pos += m[j - 1];
  return pos;
}

GammaIndex gamma_next(const Bounds& m, GammaIndex idx) {
  if (idx.i < m[idx.k - 1]) return {idx.i + 1, idx.k};
  return {1, idx.k + 1};
}

Bounds default_bounds(int n, int r) { return Bounds(r, std::max(n, 1)); }

MultiComposition pad(const MultiPartition& la, const Bounds& m) {
  if (static_cast<int>(m.size()) != la.r())
    throw std::invalid_argument("bounds length does not match the number of components");
  MultiComposition mu;
  for (int k = 0; k < la.r(); ++k) {
    if (static_cast<int>(la.comps[k].size()) > m[k])
      throw std::invalid_argument("multipartition " + la.to_string() + " exceeds row bounds");
    auto c = la.comps[k];
    c.resize(m[k], 0);
    mu.comps.push_back(std::move(c));
  }
  return mu;
}

MultiPartition trim(const MultiComposition& mu) { return MultiPartition(mu.comps); }

// --- enumeration ------------------------------------------------------------

namespace {

void partitions_rec(int n, int max_part, Partition& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(n - p, p, cur, out);
    cur.pop_back();
  }
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  Partition cur;
  partitions_rec(n, n, cur, out);
  return out;
}

}  // namespace

std::vector<MultiPartition> enumerate_multipartitions(int n, int r) {
  if (n < 0 || r < 1) throw std::invalid_argument("enumerate_multipartitions needs n >= 0, r >= 1");
  std::vector<std::vector<Partition>> by_size(n + 1);
  for (int s = 0; s <= n; ++s) by_size[s] = partitions_of(s);
  std::vector<MultiPartition> out;
  std::vector<Partition> cur;
  std::function<void(int, int)> rec = [&](int k, int left) {
    if (k == r) {
      if (left == 0) out.emplace_back(cur);
      return;
    }
    for (int s = (k == r - 1 ? left : 0); s <= left; ++s)
      for (const auto& p : by_size[s]) {
        cur.push_back(p);
        rec(k + 1, left - s);
        cur.pop_back();
      }
  };
  rec(0, n);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::vector<MultiComposition> enumerate_compositions(int n, const Bounds& m) {
  int total = std::accumulate(m.begin(), m.end(), 0);
  std::vector<std::vector<int>> flats;
  std::vector<int> cur(total, 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == total - 1) {
      cur[pos] = left;
      flats.push_back(cur);
      return;
    }
    for (int v = left; v >= 0; --v) {
      cur[pos] = v;
      rec(pos + 1, left - v);
    }
  };
  std::vector<MultiComposition> out;
  if (total == 0) return out;
  rec(0, n);
  for (const auto& f : flats) {
    MultiComposition mu;
    int p = 0;
    for (int mk : m) {
      mu.comps.emplace_back(f.begin() + p, f.begin() + p + mk);
      p += mk;
    }
    out.push_back(std::move(mu));
  }
  return out;
}

// --- nodes ------------------------------------------------------------------

namespace {

bool node_greater(const Node& a, const Node& b) {
  // Strict total order on a set of nodes with distinct (row, comp).
  return node_precedes(a, b);
}

}  // namespace

std::vector<Node> removable_nodes(const MultiPartition& la) {
  std::vector<Node> out;
  for (int k = 1; k <= la.r(); ++k) {
    const auto& p = la.comps[k - 1];
    for (int i = 1; i <= static_cast<int>(p.size()); ++i)
      if (la.part(i + 1, k) < p[i - 1]) out.push_back({i, p[i - 1], k});
  }
  std::sort(out.begin(), out.end(), node_greater);
  return out;
}

std::vector<Node> addable_nodes(const MultiPartition& la, const std::optional<Bounds>& m) {
  std::vector<Node> out;
  for (int k = 1; k <= la.r(); ++k) {
    const int rows = static_cast<int>(la.comps[k - 1].size());
    for (int i = 1; i <= rows + 1; ++i) {
      if (m && i > (*m)[k - 1]) break;
      if (i == 1 || la.part(i - 1, k) > la.part(i, k)) out.push_back({i, la.part(i, k) + 1, k});
    }
  }
  std::sort(out.begin(), out.end(), node_greater);
  return out;
}

MultiPartition remove_node(const MultiPartition& la, const Node& x) {
  auto rem = removable_nodes(la);
  if (std::find(rem.begin(), rem.end(), x) == rem.end())
    throw std::invalid_argument("node " + x.to_string() + " is not removable from " + la.to_string());
  auto comps = la.comps;
  comps[x.comp - 1][x.row - 1] -= 1;
  return MultiPartition(std::move(comps));
}

MultiPartition add_node(const MultiPartition& la, const Node& x) {
  auto add = addable_nodes(la);
  if (std::find(add.begin(), add.end(), x) == add.end())
    throw std::invalid_argument("node " + x.to_string() + " is not addable to " + la.to_string());
  auto comps = la.comps;
  auto& p = comps[x.comp - 1];
  if (static_cast<int>(p.size()) < x.row) p.resize(x.row, 0);
  p[x.row - 1] += 1;
  return MultiPartition(std::move(comps));
}

// --- gamma ------------------------------------------------------------------

Bounds shrink_bounds(const Bounds& m) {
  Bounds mp = m;
  if (mp.empty() || mp.back() < 2) throw std::invalid_argument("cannot shrink bounds below m_r = 1");
  mp.back() -= 1;
  return mp;
}

MultiComposition gamma(const MultiComposition& la, const Bounds& m) {
  if (la.bounds() != shrink_bounds(m))
    throw std::invalid_argument("gamma: source bounds must be (m_1, ..., m_r - 1)");
  MultiComposition mu = la;
  mu.comps.back().push_back(1);
  return mu;
}

MultiComposition gamma_inv(const MultiComposition& mu) {
  if (!is_in_gamma_image(mu))
    throw std::invalid_argument("gamma_inv: last part of the final component is not 1");
  MultiComposition la = mu;
  la.comps.back().pop_back();
  return la;
}

bool is_in_gamma_image(const MultiComposition& mu) {
  return !mu.comps.empty() && !mu.comps.back().empty() && mu.comps.back().back() == 1;
}

bool dominance_ge(const MultiComposition& la, const MultiComposition& mu) {
  if (la.bounds() != mu.bounds()) throw std::invalid_argument("dominance_ge: bounds differ");
  if (la.size() != mu.size()) throw std::invalid_argument("dominance_ge: sizes differ");
  auto a = la.flatten();
  auto b = mu.flatten();
  long sa = 0, sb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sa += a[i];
    sb += b[i];
    if (sa < sb) return false;
  }
  return true;
}

// --- tableaux ---------------------------------------------------------------

namespace {

template <class T>
std::vector<std::vector<std::vector<T>>> shaped(const MultiPartition& la, T fill) {
  std::vector<std::vector<std::vector<T>>> e(la.r());
  for (int k = 0; k < la.r(); ++k)
    for (int len : la.comps[k]) e[k].emplace_back(len, fill);
  return e;
}

/// Nodes of [la] in reading order (component, row, column).
std::vector<Node> reading_order(const MultiPartition& la) {
  std::vector<Node> out;
  for (int k = 1; k <= la.r(); ++k)
    for (int i = 1; i <= static_cast<int>(la.comps[k - 1].size()); ++i)
      for (int j = 1; j <= la.comps[k - 1][i - 1]; ++j) out.push_back({i, j, k});
  return out;
}

}  // namespace

bool StdTableau::is_standard() const {
  const int n = shape.size();
  std::vector<bool> seen(n + 1, false);
  for (const auto& x : reading_order(shape)) {
    int v = at(x);
    if (v < 1 || v > n || seen[v]) return false;
    seen[v] = true;
    if (x.col > 1 && at({x.row, x.col - 1, x.comp}) >= v) return false;
    if (x.row > 1 && at({x.row - 1, x.col, x.comp}) >= v) return false;
  }
  return true;
}

bool SemiStdTableau::is_semistandard() const {
  for (const auto& x : reading_order(shape)) {
    const Label& v = at(x);
    if (v.a < 1 || v.c < x.comp) return false;
    if (x.col > 1 && at({x.row, x.col - 1, x.comp}) > v) return false;
    if (x.row > 1 && !(at({x.row - 1, x.col, x.comp}) < v)) return false;
  }
  return true;
}

MultiComposition SemiStdTableau::weight(const Bounds& m) const {
  MultiComposition mu;
  for (int mk : m) mu.comps.emplace_back(mk, 0);
  for (const auto& x : reading_order(shape)) {
    const Label& v = at(x);
    if (v.c < 1 || v.c > static_cast<int>(m.size()) || v.a < 1 || v.a > m[v.c - 1])
      throw std::invalid_argument("tableau label outside the bounds");
    mu.at(v.a, v.c) += 1;
  }
  return mu;
}

std::vector<StdTableau> enumerate_std_tableaux(const MultiPartition& la) {
  std::vector<StdTableau> out;
  const int n = la.size();
  StdTableau t{la, shaped(la, 0)};
  // Place n, n-1, ..., 1 into removable positions of the shrinking shape.
  std::function<void(const MultiPartition&, int)> rec = [&](const MultiPartition& cur, int v) {
    if (v == 0) {
      out.push_back(t);
      return;
    }
    for (const auto& x : removable_nodes(cur)) {
      t.entries[x.comp - 1][x.row - 1][x.col - 1] = v;
      rec(remove_node(cur, x), v - 1);
    }
  };
  rec(la, n);
  std::sort(out.begin(), out.end(), [](const StdTableau& a, const StdTableau& b) {
    return a.entries < b.entries;
  });
  return out;
}

std::uint64_t std_count(const MultiPartition& la) {
  std::map<MultiPartition, std::uint64_t> memo;
  std::function<std::uint64_t(const MultiPartition&)> rec = [&](const MultiPartition& cur) {
    if (cur.size() == 0) return std::uint64_t{1};
    if (auto it = memo.find(cur); it != memo.end()) return it->second;
    std::uint64_t s = 0;
    for (const auto& x : removable_nodes(cur)) s += rec(remove_node(cur, x));
    memo.emplace(cur, s);
    return s;
  };
  return rec(la);
}

namespace {

/// Backtracking over SST fillings in reading order.  `remaining` (optional)
/// holds the multiplicity still available for each label.
template <class Visit>
void fill_ssts(const MultiPartition& la, const Bounds& m,
               std::map<Label, int>* remaining, Visit&& visit) {
  const auto order = reading_order(la);
  SemiStdTableau T{la, shaped(la, Label{})};
  const int r = la.r();
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx == order.size()) {
      visit(T);
      return;
    }
    const Node& x = order[idx];
    Label lo{1, x.comp};
    bool strict = false;
    if (x.col > 1) lo = std::max(lo, T.at({x.row, x.col - 1, x.comp}));
    Label above{};
    if (x.row > 1) {
      above = T.at({x.row - 1, x.col, x.comp});
      strict = true;
    }
    for (int c = x.comp; c <= r; ++c) {
      for (int a = 1; a <= m[c - 1]; ++a) {
        Label v{a, c};
        if (v < lo) continue;
        if (strict && !(above < v)) continue;
        if (remaining) {
          auto it = remaining->find(v);
          if (it == remaining->end() || it->second == 0) continue;
          --it->second;
          T.entries[x.comp - 1][x.row - 1][x.col - 1] = v;
          rec(idx + 1);
          ++it->second;
        } else {
          T.entries[x.comp - 1][x.row - 1][x.col - 1] = v;
          rec(idx + 1);
        }
      }
    }
  };
  rec(0);
}

}  // namespace

std::vector<SemiStdTableau> enumerate_ssts(const MultiPartition& la, const MultiComposition& mu) {
  if (la.r() != mu.r()) throw std::invalid_argument("enumerate_ssts: component counts differ");
  if (la.size() != mu.size()) return {};
  std::map<Label, int> remaining;
  for (int k = 1; k <= mu.r(); ++k)
    for (int i = 1; i <= static_cast<int>(mu.comps[k - 1].size()); ++i)
      if (mu.at(i, k) > 0) remaining[{i, k}] = mu.at(i, k);
  std::vector<SemiStdTableau> out;
  fill_ssts(la, mu.bounds(), &remaining, [&](const SemiStdTableau& T) { out.push_back(T); });
  return out;
}

std::uint64_t weyl_dim(const MultiPartition& la, const Bounds& m) {
  if (static_cast<int>(m.size()) != la.r()) throw std::invalid_argument("weyl_dim: bounds length");
  std::uint64_t count = 0;
  fill_ssts(la, m, nullptr, [&](const SemiStdTableau&) { ++count; });
  return count;
}

SemiStdTableau canonical_sst(const MultiPartition& la) {
  SemiStdTableau T{la, shaped(la, Label{})};
  for (const auto& x : reading_order(la)) T.entries[x.comp - 1][x.row - 1][x.col - 1] = {x.row, x.comp};
  return T;
}

StdTableau superstandard(const MultiComposition& mu) {
  // Diagram rows may be empty in the middle; entries keep the padded row layout.
  StdTableau t;
  t.shape = trim(mu);
  t.entries.resize(mu.r());
  int v = 0;
  for (int k = 0; k < mu.r(); ++k)
    for (int len : mu.comps[k]) {
      std::vector<int> row(len);
      for (int j = 0; j < len; ++j) row[j] = ++v;
      t.entries[k].push_back(std::move(row));
    }
  for (int k = 0; k < mu.r(); ++k)
    while (!t.entries[k].empty() && t.entries[k].back().empty()) t.entries[k].pop_back();
  return t;
}

StdTableau superstandard(const MultiPartition& la) {
  return superstandard(pad(la, [&] {
    Bounds m;
    for (const auto& p : la.comps) m.push_back(std::max<int>(1, static_cast<int>(p.size())));
    return m;
  }()));
}

Perm tableau_perm(const StdTableau& t) {
  const int n = t.shape.size();
  StdTableau base = superstandard(t.shape);
  Perm d(n, 0);
  for (const auto& x : reading_order(t.shape)) d[base.at(x) - 1] = t.at(x);
  return d;
}

SemiStdTableau mu_of_tableau(const StdTableau& t, const MultiComposition& mu) {
  const int n = mu.size();
  if (t.shape.size() != n) throw std::invalid_argument("mu_of_tableau: size mismatch");
  // Label carried by each entry value under t^mu.
  std::vector<Label> label_of(n + 1);
  int v = 0;
  for (int k = 1; k <= mu.r(); ++k)
    for (int a = 1; a <= static_cast<int>(mu.comps[k - 1].size()); ++a)
      for (int b = 0; b < mu.at(a, k); ++b) label_of[++v] = {a, k};
  SemiStdTableau T{t.shape, shaped(t.shape, Label{})};
  for (const auto& x : reading_order(t.shape))
    T.entries[x.comp - 1][x.row - 1][x.col - 1] = label_of[t.at(x)];
  return T;
}

SemiStdTableau special_sst(const MultiPartition& la, const Node& x, const Bounds& m) {
  auto rem = removable_nodes(la);
  if (std::find(rem.begin(), rem.end(), x) == rem.end())
    throw std::invalid_argument("special_sst: node " + x.to_string() + " is not removable");
  SemiStdTableau T = canonical_sst(la);
  T.entries[x.comp - 1][x.row - 1][x.col - 1] = {m.back(), static_cast<int>(m.size())};
  return T;
}

// --- permutations -----------------------------------------------------------

Perm identity_perm(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 1);
  return p;
}

Perm compose(const Perm& a, const Perm& b) {
  Perm c(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = a[b[i] - 1];
  return c;
}

Perm inverse(const Perm& w) {
  Perm v(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) v[w[i] - 1] = static_cast<int>(i) + 1;
  return v;
}

int perm_length(const Perm& w) {
  int inv = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++inv;
  return inv;
}

std::vector<int> reduced_word(const Perm& w) {
  // Strip right descents: w = (w s_i) s_i whenever w(i) > w(i+1).
  Perm cur = w;
  std::vector<int> rev;
  bool found = true;
  while (found) {
    found = false;
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      if (cur[i] > cur[i + 1]) {
        std::swap(cur[i], cur[i + 1]);
        rev.push_back(static_cast<int>(i) + 1);
        found = true;
        break;
      }
    }
  }
  return {rev.rbegin(), rev.rend()};
}

}  // namespace cycloschur
