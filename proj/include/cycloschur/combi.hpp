#pragma once

// Multipartitions, multicompositions, nodes and tableaux.
//
// Conventions used throughout the library:
//   * rows, columns, components and tableau entries are 1-based;
//   * a MultiPartition is stored trimmed (no trailing zero parts), the row
//     bounds m = (m_1, ..., m_r) travel separately as a Bounds vector;
//   * a MultiComposition is stored padded: component k has exactly m_k entries.
//   * the weight lattice coordinates are ordered (1,1), ..., (m_1,1), (1,2), ...

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cycloschur {

using Partition = std::vector<int>;
using Bounds = std::vector<int>;
/// One-line notation of a permutation of {1..n}: perm[i-1] = w(i).
using Perm = std::vector<int>;

struct Node {
  int row = 1;
  int col = 1;
  int comp = 1;

  auto operator<=>(const Node&) const = default;
  std::string to_string() const;
};

/// The order x > y: k < k', or k = k' and i < i'.  Columns are ignored.
bool node_precedes(const Node& x, const Node& y);

struct MultiPartition {
  std::vector<Partition> comps;

  MultiPartition() = default;
  explicit MultiPartition(std::vector<Partition> c);
  static MultiPartition empty(int r) { return MultiPartition(std::vector<Partition>(r)); }

  int r() const { return static_cast<int>(comps.size()); }
  int size() const;
  /// Part i of component k (both 1-based); 0 past the end.
  int part(int i, int k) const;
  bool contains(const Node& x) const;

  /// Throws unless every component is weakly decreasing and positive.
  void validate() const;

  auto operator<=>(const MultiPartition&) const = default;
  bool operator==(const MultiPartition&) const = default;

  /// "[[2,1],[1]]", empty component "[]".
  std::string to_string() const;
  static MultiPartition parse(const std::string& text);
};

struct MultiComposition {
  std::vector<std::vector<int>> comps;

  MultiComposition() = default;
  explicit MultiComposition(std::vector<std::vector<int>> c) : comps(std::move(c)) {}

  int r() const { return static_cast<int>(comps.size()); }
  int size() const;
  Bounds bounds() const;
  int at(int i, int k) const { return comps[k - 1][i - 1]; }
  int& at(int i, int k) { return comps[k - 1][i - 1]; }
  bool is_partition() const;
  /// Weight-lattice coordinates in Gamma(m) order.
  std::vector<int> flatten() const;

  auto operator<=>(const MultiComposition&) const = default;
  bool operator==(const MultiComposition&) const = default;

  std::string to_string() const;
};

/// Index pair (i,k) of Gamma(m).
struct GammaIndex {
  int i = 1;
  int k = 1;
  auto operator<=>(const GammaIndex&) const = default;
};

/// Gamma(m) in its linear order; Gamma'(m) drops the last entry (m_r, r).
std::vector<GammaIndex> gamma_set(const Bounds& m);
std::vector<GammaIndex> gamma_prime_set(const Bounds& m);
/// Linear position sum_{j<k} m_j + i.
int gamma_position(const Bounds& m, GammaIndex idx);
/// Successor (i+1,k) with the wrap (m_k + 1, k) = (1, k + 1).
GammaIndex gamma_next(const Bounds& m, GammaIndex idx);

/// Minimal legal default bound m_k = max(n, 1).
Bounds default_bounds(int n, int r);

MultiComposition pad(const MultiPartition& la, const Bounds& m);
MultiPartition trim(const MultiComposition& mu);

/// All r-partitions of n, lexicographically descending on the component list.
std::vector<MultiPartition> enumerate_multipartitions(int n, int r);
/// All elements of Lambda_{n,r}(m), lexicographic on the flattened vector, descending.
std::vector<MultiComposition> enumerate_compositions(int n, const Bounds& m);

/// Removable nodes, sorted with the >-largest first.
std::vector<Node> removable_nodes(const MultiPartition& la);
/// Addable nodes, sorted with the >-largest first.  With bounds, a node in row
/// i of component k is only addable when i <= m_k.
std::vector<Node> addable_nodes(const MultiPartition& la, const std::optional<Bounds>& m = {});
MultiPartition remove_node(const MultiPartition& la, const Node& x);
MultiPartition add_node(const MultiPartition& la, const Node& x);

/// gamma: Lambda_{n,r}(m') -> Lambda_{n+1,r}(m), appending a final part 1 to
/// component r.  `m` is the bound vector of the target.
MultiComposition gamma(const MultiComposition& la, const Bounds& m);
/// Throws std::invalid_argument unless the last part of component r is 1.
MultiComposition gamma_inv(const MultiComposition& mu);
bool is_in_gamma_image(const MultiComposition& mu);
/// m' = (m_1, ..., m_{r-1}, m_r - 1).
Bounds shrink_bounds(const Bounds& m);

/// la >= mu in the dominance order on the weight lattice.  Both must have
/// the same bounds and size (std::invalid_argument otherwise).
bool dominance_ge(const MultiComposition& la, const MultiComposition& mu);

// --- tableaux ---------------------------------------------------------------

/// entries[k-1][i-1][j-1] = t((i,j,k)).
struct StdTableau {
  MultiPartition shape;
  std::vector<std::vector<std::vector<int>>> entries;

  int at(const Node& x) const { return entries[x.comp - 1][x.row - 1][x.col - 1]; }
  bool is_standard() const;
  bool operator==(const StdTableau&) const = default;
};

struct Label {
  int a = 1;  // row index of the weight
  int c = 1;  // component index of the weight
  auto operator<=>(const Label& o) const {
    if (auto cmp = c <=> o.c; cmp != 0) return cmp;
    return a <=> o.a;
  }
  bool operator==(const Label&) const = default;
};

struct SemiStdTableau {
  MultiPartition shape;
  std::vector<std::vector<std::vector<Label>>> entries;

  const Label& at(const Node& x) const { return entries[x.comp - 1][x.row - 1][x.col - 1]; }
  /// Conditions (i)-(iii): component floor, weak rows, strict columns.
  bool is_semistandard() const;
  /// Weight with the given bounds; throws if a label exceeds them.
  MultiComposition weight(const Bounds& m) const;
  bool operator==(const SemiStdTableau&) const = default;
};

std::vector<StdTableau> enumerate_std_tableaux(const MultiPartition& la);
/// |Std(la)|, by the branching recursion over removable nodes.
std::uint64_t std_count(const MultiPartition& la);

/// T_0(la, mu), in lexicographic order of the reading word.
std::vector<SemiStdTableau> enumerate_ssts(const MultiPartition& la, const MultiComposition& mu);
/// sum over mu in Lambda(m) of |T_0(la, mu)|.
std::uint64_t weyl_dim(const MultiPartition& la, const Bounds& m);
/// T^la((i,j,k)) = (i,k).
SemiStdTableau canonical_sst(const MultiPartition& la);

/// t^mu, filling [mu] in reading order.  For a composition the diagram is
/// the padded row-length diagram.
StdTableau superstandard(const MultiComposition& mu);
StdTableau superstandard(const MultiPartition& la);
/// d(t) with t((i,j,k)) = d(t)(t^la((i,j,k))).
Perm tableau_perm(const StdTableau& t);
/// mu(t): the node holding t^mu((a,b,c)) gets label (a,c).
SemiStdTableau mu_of_tableau(const StdTableau& t, const MultiComposition& mu);
/// T_x^la: label (m_r, r) at x, (row, comp) elsewhere.
SemiStdTableau special_sst(const MultiPartition& la, const Node& x, const Bounds& m);

// --- permutations -----------------------------------------------------------

Perm identity_perm(int n);
Perm compose(const Perm& a, const Perm& b);  // (a b)(i) = a(b(i))
Perm inverse(const Perm& w);
int perm_length(const Perm& w);  // number of inversions
/// Reduced word (i_1, ..., i_k) with w = s_{i_1} ... s_{i_k}.
std::vector<int> reduced_word(const Perm& w);

}  // namespace cycloschur
