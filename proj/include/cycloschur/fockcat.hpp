#pragma once

// Level-r Fock space F[s] with the Chevalley action of affine sl_e at v = 1,
// residue blocks, and consistency checks against the branching rules.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cycloschur/branching.hpp"
#include "cycloschur/combi.hpp"

namespace cycloschur {

using BlockKey = std::vector<int>;
using FockVector = std::map<MultiPartition, mpz_class>;

/// (r_0(la), ..., r_{e-1}(la)): number of nodes of each residue.
BlockKey block_key(const MultiPartition& la, const Charge& charge);
/// Lambda^+_{n,r} grouped by block key, keys ascending, members in enumeration order.
std::map<BlockKey, std::vector<MultiPartition>> blocks(int n, int r, const Charge& charge);
/// R_{n,e}: the keys realized by some r-partition of n.
std::vector<BlockKey> residue_keys(int n, int r, const Charge& charge);

FockVector basis_vector(const MultiPartition& la);
/// e_i: sum over removable i-nodes.
FockVector e_apply(int i, const FockVector& v, const Charge& charge);
/// f_i: sum over addable i-nodes; with bounds only rows <= m_k are used.
FockVector f_apply(int i, const FockVector& v, const Charge& charge,
                   const std::optional<Bounds>& m = {});
std::string to_string(const FockVector& v);

struct CheckResult {
  bool ok = true;
  std::size_t instances = 0;
  std::string detail;  // first failure
  explicit operator bool() const { return ok; }
};

/// [e_i, f_j] |la> = delta_{ij} (addable_i - removable_i) |la> for |la| <= n_max.
CheckResult commutator_check(int i, int j, int n_max, int r, const Charge& charge);

/// Bounds for level n; default m_k = max(n, 2).
using BoundsSchedule = std::function<Bounds(int level)>;

/// i-refined branching lists agree with the supports of e_i / f_i, and block
/// keys move by the unit vector at i, for all |la| <= n_max.
CheckResult categorification_check(int n_max, int r, const Charge& charge,
                                   const BoundsSchedule& schedule = {});

struct SparseMatrix {
  std::vector<MultiPartition> rows;
  std::vector<MultiPartition> cols;
  struct Entry {
    std::size_t row;
    std::size_t col;
    mpz_class value;
  };
  std::vector<Entry> entries;
};

/// Matrix of e_i (degree n -> n-1) or f_i (n -> n+1) on the multipartition basis.
SparseMatrix fock_matrix(char op, int i, int n, int r, const Charge& charge);

}  // namespace cycloschur
