#pragma once

// Restriction and induction of Weyl modules between levels n and n+1:
// ordered factor lists of the standard (and costandard) filtrations, their
// residue-refined sublists, and the dimension identities behind them.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cycloschur/combi.hpp"

namespace cycloschur {

struct Charge {
  std::vector<int> s;
  int e = 2;
};

/// (col - row + s_c) mod e, in 0..e-1.
int residue(const Node& x, const Charge& charge);

enum class Direction { Res, Ind };

struct FiltrationFactor {
  Node node;
  MultiPartition shape;
  int residue = -1;  // -1 when no charge was supplied
  std::uint64_t dim = 0;
};

struct FiltrationReport {
  Direction direction = Direction::Res;
  MultiPartition source;
  /// Costandard reading: N_i / N_{i-1} = nabla(shape_i), same list.
  bool costandard = false;
  std::vector<FiltrationFactor> factors;
  /// Bounds the quotient dimensions were computed with.
  Bounds bounds;
};

/// Bounds used when none are given: m_k = max(size, 2).
Bounds branching_bounds(int size, int r);

/// Factors Delta(la \ x) over the removable nodes x, largest first.  `m` are
/// the level |la| bounds; quotient dimensions use m'.
FiltrationReport res_filtration(const MultiPartition& la, const std::optional<Bounds>& m = {},
                                bool costandard = false);
/// Factors Delta(mu u x) over the addable nodes allowed by m (the level
/// |mu|+1 bounds), smallest first.
FiltrationReport ind_filtration(const MultiPartition& mu, const Bounds& m);

/// Sublists at residue i, order preserved.
FiltrationReport i_res_filtration(const MultiPartition& la, int i, const Charge& charge,
                                  const std::optional<Bounds>& m = {});
FiltrationReport i_ind_filtration(const MultiPartition& mu, int i, const Charge& charge,
                                  const Bounds& m);

/// sum over mu in the gamma image of |T_0(la, mu)| against
/// sum over removable x of weyl_dim(la \ x, m').
bool res_dim_check(const MultiPartition& la, const Bounds& m, const Bounds& m_prime);

/// sum over addable x (unbounded rows) of |Std(mu u x)| = r (n+1) |Std(mu)|
/// for every mu with |mu| <= n_max.
bool specht_induction_check(int n_max, int r);

std::string to_string(Direction d);

}  // namespace cycloschur
