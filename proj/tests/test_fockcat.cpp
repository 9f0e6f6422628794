#include <random>
#include <set>

#include "cycloschur/fockcat.hpp"
#include "doctest.h"

using namespace cycloschur;

namespace {

MultiPartition mp(std::vector<Partition> c) { return MultiPartition(std::move(c)); }

// [e_i, f_j] on one basis vector, expanded the long way
FockVector bracket(int i, int j, const MultiPartition& la, const Charge& ch) {
  FockVector b = basis_vector(la);
  FockVector out = e_apply(i, f_apply(j, b, ch), ch);
  for (const auto& [mu, c] : f_apply(j, e_apply(i, b, ch), ch)) {
    out[mu] -= c;
    if (out[mu] == 0) out.erase(mu);
  }
  return out;
}

}  // namespace

TEST_CASE("blocks at n=2, r=2, e=2") {
  const Charge ch{{0, 0}, 2};
  auto b = blocks(2, 2, ch);
  REQUIRE(b.size() == 2);
  CHECK(b.at({2, 0}) == std::vector<MultiPartition>{mp({{1}, {1}})});
  auto big = b.at({1, 1});
  CHECK(big.size() == 4);
  CHECK(std::set<MultiPartition>(big.begin(), big.end()) ==
        std::set<MultiPartition>{mp({{2}, {}}), mp({{1, 1}, {}}), mp({{}, {2}}), mp({{}, {1, 1}})});
  CHECK(block_key(MultiPartition::empty(3), Charge{{0, 0, 0}, 3}) == BlockKey{0, 0, 0});
  CHECK(residue_keys(2, 2, ch) == std::vector<BlockKey>{{1, 1}, {2, 0}});
}

TEST_CASE("block keys move by unit vectors") {
  const Charge ch{{0, 2, 1}, 3};
  for (int n = 1; n <= 4; ++n)
    for (const auto& la : enumerate_multipartitions(n, 3))
      for (const auto& x : removable_nodes(la)) {
        auto k = block_key(la, ch);
        --k[residue(x, ch)];
        CHECK(block_key(remove_node(la, x), ch) == k);
      }
}

TEST_CASE("chevalley operators") {
  const Charge ch{{0, 0}, 2};
  auto vac = basis_vector(MultiPartition::empty(2));
  CHECK(f_apply(0, vac, ch) == FockVector{{mp({{1}, {}}), 1}, {mp({{}, {1}}), 1}});
  CHECK(e_apply(0, vac, ch).empty());
  CHECK(e_apply(1, vac, ch).empty());
  CHECK(e_apply(0, basis_vector(mp({{1}, {1}})), ch) == FockVector{{mp({{1}, {}}), 1}, {mp({{}, {1}}), 1}});
  // bounded rows
  auto v = basis_vector(mp({{1}, {}}));
  // 1-nodes of ((1),()): (1,2,1) and (2,1,1)
  CHECK(f_apply(1, v, ch).size() == 2);
  CHECK(f_apply(1, v, ch, Bounds{1, 1}) == FockVector{{mp({{2}, {}}), 1}});
  CHECK_THROWS_AS(f_apply(2, v, ch), std::invalid_argument);
  CHECK(to_string(f_apply(0, vac, ch)) == "|[[],[1]]> + |[[1],[]]>");
  CHECK(to_string(FockVector{}) == "0");
}

TEST_CASE("commutator examples") {
  auto d = bracket(0, 0, MultiPartition::empty(2), Charge{{0, 1}, 2});
  CHECK(d == FockVector{{MultiPartition::empty(2), 1}});
  auto z = bracket(0, 0, mp({{1}, {}}), Charge{{0, 0}, 2});
  CHECK(z.empty());
  std::mt19937 rng(3);
  const Charge ch{{0, 1, 1}, 3};
  for (int trial = 0; trial < 40; ++trial) {
    int n = static_cast<int>(rng() % 6);
    auto all = enumerate_multipartitions(n, 3);
    const auto& la = all[rng() % all.size()];
    int i = static_cast<int>(rng() % 3), j = static_cast<int>((i + 1 + rng() % 2) % 3);
    CHECK(bracket(i, j, la, ch).empty());
  }
}

TEST_CASE("commutator sweep") {
  for (int e = 2; e <= 4; ++e)
    for (int r = 1; r <= 2; ++r) {
      Charge ch{std::vector<int>(r, 0), e};
      ch.s.back() = 1;
      for (int i = 0; i < e; ++i)
        for (int j = 0; j < e; ++j) {
          auto res = commutator_check(i, j, 4, r, ch);
          INFO(res.detail);
          CHECK(res.ok);
          CHECK(res.instances > 0);
        }
    }
}

TEST_CASE("categorification") {
  auto res = categorification_check(4, 2, Charge{{0, 0}, 2});
  INFO(res.detail);
  CHECK(res.ok);
  auto res3 = categorification_check(3, 2, Charge{{0, 1}, 3}, [](int level) { return Bounds{level + 1, level + 1}; });
  INFO(res3.detail);
  CHECK(res3.ok);
  // i-res of ((2),(1)) at i=1 matches e_1
  auto e1 = e_apply(1, basis_vector(mp({{2}, {1}})), Charge{{0, 0}, 2});
  CHECK(e1 == FockVector{{mp({{1}, {1}}), 1}});
}

TEST_CASE("block projection of f_0") {
  const Charge ch{{0, 0}, 2};
  auto b = blocks(2, 2, ch);
  for (const auto& la : b.at({1, 1}))
    for (const auto& [mu, c] : f_apply(0, basis_vector(la), ch)) {
      CHECK(block_key(mu, ch) == BlockKey{2, 1});
      CHECK(c == 1);
    }
}

TEST_CASE("fock matrices") {
  const Charge ch{{0, 0}, 2};
  auto F = fock_matrix('f', 0, 0, 2, ch);
  CHECK(F.cols.size() == 1);
  CHECK(F.rows.size() == 2);
  CHECK(F.entries.size() == 2);
  for (int n = 0; n <= 3; ++n)
    for (char op : {'e', 'f'})
      for (int i = 0; i < 2; ++i) {
        auto M = fock_matrix(op, i, n, 2, ch);
        for (const auto& ent : M.entries) {
          CHECK(ent.value == 1);
          CHECK(M.rows[ent.row].size() == (op == 'e' ? n - 1 : n + 1));
        }
      }
  CHECK(fock_matrix('e', 0, 0, 2, ch).rows.empty());
  CHECK_THROWS_AS(fock_matrix('x', 0, 1, 2, ch), std::invalid_argument);
}
