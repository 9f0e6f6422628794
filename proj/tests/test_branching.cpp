#include <set>

#include "cycloschur/branching.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cycloschur;

namespace {

MultiPartition mp(std::vector<Partition> c) { return MultiPartition(std::move(c)); }

std::vector<MultiPartition> shapes(const FiltrationReport& rep) {
  std::vector<MultiPartition> out;
  for (const auto& f : rep.factors) out.push_back(f.shape);
  return out;
}

std::vector<Node> nodes_of(const FiltrationReport& rep) {
  std::vector<Node> out;
  for (const auto& f : rep.factors) out.push_back(f.node);
  return out;
}

}  // namespace

TEST_CASE("residues") {
  CHECK(residue({1, 1, 1}, Charge{{0}, 2}) == 0);
  CHECK(residue({2, 1, 3}, Charge{{0, 0, 0}, 4}) == 3);
  CHECK(residue({1, 3, 1}, Charge{{5}, 3}) == 1);
  CHECK(residue({4, 1, 1}, Charge{{-7}, 3}) == 2);
}

TEST_CASE("res examples") {
  auto rep = res_filtration(mp({{2}, {1}}));
  CHECK(rep.direction == Direction::Res);
  CHECK(shapes(rep) == std::vector<MultiPartition>{mp({{1}, {1}}), mp({{2}, {}})});
  CHECK(nodes_of(rep) == std::vector<Node>{{1, 2, 1}, {1, 1, 2}});

  auto single = res_filtration(mp({{}, {1}}));
  REQUIRE(single.factors.size() == 1);
  CHECK(single.factors[0].shape == MultiPartition::empty(2));

  auto column = res_filtration(mp({{1, 1, 1}}));
  CHECK(shapes(column) == std::vector<MultiPartition>{mp({{1, 1}})});

  auto cost = res_filtration(mp({{2}, {1}}), std::nullopt, true);
  CHECK(cost.costandard);
  CHECK(shapes(cost) == shapes(rep));
}

TEST_CASE("ind examples") {
  auto rep = ind_filtration(mp({{}, {1}}), Bounds{2, 2});
  CHECK(shapes(rep) == std::vector<MultiPartition>{mp({{}, {1, 1}}), mp({{}, {2}}), mp({{1}, {1}})});
  CHECK(nodes_of(rep) == std::vector<Node>{{2, 1, 2}, {1, 2, 2}, {1, 1, 1}});
  auto vac = ind_filtration(MultiPartition::empty(3), Bounds{1, 1, 1});
  REQUIRE(vac.factors.size() == 3);
  for (int c = 1; c <= 3; ++c) CHECK(vac.factors[c - 1].node.comp == 4 - c);
}

TEST_CASE("factor dimensions") {
  auto rep = ind_filtration(mp({{}, {1}}), Bounds{2, 2});
  for (const auto& f : rep.factors) CHECK(f.dim == weyl_dim(f.shape, Bounds{2, 2}));
  auto res = res_filtration(mp({{1}, {1}}), Bounds{2, 2});
  CHECK(res.bounds == Bounds{2, 1});
  for (const auto& f : res.factors) CHECK(f.dim == weyl_dim(f.shape, Bounds{2, 1}));
}

TEST_CASE("i-refined examples") {
  auto rep = i_res_filtration(mp({{2}, {1}}), 1, Charge{{0, 0}, 2});
  REQUIRE(rep.factors.size() == 1);
  CHECK(rep.factors[0].node == Node{1, 2, 1});
  CHECK(rep.factors[0].residue == 1);
  CHECK(rep.factors[0].shape == mp({{1}, {1}}));

  auto ind = i_ind_filtration(MultiPartition::empty(2), 0, Charge{{0, 1}, 2}, Bounds{1, 1});
  REQUIRE(ind.factors.size() == 1);
  CHECK(ind.factors[0].node == Node{1, 1, 1});
}

TEST_CASE("i-refined lists partition the full lists, order kept") {
  for (int e = 2; e <= 3; ++e)
    for (int n = 0; n <= 5; ++n)
      for (const auto& la : enumerate_multipartitions(n, 2)) {
        const Charge ch{{0, 1}, e};
        const Bounds m(2, n + 1);
        auto full = ind_filtration(la, m);
        std::multiset<MultiPartition> acc;
        for (int i = 0; i < e; ++i) {
          auto part = i_ind_filtration(la, i, ch, m);
          // subsequence of the full list
          std::size_t pos = 0;
          for (const auto& f : part.factors) {
            while (pos < full.factors.size() && !(full.factors[pos].node == f.node)) ++pos;
            CHECK(pos < full.factors.size());
            CHECK(f.residue == i);
            acc.insert(f.shape);
          }
        }
        auto all = shapes(full);
        CHECK(acc == std::multiset<MultiPartition>(all.begin(), all.end()));
      }
}

TEST_CASE("res_dim_check") {
  CHECK(res_dim_check(mp({{1}, {1}}), Bounds{2, 2}, Bounds{2, 1}));
  // both sides at ((1),(1)): 4 = 3 + 1
  std::uint64_t rhs = weyl_dim(mp({{}, {1}}), Bounds{2, 1}) + weyl_dim(mp({{1}, {}}), Bounds{2, 1});
  CHECK(rhs == 4);
  auto lhs = oracle::sst_count(mp({{1}, {1}}), Bounds{2, 2}, [](const std::vector<std::pair<int, int>>& labels) {
    int last = 0;
    for (const auto& [a, c] : labels)
      if (a == 2 && c == 2) ++last;
    return last == 1;
  });
  CHECK(lhs == 4);
  for (int r = 1; r <= 2; ++r)
    for (int n = 1; n <= 5; ++n)
      for (const auto& la : enumerate_multipartitions(n, r)) {
        const Bounds m = branching_bounds(n, r);
        CHECK(res_dim_check(la, m, shrink_bounds(m)));
      }
}

TEST_CASE("res_dim_check against the brute-force SST oracle") {
  // the gamma image is exactly the set of weights with a single (m_r, r) label
  for (int n = 1; n <= 3; ++n)
    for (const auto& la : enumerate_multipartitions(n, 2)) {
      const Bounds m{n + 1, n + 1};
      auto lhs = oracle::sst_count(la, m, [&](const std::vector<std::pair<int, int>>& labels) {
        int last = 0;
        for (const auto& [a, c] : labels)
          if (a == n + 1 && c == 2) ++last;
        return last == 1;
      });
      std::uint64_t rhs = 0;
      for (const auto& x : removable_nodes(la)) rhs += oracle::sst_count(remove_node(la, x), shrink_bounds(m));
      CHECK(lhs == rhs);
    }
}

TEST_CASE("specht induction") {
  // ((1),()) at r=2: 1 + 1 + 2
  std::uint64_t s = 0;
  for (const auto& x : addable_nodes(mp({{1}, {}}))) s += oracle::std_count(add_node(mp({{1}, {}}), x));
  CHECK(s == 4);
  for (int r = 1; r <= 3; ++r) CHECK(specht_induction_check(5, r));
}

TEST_CASE("bad input") {
  CHECK_THROWS_AS(res_filtration(MultiPartition::empty(2)), std::invalid_argument);
  CHECK_THROWS_AS(i_res_filtration(mp({{1}}), 0, Charge{{0, 0}, 2}), std::invalid_argument);
  CHECK_THROWS_AS(i_res_filtration(mp({{1}}), 0, Charge{{0}, 1}), std::invalid_argument);
  CHECK(branching_bounds(1, 2) == Bounds{2, 2});
  CHECK(to_string(Direction::Ind) == "ind");
}
