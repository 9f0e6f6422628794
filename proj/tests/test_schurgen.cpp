#include <set>

#include "cycloschur/schurgen.hpp"
#include "doctest.h"

using namespace cycloschur;

namespace {

GroundElement qp(int d) { return GroundElement::q_pow(d); }
MultiComposition mc(std::vector<std::vector<int>> c) { return MultiComposition(std::move(c)); }

std::size_t count_relation(const std::vector<RelationReport>& reps, const std::string& id) {
  std::size_t c = 0;
  for (const auto& r : reps)
    if (r.relation == id) ++c;
  return c;
}

bool any_fail(const std::vector<RelationReport>& reps, const std::string& id = {}) {
  for (const auto& r : reps)
    if (!r.pass && (id.empty() || r.relation == id)) return true;
  return false;
}

std::string first_failure(const std::vector<RelationReport>& reps) {
  for (const auto& r : reps)
    if (!r.pass) {
      std::string s = r.relation;
      for (const auto& [k, v] : r.params) s += " " + k + "=" + v;
      return s + " : " + r.witness;
    }
  return {};
}

}  // namespace

TEST_CASE("perturbation names") {
  for (auto p : {Perturbation::None, Perturbation::DropEPrefactor, Perturbation::WrongHeckeNormalization,
                 Perturbation::XSetOffByOne})
    CHECK(parse_perturbation(to_string(p)) == p);
  CHECK(to_string(Perturbation::WrongHeckeNormalization) == "wrong-hecke");
  CHECK_THROWS_AS(parse_perturbation("bogus"), std::invalid_argument);
}

TEST_CASE("bounds must cover n") {
  CHECK_THROWS_AS(SchurAlgebra(3, 2, Bounds{2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(SchurAlgebra(2, 2, Bounds{3}), std::invalid_argument);
  CHECK_NOTHROW(SchurAlgebra(2, 2, Bounds{2, 2}));
}

TEST_CASE("E at r=1, mu=(1,1)") {
  SchurAlgebra S(2, 1, Bounds{2});
  const auto& H = S.hecke();
  auto mu = S.require_weight(mc({{1, 1}}));
  auto top = S.require_weight(mc({{2, 0}}));
  CHECK(S.m(mu) == H.one());
  auto E = S.E_multiplier({1, 1}, mu);
  REQUIRE(E.has_value());
  CHECK(E->first == top);
  CHECK(E->second == H.one() + qp(1) * H.gen(1));
  CHECK(H.mul(E->second, S.m(mu)) == S.m(top));
  CHECK(S.m(top) == H.m_mu(mc({{2, 0}})));
  // (2,0) + alpha leaves Lambda
  CHECK_FALSE(S.E_multiplier({1, 1}, top).has_value());
  CHECK(S.eval_on_m(S.gen_E({1, 1}), top).is_zero());
}

TEST_CASE("F at r=1 on m_(2)") {
  SchurAlgebra S(2, 1, Bounds{2});
  const auto& H = S.hecke();
  auto top = S.require_weight(mc({{2, 0}}));
  // only the identity coset representative, prefactor q^{1-2}
  auto expect = H.mul(H.scalar(qp(-1)), H.m_mu(mc({{2, 0}})));
  CHECK(S.eval_on_m(S.gen_F({1, 1}), top) == expect);
  auto v = S.values(S.gen_F({1, 1}), top);
  REQUIRE(v.size() == 1);
  CHECK(v.begin()->first == S.require_weight(mc({{1, 1}})));
}

TEST_CASE("idempotents") {
  SchurAlgebra S(2, 2, Bounds{2, 2});
  const auto n_w = S.weights().size();
  SchurElement sum;
  for (WeightIndex a = 0; a < n_w; ++a) {
    CHECK(S.equals(S.compose(S.idem(a), S.idem(a)), S.idem(a)));
    for (WeightIndex b = 0; b < n_w; ++b)
      if (a != b) CHECK(S.equals(S.compose(S.idem(a), S.idem(b)), S.zero()));
    sum = S.add(sum, S.idem(a));
  }
  CHECK(S.equals(sum, S.identity()));
  for (WeightIndex mu = 0; mu < n_w; ++mu) CHECK(S.eval_on_m(sum, mu) == S.m(mu));
}

TEST_CASE("weight calculus") {
  SchurAlgebra S(3, 2, Bounds{3, 3});
  for (auto idx : S.gamma_prime()) {
    auto E = S.gen_E(idx), F = S.gen_F(idx);
    CHECK(S.equals(E, S.add(E, S.zero())));
    for (WeightIndex la = 0; la < S.weights().size(); ++la) {
      auto below = S.shift(la, idx, -1);
      auto lhs = S.compose(S.idem(la), E);
      if (below) CHECK(S.equals(lhs, S.compose(E, S.idem(*below))));
      else CHECK(S.equals(lhs, S.zero()));
      auto above = S.shift(la, idx, +1);
      auto lhsF = S.compose(S.idem(la), F);
      if (above) CHECK(S.equals(lhsF, S.compose(F, S.idem(*above))));
      else CHECK(S.equals(lhsF, S.zero()));
      // components land where they claim
      for (const auto& [tgt, val] : S.values(E, la)) {
        REQUIRE(S.shift(la, idx, +1).has_value());
        CHECK(tgt == *S.shift(la, idx, +1));
        auto proj = S.values(S.idem(tgt), tgt);
        CHECK(proj.at(tgt) == S.m(tgt));
        (void)val;
      }
    }
  }
}

TEST_CASE("jm values") {
  SchurAlgebra S(2, 1, Bounds{2});
  const auto& H = S.hecke();
  auto la = S.require_weight(mc({{1, 1}}));
  CHECK(S.jm_value({1, 1}, la) == H.L(1));
  CHECK(S.jm_value({2, 1}, la) == H.L(2));
  auto top = S.require_weight(mc({{2, 0}}));
  CHECK(S.jm_value({2, 1}, top).is_zero());
  CHECK(S.jm_value({1, 1}, top) == H.mul(S.m(top), H.L(1) + H.L(2)));
}

TEST_CASE("m_omega is one") {
  for (int n = 1; n <= 3; ++n) {
    SchurAlgebra S(n, 2, Bounds{n, n});
    std::vector<int> last(n, 1);
    auto w = S.require_weight(MultiComposition({std::vector<int>(n, 0), last}));
    CHECK(S.m(w) == S.hecke().one());
  }
}

TEST_CASE("theta identity by hand at r=1") {
  // E(m_mu) = q^{mu_1 - mu_2 + 1} F(m_{mu+alpha})^*
  SchurAlgebra S(2, 1, Bounds{2});
  const auto& H = S.hecke();
  auto mu = S.require_weight(mc({{1, 1}}));
  auto up = S.require_weight(mc({{2, 0}}));
  auto lhs = S.eval_on_m(S.gen_E({1, 1}), mu);
  auto rhs = H.mul(H.scalar(qp(1)), H.star(S.eval_on_m(S.gen_F({1, 1}), up)));
  CHECK(lhs == rhs);
}

TEST_CASE("divided powers carry [l]!") {
  SchurAlgebra S(2, 1, Bounds{2});
  auto d = S.E_div({1, 1}, 2);
  CHECK(d.denom == quantum_factorial(2));
  CHECK(S.equals(d.numer, S.compose(S.gen_E({1, 1}), S.gen_E({1, 1}))));
}

TEST_CASE("xi is the idempotent on the gamma image") {
  SchurAlgebra big(3, 2, Bounds{3, 3});
  auto x = xi(big);
  CHECK(big.equals(big.compose(x, x), x));
  std::size_t support = 0;
  for (WeightIndex mu = 0; mu < big.weights().size(); ++mu) {
    bool in = is_in_gamma_image(big.weights()[mu]);
    if (in) ++support;
    auto v = big.eval_on_m(x, mu);
    CHECK(v == (in ? big.m(mu) : big.hecke().zero()));
  }
  // gamma is a bijection from Lambda_{2,2}((3,2))
  CHECK(support == enumerate_compositions(2, Bounds{3, 2}).size());
}

TEST_CASE("presentation suite, (2,1,(3))") {
  auto reps = verify_presentation(2, 1, Bounds{3});
  INFO(first_failure(reps));
  CHECK(all_pass(reps));
  const std::size_t L = SchurAlgebra(2, 1, Bounds{3}).weights().size();
  CHECK(count_relation(reps, "idem-orth") + count_relation(reps, "idem-sum") == L * L + 1);
  for (const char* id : {"E-idem", "F-idem", "idem-E", "idem-F", "EF-commutator"})
    CHECK(count_relation(reps, id) > 0);
  // (1,1) and (2,1) are the only indices; Serre instances exist, far commutations do not
  CHECK(count_relation(reps, "E-serre") > 0);
  for (const auto& r : reps) {
    CHECK(r.params.front().first == "config");
    if (r.vacuous) CHECK(r.pass);
  }
}

TEST_CASE("presentation suite, (2,2,(3,3))") {
  auto reps = verify_presentation(2, 2, Bounds{3, 3});
  INFO(first_failure(reps));
  CHECK(all_pass(reps));
}

TEST_CASE("worker count does not change the reports") {
  VerifyOptions one, four;
  four.workers = 4;
  auto a = verify_presentation(2, 2, Bounds{2, 2}, one);
  auto b = verify_presentation(2, 2, Bounds{2, 2}, four);
  REQUIRE(a.size() == b.size());
  for (std::size_t t = 0; t < a.size(); ++t) {
    CHECK(a[t].relation == b[t].relation);
    CHECK(a[t].params == b[t].params);
    CHECK(a[t].pass == b[t].pass);
  }
}

TEST_CASE("theta suite") {
  auto reps = verify_theta(2, 2, Bounds{2, 2}, 1);
  INFO(first_failure(reps));
  CHECK(all_pass(reps));
  bool saw_vacuous = false;
  for (const auto& r : reps) saw_vacuous |= r.vacuous;
  CHECK(saw_vacuous);
  auto div = verify_theta(2, 1, Bounds{2}, 2);
  INFO(first_failure(div));
  CHECK(all_pass(div));
  CHECK(count_relation(div, "theta-divided") > 0);
}

TEST_CASE("iota suite 1 -> 2") {
  auto reps = verify_iota(1, 2, Bounds{2, 2});
  INFO(first_failure(reps));
  CHECK(all_pass(reps));
  for (const char* id : {"iota-E", "iota-F", "iota-sigma", "xi-idempotent", "xi-annihilation"})
    CHECK(count_relation(reps, id) > 0);
}

TEST_CASE("dictionary suite (2,2)") {
  auto reps = verify_dictionary(2, 2, Bounds{3, 3});
  INFO(first_failure(reps));
  CHECK(all_pass(reps));
  CHECK(count_relation(reps, "dictionary-T0") > 0);
  CHECK(count_relation(reps, "dictionary-T") > 0);
}

TEST_CASE("negative controls") {
  VerifyOptions opt;
  opt.perturbation = Perturbation::DropEPrefactor;
  auto a = verify_presentation(2, 1, Bounds{3}, opt);
  CHECK(any_fail(a, "EF-commutator"));
  for (const auto& r : a)
    if (!r.pass) CHECK_FALSE(r.witness.empty());

  opt.perturbation = Perturbation::WrongHeckeNormalization;
  CHECK(any_fail(verify_presentation(2, 1, Bounds{3}, opt)));
  CHECK(any_fail(verify_theta(2, 2, Bounds{2, 2}, 1, opt)));

  opt.perturbation = Perturbation::XSetOffByOne;
  CHECK(any_fail(verify_presentation(2, 1, Bounds{3}, opt)));
  CHECK(any_fail(verify_dictionary(2, 2, Bounds{3, 3}, opt)));
}
