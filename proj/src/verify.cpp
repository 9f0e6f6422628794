#include <algorithm>
#include <atomic>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "cycloschur/schurgen.hpp"

namespace cycloschur {

namespace {

using Task = std::function<std::vector<RelationReport>()>;

/// Runs the tasks on up to `workers` threads; output keeps task order.
std::vector<RelationReport> run_tasks(const std::vector<Task>& tasks, int workers) {
  std::vector<std::vector<RelationReport>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        results[i] = tasks[i]();
      } catch (const std::exception& e) {
        RelationReport rep;
        rep.relation = "internal-error";
        rep.pass = false;
        rep.witness = e.what();
        results[i] = {rep};
      }
    }
  };
  const int count = std::max(1, std::min<int>(workers, static_cast<int>(tasks.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < count; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  std::vector<RelationReport> out;
  for (auto& r : results)
    for (auto& rep : r) out.push_back(std::move(rep));
  return out;
}

/// coeff * (w_0 o w_1 o ... o w_{k-1}); the last factor acts first.
struct Term {
  GroundElement coeff;
  std::vector<const SchurElement*> word;
};
using Expr = std::vector<Term>;

ValueMap eval_word(const SchurAlgebra& S, const std::vector<const SchurElement*>& word,
                   WeightIndex mu, const AKElement& start) {
  ValueMap cur{{mu, start}};
  for (auto it = word.rbegin(); it != word.rend() && !cur.empty(); ++it) {
    ValueMap next;
    for (const auto& [w, v] : cur)
      for (auto& [t, x] : S.apply(**it, w, v)) {
        auto [pos, inserted] = next.try_emplace(t, S.hecke().zero());
        pos->second += x;
        if (pos->second.is_zero()) next.erase(pos);
      }
    cur = std::move(next);
  }
  return cur;
}

void accumulate(const SchurAlgebra& S, ValueMap& acc, const ValueMap& v, const GroundElement& c) {
  for (const auto& [t, x] : v) {
    auto [pos, inserted] = acc.try_emplace(t, S.hecke().zero());
    pos->second.add_scaled(x, c);
    if (pos->second.is_zero()) acc.erase(pos);
  }
}

ValueMap eval_expr(const SchurAlgebra& S, const Expr& e, WeightIndex mu) {
  ValueMap acc;
  for (const auto& term : e) accumulate(S, acc, eval_word(S, term.word, mu, S.m(mu)), term.coeff);
  return acc;
}

std::string describe_diff(const SchurAlgebra& S, WeightIndex src, const ValueMap& diff) {
  const auto& [tgt, v] = *diff.begin();
  std::ostringstream os;
  os << "on m_" << S.weight_string(src) << " -> M^" << S.weight_string(tgt) << ": "
     << S.hecke().to_string(v);
  return os.str();
}

/// lhs == rhs as endomorphisms; fills rep.pass / rep.witness.
void check_equal(const SchurAlgebra& S, const Expr& lhs, const Expr& rhs, RelationReport& rep) {
  for (WeightIndex mu = 0; mu < S.weights().size(); ++mu) {
    ValueMap d = eval_expr(S, lhs, mu);
    accumulate(S, d, eval_expr(S, rhs, mu), -1);
    if (!d.empty()) {
      rep.pass = false;
      rep.witness = describe_diff(S, mu, d);
      return;
    }
  }
}

RelationReport report(std::string rel, std::vector<std::pair<std::string, std::string>> params) {
  RelationReport r;
  r.relation = std::move(rel);
  r.params = std::move(params);
  return r;
}

RelationReport vacuous(std::string rel, std::string why) {
  RelationReport r = report(std::move(rel), {{"note", std::move(why)}});
  r.vacuous = true;
  return r;
}

std::string bounds_string(const Bounds& m) {
  std::string s = "(";
  for (std::size_t i = 0; i < m.size(); ++i) s += (i ? "," : "") + std::to_string(m[i]);
  return s + ")";
}

struct Generators {
  std::vector<SchurElement> E, F, idem;
  SchurElement one;
};

Generators build_generators(const SchurAlgebra& S) {
  Generators g;
  for (auto idx : S.gamma_prime()) {
    g.E.push_back(S.gen_E(idx));
    g.F.push_back(S.gen_F(idx));
  }
  for (WeightIndex w = 0; w < S.weights().size(); ++w) g.idem.push_back(S.idem(w));
  g.one = S.identity();
  return g;
}

int coordinate(const SchurAlgebra& S, WeightIndex mu, GammaIndex idx) {
  return S.weights()[mu].flatten()[gamma_position(S.bounds(), idx) - 1];
}

}  // namespace

bool all_pass(const std::vector<RelationReport>& reports) {
  for (const auto& r : reports)
    if (!r.pass) return false;
  return true;
}

std::vector<RelationReport> verify_presentation(int n, int r, const Bounds& m,
                                                const VerifyOptions& opt) {
  auto S = std::make_shared<SchurAlgebra>(n, r, m, opt.perturbation);
  auto G = std::make_shared<Generators>(build_generators(*S));
  const auto& W = S->weights();
  const auto& gp = S->gamma_prime();
  const std::size_t nw = W.size(), ng = gp.size();
  std::vector<Task> tasks;

  for (WeightIndex la = 0; la < nw; ++la)
    for (WeightIndex mu = 0; mu < nw; ++mu)
      tasks.push_back([=] {
        auto rep = report("idem-orth", {{"lambda", S->weight_string(la)}, {"mu", S->weight_string(mu)}});
        Expr lhs{{1, {&G->idem[la], &G->idem[mu]}}};
        Expr rhs;
        if (la == mu) rhs.push_back({1, {&G->idem[la]}});
        check_equal(*S, lhs, rhs, rep);
        return std::vector{rep};
      });
  tasks.push_back([=] {
    auto rep = report("idem-sum", {{"weights", std::to_string(nw)}});
    Expr lhs;
    for (const auto& e : G->idem) lhs.push_back({1, {&e}});
    check_equal(*S, lhs, {{1, {&G->one}}}, rep);
    return std::vector{rep};
  });

  // weight shifts: X 1_la = 1_{la +- alpha} X and 1_la X = X 1_{la -+ alpha}
  struct Shift {
    const char* rel;
    bool is_E;
    bool idem_left;
  };
  for (Shift sh : {Shift{"E-idem", true, false}, Shift{"F-idem", false, false},
                   Shift{"idem-E", true, true}, Shift{"idem-F", false, true}}) {
    for (std::size_t a = 0; a < ng; ++a)
      for (WeightIndex la = 0; la < nw; ++la)
        tasks.push_back([=] {
          auto rep = report(sh.rel, {{"index", gamma_string(gp[a])}, {"lambda", S->weight_string(la)}});
          const SchurElement* X = sh.is_E ? &G->E[a] : &G->F[a];
          int sign = sh.is_E ? +1 : -1;
          if (sh.idem_left) sign = -sign;
          auto other = S->shift(la, gp[a], sign);
          Expr lhs, rhs;
          if (!sh.idem_left) {
            lhs.push_back({1, {X, &G->idem[la]}});
            if (other) rhs.push_back({1, {&G->idem[*other], X}});
          } else {
            lhs.push_back({1, {&G->idem[la], X}});
            if (other) rhs.push_back({1, {X, &G->idem[*other]}});
          }
          check_equal(*S, lhs, rhs, rep);
          return std::vector{rep};
        });
  }

  for (std::size_t a = 0; a < ng; ++a)
    for (std::size_t b = 0; b < ng; ++b)
      tasks.push_back([=] {
        auto rep = report("EF-commutator", {{"E", gamma_string(gp[a])}, {"F", gamma_string(gp[b])}});
        Expr lhs{{1, {&G->E[a], &G->F[b]}}, {-1, {&G->F[b], &G->E[a]}}};
        for (WeightIndex la = 0; la < nw && rep.pass; ++la) {
          ValueMap d = eval_expr(*S, lhs, la);
          if (a == b) accumulate(*S, d, {{la, S->eta_value(gp[a], la)}}, -1);
          if (!d.empty()) {
            rep.pass = false;
            rep.witness = describe_diff(*S, la, d);
          }
        }
        return std::vector{rep};
      });

  for (bool is_E : {true, false}) {
    const std::string name = is_E ? "E" : "F";
    const auto& X = is_E ? G->E : G->F;
    std::vector<Task> serre, comm;
    for (std::size_t a = 0; a < ng; ++a)
      for (std::size_t b = 0; b < ng; ++b) {
        const int d = gamma_position(m, gp[a]) - gamma_position(m, gp[b]);
        if (d == 1 || d == -1) {
          serre.push_back([=, &X] {
            auto rep = report(name + "-serre", {{"i", gamma_string(gp[a])}, {"j", gamma_string(gp[b])}});
            const auto *xa = &X[a], *xb = &X[b];
            Expr lhs{{1, {xb, xa, xa}}, {-quantum_integer(2), {xa, xb, xa}}, {1, {xa, xa, xb}}};
            check_equal(*S, lhs, {}, rep);
            return std::vector{rep};
          });
        } else if (d <= -2) {
          comm.push_back([=, &X] {
            auto rep = report(name + "-commute", {{"i", gamma_string(gp[a])}, {"j", gamma_string(gp[b])}});
            Expr lhs{{1, {&X[a], &X[b]}}}, rhs{{1, {&X[b], &X[a]}}};
            check_equal(*S, lhs, rhs, rep);
            return std::vector{rep};
          });
        }
      }
    if (serre.empty())
      tasks.push_back([=] { return std::vector{vacuous(name + "-serre", "no adjacent index pairs")}; });
    if (comm.empty())
      tasks.push_back([=] { return std::vector{vacuous(name + "-commute", "no index pairs at distance >= 2")}; });
    for (auto& t : serre) tasks.push_back(std::move(t));
    for (auto& t : comm) tasks.push_back(std::move(t));
  }

  auto out = run_tasks(tasks, opt.workers);
  const std::string cfg = "n=" + std::to_string(n) + " r=" + std::to_string(r) + " m=" + bounds_string(m);
  for (auto& rep : out) rep.params.insert(rep.params.begin(), {"config", cfg});
  return out;
}

std::vector<RelationReport> verify_theta(int n, int r, const Bounds& m, int l_max,
                                         const VerifyOptions& opt) {
  if (l_max < 1) throw std::invalid_argument("verify_theta: l_max must be at least 1");
  auto S = std::make_shared<SchurAlgebra>(n, r, m, opt.perturbation);
  const auto& gp = S->gamma_prime();
  auto Ed = std::make_shared<std::vector<std::vector<DividedPower>>>();
  auto Fd = std::make_shared<std::vector<std::vector<DividedPower>>>();
  for (auto idx : gp) {
    Ed->emplace_back();
    Fd->emplace_back();
    for (int l = 1; l <= l_max; ++l) {
      Ed->back().push_back(S->E_div(idx, l));
      Fd->back().push_back(S->F_div(idx, l));
    }
  }

  std::vector<Task> tasks;
  for (std::size_t a = 0; a < gp.size(); ++a)
    for (WeightIndex mu = 0; mu < S->weights().size(); ++mu)
      for (int l = 1; l <= l_max; ++l)
        tasks.push_back([=] {
          const auto idx = gp[a];
          auto rep = report(l == 1 ? "theta" : "theta-divided",
                            {{"mu", S->weight_string(mu)}, {"index", gamma_string(idx)}, {"l", std::to_string(l)}});
          const auto& E = (*Ed)[a][l - 1];
          const auto& F = (*Fd)[a][l - 1];
          std::optional<WeightIndex> target = mu;
          for (int t = 0; t < l && target; ++t) target = S->shift(*target, idx, +1);

          ValueMap lhs = S->values(E.numer, mu);
          if (!target) {
            rep.vacuous = true;
            if (!lhs.empty()) {
              rep.pass = false;
              rep.witness = describe_diff(*S, mu, lhs);
            }
            return std::vector{rep};
          }
          const int d = coordinate(*S, mu, idx) - coordinate(*S, mu, gamma_next(m, idx));
          ValueMap rhs = S->values(F.numer, *target);
          // star(E^l m_mu) / [l]! against q^{l(d+l)} F^l m_{mu+l alpha} / [l]!, cross-multiplied
          AKElement left = S->hecke().zero(), right = S->hecke().zero();
          for (const auto& [t, v] : lhs) left += S->hecke().star(v);
          for (const auto& [t, v] : rhs) right += v;
          left *= F.denom;
          right *= E.denom * GroundElement::q_pow(l * (d + l));
          const bool targets_ok = lhs.size() <= 1 && rhs.size() <= 1 &&
                                  (lhs.empty() || lhs.begin()->first == *target) &&
                                  (rhs.empty() || rhs.begin()->first == mu);
          AKElement diff = left - right;
          if (!targets_ok || !diff.is_zero()) {
            rep.pass = false;
            rep.witness = targets_ok ? "difference " + S->hecke().to_string(diff) : "weight mismatch";
          }
          return std::vector{rep};
        });

  auto out = run_tasks(tasks, opt.workers);
  const std::string cfg = "n=" + std::to_string(n) + " r=" + std::to_string(r) + " m=" + bounds_string(m);
  for (auto& rep : out) rep.params.insert(rep.params.begin(), {"config", cfg});
  return out;
}

SchurElement xi(const SchurAlgebra& big) {
  SchurElement x;
  for (WeightIndex w = 0; w < big.weights().size(); ++w)
    if (is_in_gamma_image(big.weights()[w])) x.components.emplace(std::pair{w, w}, big.hecke().one());
  return x;
}

namespace {

/// Compares iota_H(small values at la) with big values at gamma(la).
bool compare_lifted(const SchurAlgebra& small, const SchurAlgebra& big, const ValueMap& vs,
                    const ValueMap& vb, std::string& witness) {
  ValueMap lifted;
  for (const auto& [t, v] : vs) {
    auto tb = big.require_weight(gamma(small.weights()[t], big.bounds()));
    lifted.emplace(tb, iota_H(small.hecke(), big.hecke(), v));
  }
  if (lifted == vb) return true;
  for (const auto& [t, v] : lifted) {
    auto it = vb.find(t);
    AKElement d = it == vb.end() ? v : v - it->second;
    if (!d.is_zero()) {
      witness = "at M^" + big.weight_string(t) + ": " + big.hecke().to_string(d);
      return false;
    }
  }
  for (const auto& [t, v] : vb)
    if (!lifted.count(t)) {
      witness = "unexpected component in M^" + big.weight_string(t);
      return false;
    }
  return false;
}

}  // namespace

std::vector<RelationReport> verify_iota(int n, int r, const Bounds& m, const VerifyOptions& opt) {
  auto big = std::make_shared<SchurAlgebra>(n + 1, r, m, opt.perturbation);
  auto small = std::make_shared<SchurAlgebra>(n, r, shrink_bounds(m),
                                              opt.perturbation);
  auto Gs = std::make_shared<Generators>(build_generators(*small));
  auto Gb = std::make_shared<Generators>(build_generators(*big));
  const auto gps = small->gamma_prime();
  const auto gsig = gamma_set(small->bounds());
  // Gamma'(m') is a prefix of Gamma'(m) in linear order
  auto big_pos = [&](GammaIndex idx) {
    const auto& g = big->gamma_prime();
    return static_cast<std::size_t>(std::find(g.begin(), g.end(), idx) - g.begin());
  };
  std::vector<std::size_t> to_big;
  for (auto idx : gps) to_big.push_back(big_pos(idx));

  std::vector<Task> tasks;
  for (WeightIndex la = 0; la < small->weights().size(); ++la) {
    tasks.push_back([=] {
      std::vector<RelationReport> reps;
      const WeightIndex lb = big->require_weight(gamma(small->weights()[la], big->bounds()));
      const std::string las = small->weight_string(la);
      for (std::size_t a = 0; a < gps.size(); ++a) {
        for (bool is_E : {true, false}) {
          auto rep = report(is_E ? "iota-E" : "iota-F", {{"lambda", las}, {"index", gamma_string(gps[a])}});
          const auto& xs = is_E ? Gs->E[a] : Gs->F[a];
          const auto& xb = is_E ? Gb->E[to_big[a]] : Gb->F[to_big[a]];
          rep.pass = compare_lifted(*small, *big, small->values(xs, la), big->values(xb, lb), rep.witness);
          reps.push_back(rep);
        }
      }
      for (auto idx : gsig) {
        auto rep = report("iota-sigma", {{"lambda", las}, {"index", gamma_string(idx)}});
        AKElement d = iota_H(small->hecke(), big->hecke(), small->jm_value(idx, la)) - big->jm_value(idx, lb);
        if (!d.is_zero()) {
          rep.pass = false;
          rep.witness = big->hecke().to_string(d);
        }
        reps.push_back(rep);
      }
      // words of length two in the generators
      auto rep = report("iota-word", {{"lambda", las}, {"length", "2"}});
      std::vector<std::pair<const SchurElement*, const SchurElement*>> gens;
      std::vector<std::string> names;
      for (std::size_t a = 0; a < gps.size(); ++a) {
        gens.push_back({&Gs->E[a], &Gb->E[to_big[a]]});
        names.push_back("E" + gamma_string(gps[a]));
        gens.push_back({&Gs->F[a], &Gb->F[to_big[a]]});
        names.push_back("F" + gamma_string(gps[a]));
      }
      for (std::size_t u = 0; u < gens.size() && rep.pass; ++u)
        for (std::size_t v = 0; v < gens.size() && rep.pass; ++v) {
          auto vs = eval_word(*small, {gens[u].first, gens[v].first}, la, small->m(la));
          auto vb = eval_word(*big, {gens[u].second, gens[v].second}, lb, big->m(lb));
          std::string w;
          if (!compare_lifted(*small, *big, vs, vb, w)) {
            rep.pass = false;
            rep.witness = names[u] + names[v] + " " + w;
          }
        }
      reps.push_back(rep);
      return reps;
    });
  }

  auto X = std::make_shared<SchurElement>(xi(*big));
  tasks.push_back([=] {
    auto rep = report("xi-idempotent", {{"support", std::to_string(X->components.size())}});
    if (!big->equals(big->compose(*X, *X), *X)) {
      rep.pass = false;
      rep.witness = "xi o xi != xi";
    }
    return std::vector{rep};
  });

  // xi x 1_mu y xi = 0 for F-monomials x and E-monomials y of length <= 2
  const int mr = m.back();
  std::vector<std::vector<const SchurElement*>> xs{{}}, ys{{}};
  for (std::size_t a = 0; a < Gb->E.size(); ++a) {
    xs.push_back({&Gb->F[a]});
    ys.push_back({&Gb->E[a]});
    for (std::size_t b = 0; b < Gb->E.size(); ++b) {
      xs.push_back({&Gb->F[a], &Gb->F[b]});
      ys.push_back({&Gb->E[a], &Gb->E[b]});
    }
  }
  bool any = false;
  for (WeightIndex mu = 0; mu < big->weights().size(); ++mu) {
    if (big->weights()[mu].at(mr, r) < 2) continue;
    any = true;
    tasks.push_back([=] {
      auto rep = report("xi-annihilation", {{"mu", big->weight_string(mu)},
                                            {"monomial-pairs", std::to_string(xs.size() * ys.size())}});
      for (WeightIndex nu = 0; nu < big->weights().size() && rep.pass; ++nu) {
        if (!is_in_gamma_image(big->weights()[nu])) continue;
        for (const auto& y : ys) {
          auto vy = eval_word(*big, y, nu, big->m(nu));
          auto it = vy.find(mu);
          if (it == vy.end()) continue;
          for (const auto& x : xs) {
            auto vx = eval_word(*big, x, mu, it->second);
            for (const auto& [t, v] : vx)
              if (is_in_gamma_image(big->weights()[t]) && rep.pass) {
                rep.pass = false;
                rep.witness = "from m_" + big->weight_string(nu) + " to M^" + big->weight_string(t) + ": " +
                              big->hecke().to_string(v);
              }
          }
        }
      }
      return std::vector{rep};
    });
  }
  if (!any) tasks.push_back([] { return std::vector{vacuous("xi-annihilation", "no weight with last part >= 2")}; });

  auto out = run_tasks(tasks, opt.workers);
  const std::string cfg = "n=" + std::to_string(n) + "->" + std::to_string(n + 1) + " r=" + std::to_string(r) +
                          " m=" + bounds_string(m);
  for (auto& rep : out) rep.params.insert(rep.params.begin(), {"config", cfg});
  return out;
}

namespace {

MultiComposition omega(int n, const Bounds& m) {
  std::vector<std::vector<int>> c;
  for (int mk : m) c.emplace_back(mk, 0);
  for (int i = 0; i < n; ++i) c.back()[i] = 1;
  return MultiComposition(std::move(c));
}

/// 1_w (word) 1_w applied to m_w.
AKElement sandwich(const SchurAlgebra& S, WeightIndex w, const std::vector<const SchurElement*>& word) {
  auto v = eval_word(S, word, w, S.m(w));
  auto it = v.find(w);
  return it == v.end() ? S.hecke().zero() : it->second;
}

void dictionary_level(const SchurAlgebra& S, const MultiComposition& om, bool top_clause,
                      std::vector<RelationReport>& out) {
  const int n = S.n(), r = S.r();
  const auto& H = S.hecke();
  const std::string level = std::to_string(n);
  const WeightIndex w = S.require_weight(om);
  {
    auto rep = report("dictionary-m-omega", {{"level", level}, {"omega", om.to_string()}});
    if (!(S.m(w) == H.one())) {
      rep.pass = false;
      rep.witness = H.to_string(S.m(w));
    }
    out.push_back(rep);
  }
  auto finish = [&](RelationReport rep, const AKElement& got, const AKElement& want) {
    AKElement d = got - want;
    if (!d.is_zero()) {
      rep.pass = false;
      rep.witness = H.to_string(d);
    }
    out.push_back(rep);
  };
  if (r >= 2) {
    GammaIndex idx{S.bounds()[r - 2], r - 1};
    SchurElement E = S.gen_E(idx), F = S.gen_F(idx);
    AKElement got = sandwich(S, w, {&F, &E});
    got.add_scaled(S.m(w), GroundElement::Q(r));
    finish(report("dictionary-T0", {{"level", level}}), got, H.mul(H.gen(0), S.m(w)));
  } else {
    out.push_back(vacuous("dictionary-T0", "r = 1"));
  }
  const int last = top_clause ? n - 2 : n - 1;
  for (int i = 1; i <= last; ++i) {
    GammaIndex idx{i, r};
    SchurElement E = S.gen_E(idx), F = S.gen_F(idx);
    AKElement got = sandwich(S, w, {&F, &E});
    got.add_scaled(S.m(w), -GroundElement::q_pow(-1));
    finish(report("dictionary-T", {{"level", level}, {"i", std::to_string(i)}}), got, H.mul(H.gen(i), S.m(w)));
  }
  if (top_clause && n >= 2) {
    // T_{n-1} = 1_w F_{(m_r-1,r)} ... F_{(n-1,r)} E_{(n-1,r)} ... E_{(m_r-1,r)} 1_w - q^-1
    const int mr = S.bounds()[r - 1];
    std::vector<SchurElement> Es, Fs;
    for (int i = n - 1; i <= mr - 1; ++i) {
      Es.push_back(S.gen_E({i, r}));
      Fs.push_back(S.gen_F({i, r}));
    }
    std::vector<const SchurElement*> word;
    for (auto it = Fs.rbegin(); it != Fs.rend(); ++it) word.push_back(&*it);
    for (const auto& e : Es) word.push_back(&e);
    AKElement got = sandwich(S, w, word);
    got.add_scaled(S.m(w), -GroundElement::q_pow(-1));
    finish(report("dictionary-T-top", {{"level", level}, {"i", std::to_string(n - 1)}}), got,
           H.mul(H.gen(n - 1), S.m(w)));
  }
}

}  // namespace

std::vector<RelationReport> verify_dictionary(int n, int r, const Bounds& m, const VerifyOptions& opt) {
  SchurAlgebra small(n, r, shrink_bounds(m), opt.perturbation);
  SchurAlgebra big(n + 1, r, m, opt.perturbation);
  const MultiComposition om = omega(n, small.bounds());
  std::vector<Task> tasks;
  tasks.push_back([&] {
    std::vector<RelationReport> out;
    dictionary_level(small, om, false, out);
    return out;
  });
  tasks.push_back([&] {
    std::vector<RelationReport> out;
    dictionary_level(big, gamma(om, m), true, out);
    return out;
  });
  auto out = run_tasks(tasks, opt.workers);
  const std::string cfg = "n=" + std::to_string(n) + " r=" + std::to_string(r) + " m=" + bounds_string(m);
  for (auto& rep : out) rep.params.insert(rep.params.begin(), {"config", cfg});
  return out;
}

}  // namespace cycloschur
