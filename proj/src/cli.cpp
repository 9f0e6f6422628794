#include "cycloschur/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "cycloschur/akengine.hpp"
#include "cycloschur/branching.hpp"
#include "cycloschur/fockcat.hpp"
#include "cycloschur/schurgen.hpp"
#include "cycloschur/serialize.hpp"

namespace cycloschur {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string list_string(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s + ")";
}

void require_n(const RunConfig& c) {
  if (c.n < 0) throw UsageError("--n is required");
  if (c.r < 1) throw UsageError("--r must be positive");
}

Bounds bounds_or(const RunConfig& c, Bounds fallback) {
  if (c.m.empty()) return fallback;
  if (static_cast<int>(c.m.size()) != c.r) throw UsageError("--m needs exactly r entries");
  for (int mk : c.m)
    if (mk < 1) throw UsageError("--m entries must be positive");
  return c.m;
}

Charge charge_of(const RunConfig& c, int r) {
  if (c.e < 2) throw UsageError("--e must be at least 2");
  Charge ch;
  ch.e = c.e;
  ch.s = c.charge.empty() ? std::vector<int>(r, 0) : c.charge;
  if (static_cast<int>(ch.s.size()) != r) throw UsageError("--charge needs exactly r entries");
  return ch;
}

void require_format(const RunConfig& c, bool csv_ok) {
  if (c.format == "csv" && !csv_ok) throw UsageError("csv output is only available for flat tables");
}

std::uint64_t sum_std_squares(int n, int r) {
  std::uint64_t total = 0;
  for (const auto& la : enumerate_multipartitions(n, r)) {
    std::uint64_t s = std_count(la);
    total += s * s;
  }
  return total;
}

mpz_class hecke_dimension(int n, int r) {
  mpz_class v = 1;
  for (int k = 1; k <= n; ++k) v *= r * k;
  return v;
}

// --- commands ---------------------------------------------------------------

int cmd_dims(const RunConfig& c, std::ostream& out) {
  require_n(c);
  require_format(c, true);
  const Bounds m = bounds_or(c, default_bounds(c.n, c.r));
  struct Row {
    MultiPartition la;
    std::uint64_t dim, std;
  };
  std::vector<Row> rows;
  mpz_class total = 0;
  for (const auto& la : enumerate_multipartitions(c.n, c.r)) {
    rows.push_back({la, weyl_dim(la, m), std_count(la)});
    total += mpz_class(std::to_string(rows.back().std)) * mpz_class(std::to_string(rows.back().std));
  }
  const mpz_class expect = hecke_dimension(c.n, c.r);
  if (c.format == "json") {
    Json j;
    j["n"] = c.n;
    j["r"] = c.r;
    j["m"] = m;
    Json arr = Json::array();
    for (const auto& row : rows) arr.push_back({{"lambda", to_json(row.la)}, {"dim", row.dim}, {"std", row.std}});
    j["rows"] = arr;
    j["sum_std_squared"] = total.get_str();
    j["hecke_dim"] = expect.get_str();
    out << j.dump(2) << "\n";
  } else if (c.format == "csv") {
    out << "lambda,dim,std\n";
    for (const auto& row : rows) out << csv_field(row.la.to_string()) << "," << row.dim << "," << row.std << "\n";
  } else {
    out << "n=" << c.n << " r=" << c.r << " m=" << list_string(m) << "\n";
    out << std::left << std::setw(24) << "lambda" << std::setw(12) << "dim" << "std\n";
    for (const auto& row : rows)
      out << std::left << std::setw(24) << row.la.to_string() << std::setw(12) << row.dim << row.std << "\n";
    out << "sum |Std|^2 = " << total.get_str() << ", r^n n! = " << expect.get_str() << "\n";
  }
  return 0;
}

void print_filtration(const FiltrationReport& rep, std::ostream& out) {
  out << to_string(rep.direction) << " " << rep.source.to_string() << " bounds " << list_string(rep.bounds)
      << (rep.costandard ? " costandard" : "") << "\n";
  const char* mod = rep.costandard ? "Nabla" : "Delta";
  int k = 1;
  for (const auto& f : rep.factors) {
    out << "  " << k++ << ": x=" << f.node.to_string() << "  " << mod << "(" << f.shape.to_string() << ")"
        << "  dim " << f.dim;
    if (f.residue >= 0) out << "  residue " << f.residue;
    out << "\n";
  }
}

int cmd_branch(const RunConfig& c, std::ostream& out, std::ostream& err) {
  require_format(c, false);
  if (c.la.empty()) throw UsageError("--la is required");
  MultiPartition la;
  try {
    la = MultiPartition::parse(c.la);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  RunConfig cr = c;
  cr.r = la.r();
  const bool refined = c.i >= 0;
  FiltrationReport rep;
  if (c.sub == "res") {
    if (la.size() == 0) throw UsageError("res needs a non-empty multipartition");
    auto m = c.m.empty() ? std::optional<Bounds>{} : std::optional<Bounds>{bounds_or(cr, {})};
    rep = refined ? i_res_filtration(la, c.i, charge_of(cr, la.r()), m) : res_filtration(la, m, c.costandard);
    rep.costandard = c.costandard;
  } else {
    const Bounds m = bounds_or(cr, branching_bounds(la.size() + 1, la.r()));
    for (int mk : m)
      if (mk < la.size() + 1)
        err << "warning: bound " << mk << " is below |mu|+1 = " << la.size() + 1 << "\n";
    rep = refined ? i_ind_filtration(la, c.i, charge_of(cr, la.r()), m) : ind_filtration(la, m);
  }
  if (c.format == "json") out << to_json(rep).dump(2) << "\n";
  else print_filtration(rep, out);
  return 0;
}

int cmd_blocks(const RunConfig& c, std::ostream& out) {
  require_n(c);
  require_format(c, true);
  const Charge ch = charge_of(c, c.r);
  auto b = blocks(c.n, c.r, ch);
  if (c.format == "json") {
    out << blocks_json(b).dump(2) << "\n";
  } else if (c.format == "csv") {
    out << blocks_csv(b);
  } else {
    out << "n=" << c.n << " r=" << c.r << " e=" << ch.e << " charge=" << list_string(ch.s) << "\n";
    for (const auto& [key, members] : b) {
      out << "key " << list_string(key) << ":";
      for (const auto& la : members) out << " " << la.to_string();
      out << "\n";
    }
    out << b.size() << " blocks\n";
  }
  return 0;
}

int cmd_fock(const RunConfig& c, std::ostream& out) {
  if (c.op != "e" && c.op != "f") throw UsageError("--op must be e or f");
  if (c.i < 0) throw UsageError("--i is required");
  if (c.sub == "act") {
    require_format(c, false);
    if (c.vector.empty()) throw UsageError("--vector is required");
    MultiPartition la;
    try {
      la = MultiPartition::parse(c.vector);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    RunConfig cr = c;
    cr.r = la.r();
    const Charge ch = charge_of(cr, la.r());
    if (c.i >= ch.e) throw UsageError("--i must lie in 0..e-1");
    FockVector v = basis_vector(la);
    if (c.op == "e") v = e_apply(c.i, v, ch);
    else v = f_apply(c.i, v, ch, c.m.empty() ? std::optional<Bounds>{} : std::optional<Bounds>{bounds_or(cr, {})});
    if (c.format == "json") out << to_json(v).dump(2) << "\n";
    else out << to_string(v) << "\n";
    return 0;
  }
  require_n(c);
  require_format(c, true);
  const Charge ch = charge_of(c, c.r);
  if (c.i >= ch.e) throw UsageError("--i must lie in 0..e-1");
  SparseMatrix M = fock_matrix(c.op[0], c.i, c.n, c.r, ch);
  if (c.format == "json") {
    out << to_json(M).dump(2) << "\n";
  } else if (c.format == "csv") {
    out << matrix_csv(M);
  } else {
    out << c.op << "_" << c.i << ": degree " << c.n << " -> " << (c.op == "e" ? c.n - 1 : c.n + 1) << ", "
        << M.entries.size() << " entries\n";
    for (const auto& e : M.entries)
      out << "  " << M.rows[e.row].to_string() << " <- " << M.cols[e.col].to_string() << " : " << e.value.get_str()
          << "\n";
  }
  return 0;
}

RelationReport simple_report(std::string rel, std::vector<std::pair<std::string, std::string>> params, bool ok,
                             std::string witness = {}) {
  RelationReport r;
  r.relation = std::move(rel);
  r.params = std::move(params);
  r.pass = ok;
  if (!ok) r.witness = std::move(witness);
  return r;
}

std::vector<RelationReport> suite_dims(const RunConfig& c) {
  std::vector<RelationReport> reps;
  for (int r = 1; r <= c.r; ++r)
    for (int n = 0; n <= c.n; ++n) {
      auto lhs = sum_std_squares(n, r);
      auto rhs = hecke_dimension(n, r);
      bool ok = mpz_class(std::to_string(lhs)) == rhs;
      reps.push_back(simple_report("std-square-sum", {{"n", std::to_string(n)}, {"r", std::to_string(r)}}, ok,
                                   std::to_string(lhs) + " != " + rhs.get_str()));
    }
  for (int r = 1; r <= std::min(c.r, 2); ++r)
    for (int n = 1; n <= c.n; ++n)
      for (const auto& la : enumerate_multipartitions(n, r)) {
        const Bounds m = branching_bounds(n, r);
        bool ok = res_dim_check(la, m, shrink_bounds(m));
        reps.push_back(simple_report("res-dim", {{"lambda", la.to_string()}, {"m", list_string(m)}}, ok, "mismatch"));
      }
  for (int r = 1; r <= c.r; ++r)
    reps.push_back(simple_report("specht-induction", {{"n_max", std::to_string(c.n)}, {"r", std::to_string(r)}},
                                 c.n < 1 || specht_induction_check(c.n, r), "mismatch"));
  return reps;
}

std::vector<RelationReport> suite_fock(const RunConfig& c) {
  const Charge ch = charge_of(c, c.r);
  std::vector<RelationReport> reps;
  for (int i = 0; i < ch.e; ++i)
    for (int j = 0; j < ch.e; ++j) {
      auto res = commutator_check(i, j, c.n, c.r, ch);
      reps.push_back(simple_report("fock-commutator",
                                   {{"i", std::to_string(i)}, {"j", std::to_string(j)}, {"e", std::to_string(ch.e)},
                                    {"charge", list_string(ch.s)}, {"instances", std::to_string(res.instances)}},
                                   res.ok, res.detail));
    }
  return reps;
}

std::vector<RelationReport> suite_categorification(const RunConfig& c) {
  const Charge ch = charge_of(c, c.r);
  auto res = categorification_check(c.n, c.r, ch);
  return {simple_report("categorification",
                        {{"n_max", std::to_string(c.n)}, {"r", std::to_string(c.r)}, {"e", std::to_string(ch.e)},
                         {"charge", list_string(ch.s)}, {"instances", std::to_string(res.instances)}},
                        res.ok, res.detail)};
}

std::vector<RelationReport> suite_hecke(const RunConfig& c) {
  if (c.n < 1) throw UsageError("--n must be positive");
  AKAlgebra H(c.n, c.r);
  std::mt19937 rng(c.seed);
  std::uniform_int_distribution<std::size_t> pick(0, H.dim() - 1);
  auto word = [&] { return H.from_word(H.word(static_cast<WordIndex>(pick(rng)))); };
  std::vector<RelationReport> reps;
  const std::string cfg = "n=" + std::to_string(c.n) + " r=" + std::to_string(c.r);

  bool ok = true;
  std::string wit;
  for (int s = 0; s < c.samples && ok; ++s) {
    auto x = word(), y = word(), z = word();
    if (!(H.mul(H.mul(x, y), z) == H.mul(x, H.mul(y, z)))) {
      ok = false;
      wit = H.to_string(x) + " | " + H.to_string(y) + " | " + H.to_string(z);
    }
  }
  reps.push_back(simple_report("hecke-associativity",
                               {{"config", cfg}, {"seed", std::to_string(c.seed)}, {"samples", std::to_string(c.samples)}},
                               ok, wit));

  AKElement cyc = H.one();
  for (int k = 1; k <= c.r; ++k) cyc = H.mul(cyc, H.gen(0) - H.scalar(GroundElement::Q(k)));
  reps.push_back(simple_report("hecke-cyclotomic", {{"config", cfg}}, cyc.is_zero(), H.to_string(cyc)));
  for (int i = 1; i < c.n; ++i) {
    auto T = H.gen(i);
    auto d = H.mul(T - H.scalar(GroundElement::q_pow(1)), T + H.scalar(GroundElement::q_pow(-1)));
    reps.push_back(simple_report("hecke-quadratic", {{"config", cfg}, {"i", std::to_string(i)}}, d.is_zero(),
                                 H.to_string(d)));
  }
  if (c.n >= 2) {
    auto T0 = H.gen(0), T1 = H.gen(1);
    auto d = H.mul(H.mul(T0, T1), H.mul(T0, T1)) - H.mul(H.mul(T1, T0), H.mul(T1, T0));
    reps.push_back(simple_report("hecke-braid", {{"config", cfg}, {"i", "0"}}, d.is_zero(), H.to_string(d)));
  }
  for (int i = 1; i + 1 < c.n; ++i) {
    auto a = H.gen(i), b = H.gen(i + 1);
    auto d = H.mul(H.mul(a, b), a) - H.mul(H.mul(b, a), b);
    reps.push_back(simple_report("hecke-braid", {{"config", cfg}, {"i", std::to_string(i)}}, d.is_zero(),
                                 H.to_string(d)));
  }
  return reps;
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
  require_format(c, false);
  require_n(c);
  VerifyOptions opt;
  opt.workers = resolve_workers(c.workers);
  try {
    opt.perturbation = parse_perturbation(c.perturb);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const int n = c.n, r = c.r;
  std::vector<RelationReport> reps;
  if (c.sub == "presentation") {
    if (n < 1) throw UsageError("--n must be positive");
    reps = verify_presentation(n, r, bounds_or(c, default_bounds(n, r)), opt);
  } else if (c.sub == "theta") {
    if (n < 1) throw UsageError("--n must be positive");
    if (c.l < 1) throw UsageError("--l must be positive");
    reps = verify_theta(n, r, bounds_or(c, default_bounds(n, r)), c.l, opt);
  } else if (c.sub == "iota") {
    if (n < 1) throw UsageError("--n must be positive");
    reps = verify_iota(n, r, bounds_or(c, Bounds(r, n + 1)), opt);
  } else if (c.sub == "dictionary") {
    if (n < 1) throw UsageError("--n must be positive");
    reps = verify_dictionary(n, r, bounds_or(c, Bounds(r, n + 1)), opt);
  } else if (c.sub == "dims") {
    reps = suite_dims(c);
  } else if (c.sub == "fock") {
    reps = suite_fock(c);
  } else if (c.sub == "categorification") {
    reps = suite_categorification(c);
  } else {
    reps = suite_hecke(c);
  }

  std::size_t fails = 0, vac = 0;
  for (const auto& rep : reps) {
    if (!rep.pass) ++fails;
    if (rep.vacuous) ++vac;
  }
  if (c.format == "json") {
    Json j;
    j["suite"] = c.sub;
    Json arr = Json::array();
    for (const auto& rep : reps)
      if (!c.failures_only || !rep.pass) arr.push_back(to_json(rep));
    j["reports"] = arr;
    j["summary"] = {{"reports", reps.size()}, {"failed", fails}, {"vacuous", vac}};
    out << j.dump(2) << "\n";
  } else {
    for (const auto& rep : reps) {
      if (c.failures_only && rep.pass) continue;
      out << (rep.pass ? "PASS " : "FAIL ") << rep.relation;
      for (const auto& [k, v] : rep.params) out << " " << k << "=" << v;
      if (rep.vacuous) out << " (vacuous)";
      if (!rep.pass) out << "\n    witness: " << rep.witness;
      out << "\n";
    }
    out << c.sub << ": " << reps.size() << " reports, " << fails << " failed, " << vac << " vacuous\n";
  }
  return fails == 0 ? 0 : 1;
}

void add_common(CLI::App* app, RunConfig& c) {
  app->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app->add_option("--out", c.out, "Write output to this file");
  app->add_option("--workers", c.workers, "Worker threads (0: CYCLOSCHUR_WORKERS or hardware)");
  app->add_option("--seed", c.seed, "Seed for randomized checks");
}

}  // namespace

int resolve_workers(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("CYCLOSCHUR_WORKERS")) {
    try {
      int v = std::stoi(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Exact computations for cyclotomic q-Schur algebras", "cycloschur"};
  app.require_subcommand(1);

  auto* dims = app.add_subcommand("dims", "Weyl module dimensions and standard tableau counts");
  dims->add_option("--n", c.n, "Size")->required();
  dims->add_option("--r", c.r, "Number of components");
  dims->add_option("--m", c.m, "Bounds m_1,...,m_r")->delimiter(',');

  auto* branch = app.add_subcommand("branch", "Restriction/induction filtration factors");
  branch->add_option("direction", c.sub, "res or ind")->required()->check(CLI::IsMember({"res", "ind"}));
  branch->add_option("--la", c.la, "Multipartition, e.g. [[2],[1]]")->required();
  branch->add_option("--m", c.m, "Bounds")->delimiter(',');
  branch->add_option("--i", c.i, "Residue class");
  branch->add_option("--e", c.e, "e >= 2");
  branch->add_option("--charge", c.charge, "Charge s_1,...,s_r")->delimiter(',');
  branch->add_flag("--costandard", c.costandard, "Report the costandard filtration");

  auto* blk = app.add_subcommand("blocks", "Residue blocks of r-partitions of n");
  blk->add_option("--n", c.n)->required();
  blk->add_option("--r", c.r);
  blk->add_option("--e", c.e);
  blk->add_option("--charge", c.charge)->delimiter(',');

  auto* fock = app.add_subcommand("fock", "Chevalley operators on the Fock space");
  fock->add_option("action", c.sub, "act or matrix")->required()->check(CLI::IsMember({"act", "matrix"}));
  fock->add_option("--op", c.op, "e or f")->required();
  fock->add_option("--i", c.i)->required();
  fock->add_option("--e", c.e);
  fock->add_option("--charge", c.charge)->delimiter(',');
  fock->add_option("--vector", c.vector, "Basis multipartition for act");
  fock->add_option("--n", c.n, "Source degree for matrix");
  fock->add_option("--r", c.r);
  fock->add_option("--m", c.m, "Row bounds for f")->delimiter(',');

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", c.sub)
      ->required()
      ->check(CLI::IsMember(
          {"presentation", "theta", "iota", "dictionary", "dims", "fock", "categorification", "hecke"}));
  verify->add_option("--n", c.n)->required();
  verify->add_option("--r", c.r);
  verify->add_option("--m", c.m)->delimiter(',');
  verify->add_option("--e", c.e);
  verify->add_option("--charge", c.charge)->delimiter(',');
  verify->add_option("--l", c.l, "Largest divided power for theta");
  verify->add_option("--samples", c.samples, "Random samples for hecke");
  verify->add_option("--perturb", c.perturb, "Negative control: none, drop-e-prefactor, wrong-hecke, xset-off-by-one");
  verify->add_flag("--failures-only", c.failures_only, "Only print failing reports");

  for (auto* sub : {dims, branch, blk, fock, verify}) add_common(sub, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  std::ofstream file;
  std::ostream* dest = &out;
  if (!c.out.empty()) {
    file.open(c.out);
    if (!file) {
      err << "error: cannot open " << c.out << "\n";
      return 2;
    }
    dest = &file;
  }

  try {
    if (*dims) return cmd_dims(c, *dest);
    if (*branch) return cmd_branch(c, *dest, err);
    if (*blk) return cmd_blocks(c, *dest);
    if (*fock) return cmd_fock(c, *dest);
    return cmd_verify(c, *dest);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace cycloschur
