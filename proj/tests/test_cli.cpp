#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "cycloschur/cli.hpp"
#include "cycloschur/serialize.hpp"
#include "doctest.h"

using namespace cycloschur;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "cycloschur");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

int count_lines(const std::string& s, const std::string& prefix) {
  std::istringstream is(s);
  int c = 0;
  for (std::string line; std::getline(is, line);)
    if (line.rfind(prefix, 0) == 0) ++c;
  return c;
}

}  // namespace

TEST_CASE("dims golden") {
  auto r = run({"dims", "--n", "2", "--r", "2", "--m", "2,2"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "n=2 r=2 m=(2,2)\n"
        "lambda                  dim         std\n"
        "[[2],[]]                10          1\n"
        "[[1,1],[]]              6           1\n"
        "[[1],[1]]               8           2\n"
        "[[],[2]]                3           1\n"
        "[[],[1,1]]              1           1\n"
        "sum |Std|^2 = 8, r^n n! = 8\n");
  auto z = run({"dims", "--n", "0", "--r", "1"});
  CHECK(z.code == 0);
  CHECK(count_lines(z.out, "[[]]") == 1);
  auto csv = run({"dims", "--n", "3", "--r", "1", "--m", "3", "--format", "csv"});
  CHECK(csv.out.find("\"[[2,1]]\",8,2\n") != std::string::npos);
}

TEST_CASE("dims json") {
  auto r = run({"dims", "--n", "2", "--r", "2", "--format", "json"});
  REQUIRE(r.code == 0);
  auto j = Json::parse(r.out);
  CHECK(j["rows"].size() == 5);
  CHECK(j["sum_std_squared"] == "8");
  CHECK(j["hecke_dim"] == "8");
}

TEST_CASE("branch golden") {
  auto r = run({"branch", "res", "--la", "[[2],[1]]"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "res [[2],[1]] bounds (3,2)\n"
        "  1: x=(1,2,1)  Delta([[1],[1]])  dim 10\n"
        "  2: x=(1,1,2)  Delta([[2],[]])  dim 15\n");
  auto i = run({"branch", "res", "--la", "[[2],[1]]", "--i", "1", "--e", "2", "--charge", "0,0"});
  CHECK(i.code == 0);
  CHECK(count_lines(i.out, "  ") == 1);
  auto cost = run({"branch", "res", "--la", "[[2],[1]]", "--costandard"});
  CHECK(cost.out.find("Nabla([[1],[1]])") != std::string::npos);
}

TEST_CASE("branch json round-trips") {
  auto r = run({"branch", "ind", "--la", "[[],[1]]", "--m", "2,2", "--format", "json"});
  REQUIRE(r.code == 0);
  auto rep = filtration_from_json(Json::parse(r.out));
  auto direct = ind_filtration(MultiPartition::parse("[[],[1]]"), Bounds{2, 2});
  REQUIRE(rep.factors.size() == 3);
  CHECK(rep.bounds == direct.bounds);
  for (std::size_t t = 0; t < 3; ++t) {
    CHECK(rep.factors[t].node == direct.factors[t].node);
    CHECK(rep.factors[t].shape == direct.factors[t].shape);
    CHECK(rep.factors[t].dim == direct.factors[t].dim);
  }
  CHECK(to_json(rep).dump() == Json::parse(r.out).dump());
}

TEST_CASE("ind below |mu|+1 warns") {
  auto r = run({"branch", "ind", "--la", "[[1],[1]]", "--m", "2,2"});
  CHECK(r.code == 0);
  CHECK(r.err.find("warning") != std::string::npos);
}

TEST_CASE("blocks") {
  auto r = run({"blocks", "--n", "2", "--r", "2", "--e", "2", "--charge", "0,0"});
  CHECK(r.code == 0);
  CHECK(count_lines(r.out, "key ") == 2);
  auto j = Json::parse(run({"blocks", "--n", "2", "--r", "2", "--format", "json"}).out);
  CHECK(j.size() == 2);
  CHECK(j["2,0"].size() == 1);
  auto csv = run({"blocks", "--n", "2", "--r", "2", "--format", "csv"});
  CHECK(csv.out.rfind("key,lambda\n", 0) == 0);
  CHECK(csv.out.find("\"2,0\",\"[[1],[1]]\"") != std::string::npos);
}

TEST_CASE("fock") {
  auto r = run({"fock", "act", "--op", "f", "--i", "0", "--e", "2", "--charge", "0,0", "--vector", "[[],[]]"});
  CHECK(r.code == 0);
  CHECK(r.out == "|[[],[1]]> + |[[1],[]]>\n");
  auto j = run({"fock", "act", "--op", "e", "--i", "0", "--vector", "[[1],[1]]", "--format", "json"});
  auto v = fock_from_json(Json::parse(j.out));
  CHECK(v.size() == 2);
  CHECK(to_json(v).dump() == Json::parse(j.out).dump());
  auto m = run({"fock", "matrix", "--op", "f", "--i", "0", "--n", "0", "--r", "2", "--format", "json"});
  auto mj = Json::parse(m.out);
  CHECK(mj["entries"].size() == 2);
  CHECK(mj["entries"][0]["value"] == 1);
  CHECK(run({"fock", "act", "--op", "f", "--i", "5", "--vector", "[[]]"}).code == 2);
}

TEST_CASE("verify exit codes") {
  auto ok = run({"verify", "presentation", "--n", "2", "--r", "2", "--m", "3,3", "--workers", "2"});
  CHECK(ok.code == 0);
  CHECK(count_lines(ok.out, "FAIL") == 0);
  CHECK(ok.out.find("presentation: 915 reports, 0 failed") != std::string::npos);

  auto bad = run({"verify", "presentation", "--n", "2", "--r", "1", "--m", "3", "--perturb", "drop-e-prefactor",
                  "--failures-only"});
  CHECK(bad.code == 1);
  CHECK(count_lines(bad.out, "PASS") == 0);
  CHECK(count_lines(bad.out, "FAIL EF-commutator") > 0);

  auto js = run({"verify", "theta", "--n", "2", "--r", "1", "--m", "2", "--l", "2", "--format", "json"});
  CHECK(js.code == 0);
  auto j = Json::parse(js.out);
  for (const auto& rep : j["reports"]) {
    auto back = relation_from_json(rep);
    CHECK(to_json(back).dump() == rep.dump());
  }
  for (const char* suite : {"iota", "dictionary", "dims", "fock", "categorification", "hecke"})
    CHECK(run({"verify", suite, "--n", "2", "--r", "2"}).code == 0);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"dims"}).code == 2);
  CHECK(run({"dims", "--n", "2", "--r", "2", "--m", "2"}).code == 2);
  CHECK(run({"branch", "res", "--la", "[[1,2]]"}).code == 2);
  CHECK(run({"branch", "up", "--la", "[[1]]"}).code == 2);
  CHECK(run({"branch", "res", "--la", "[[1]]", "--format", "csv"}).code == 2);
  CHECK(run({"blocks", "--n", "2", "--r", "2", "--charge", "0"}).code == 2);
  CHECK(run({"blocks", "--n", "2", "--r", "2", "--e", "1"}).code == 2);
  CHECK(run({"verify", "presentation", "--n", "2", "--perturb", "nope"}).code == 2);
  CHECK(run({"verify", "presentation", "--n", "3", "--m", "2"}).code == 2);
  CHECK(run({"verify", "nothing", "--n", "2"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("output is deterministic and --out writes a file") {
  auto a = run({"verify", "iota", "--n", "1", "--r", "2", "--workers", "1"});
  auto b = run({"verify", "iota", "--n", "1", "--r", "2", "--workers", "3"});
  CHECK(a.out == b.out);
  auto path = std::filesystem::temp_directory_path() / "cycloschur_cli_out.txt";
  auto f = run({"blocks", "--n", "1", "--r", "2", "--out", path.string()});
  CHECK(f.code == 0);
  CHECK(f.out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == run({"blocks", "--n", "1", "--r", "2"}).out);
  std::filesystem::remove(path);
}

TEST_CASE("worker resolution") {
  CHECK(resolve_workers(3) == 3);
  setenv("CYCLOSCHUR_WORKERS", "5", 1);
  CHECK(resolve_workers(0) == 5);
  unsetenv("CYCLOSCHUR_WORKERS");
  CHECK(resolve_workers(0) >= 1);
}

#ifdef CYCLOSCHUR_CLI_PATH
TEST_CASE("binary exit codes") {
  auto status = [](const std::string& args) {
    std::string cmd = std::string(CYCLOSCHUR_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    int s = std::system(cmd.c_str());
    return WIFEXITED(s) ? WEXITSTATUS(s) : -1;
  };
  CHECK(status("dims --n 2 --r 2") == 0);
  CHECK(status("verify presentation --n 2 --r 1 --m 3 --perturb xset-off-by-one") == 1);
  CHECK(status("branch res --la '[[1,2]]'") == 2);
}
#endif
