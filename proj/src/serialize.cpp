#include "cycloschur/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace cycloschur {

namespace {

Json mpz_json(const mpz_class& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

mpz_class mpz_from_json(const Json& j) {
  if (j.is_string()) return mpz_class(j.get<std::string>());
  return mpz_class(j.get<long>());
}

std::string key_label(const BlockKey& k) {
  std::string s;
  for (std::size_t i = 0; i < k.size(); ++i) s += (i ? "," : "") + std::to_string(k[i]);
  return s;
}

}  // namespace

Json to_json(const MultiPartition& la) {
  Json j = Json::array();
  for (const auto& p : la.comps) j.push_back(p);
  return j;
}

Json to_json(const MultiComposition& mu) {
  Json j = Json::array();
  for (const auto& p : mu.comps) j.push_back(p);
  return j;
}

Json to_json(const Node& x) { return Json::array({x.row, x.col, x.comp}); }

Json to_json(const FiltrationReport& rep) {
  Json j;
  j["direction"] = to_string(rep.direction);
  j["lambda"] = to_json(rep.source);
  if (rep.costandard) j["costandard"] = true;
  j["bounds"] = rep.bounds;
  Json fs = Json::array();
  for (const auto& f : rep.factors) {
    Json fj;
    fj["node"] = to_json(f.node);
    fj["shape"] = to_json(f.shape);
    if (f.residue >= 0) fj["residue"] = f.residue;
    fj["dim"] = f.dim;
    fs.push_back(fj);
  }
  j["factors"] = fs;
  return j;
}

Json to_json(const RelationReport& rep) {
  Json j;
  j["relation"] = rep.relation;
  Json p = Json::object();
  for (const auto& [k, v] : rep.params) p[k] = v;
  j["params"] = p;
  j["status"] = rep.pass ? "PASS" : "FAIL";
  if (rep.vacuous) j["vacuous"] = true;
  if (!rep.pass) j["witness"] = rep.witness;
  return j;
}

Json to_json(const FockVector& v) {
  Json j = Json::array();
  for (const auto& [la, c] : v) j.push_back({{"lambda", to_json(la)}, {"coeff", mpz_json(c)}});
  return j;
}

Json to_json(const SparseMatrix& M) {
  Json j;
  Json rows = Json::array(), cols = Json::array(), entries = Json::array();
  for (const auto& la : M.rows) rows.push_back(to_json(la));
  for (const auto& la : M.cols) cols.push_back(to_json(la));
  for (const auto& e : M.entries)
    entries.push_back({{"row", to_json(M.rows[e.row])}, {"col", to_json(M.cols[e.col])},
                       {"value", mpz_json(e.value)}});
  j["rows"] = rows;
  j["cols"] = cols;
  j["entries"] = entries;
  return j;
}

Json blocks_json(const std::map<BlockKey, std::vector<MultiPartition>>& b) {
  Json j = Json::object();
  for (const auto& [key, members] : b) {
    Json arr = Json::array();
    for (const auto& la : members) arr.push_back(to_json(la));
    j[key_label(key)] = arr;
  }
  return j;
}

MultiPartition multipartition_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("multipartition must be a JSON array");
  std::vector<Partition> comps;
  for (const auto& c : j) comps.push_back(c.get<Partition>());
  MultiPartition la(std::move(comps));
  la.validate();
  return la;
}

Node node_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3) throw std::invalid_argument("node must be [row, col, comp]");
  return Node{j[0].get<int>(), j[1].get<int>(), j[2].get<int>()};
}

FiltrationReport filtration_from_json(const Json& j) {
  FiltrationReport rep;
  const auto dir = j.at("direction").get<std::string>();
  if (dir != "res" && dir != "ind") throw std::invalid_argument("direction must be res or ind");
  rep.direction = dir == "res" ? Direction::Res : Direction::Ind;
  rep.source = multipartition_from_json(j.at("lambda"));
  rep.costandard = j.value("costandard", false);
  rep.bounds = j.at("bounds").get<Bounds>();
  for (const auto& fj : j.at("factors")) {
    FiltrationFactor f;
    f.node = node_from_json(fj.at("node"));
    f.shape = multipartition_from_json(fj.at("shape"));
    f.residue = fj.value("residue", -1);
    f.dim = fj.at("dim").get<std::uint64_t>();
    rep.factors.push_back(std::move(f));
  }
  return rep;
}

RelationReport relation_from_json(const Json& j) {
  RelationReport rep;
  rep.relation = j.at("relation").get<std::string>();
  for (const auto& [k, v] : j.at("params").items()) rep.params.emplace_back(k, v.get<std::string>());
  const auto status = j.at("status").get<std::string>();
  if (status != "PASS" && status != "FAIL") throw std::invalid_argument("status must be PASS or FAIL");
  rep.pass = status == "PASS";
  rep.vacuous = j.value("vacuous", false);
  rep.witness = j.value("witness", std::string());
  return rep;
}

FockVector fock_from_json(const Json& j) {
  FockVector v;
  for (const auto& t : j) {
    mpz_class c = mpz_from_json(t.at("coeff"));
    if (c != 0) v[multipartition_from_json(t.at("lambda"))] += c;
  }
  return v;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string matrix_csv(const SparseMatrix& M) {
  std::ostringstream os;
  os << "row,col,value\n";
  for (const auto& e : M.entries)
    os << csv_field(M.rows[e.row].to_string()) << "," << csv_field(M.cols[e.col].to_string()) << ","
       << e.value.get_str() << "\n";
  return os.str();
}

std::string blocks_csv(const std::map<BlockKey, std::vector<MultiPartition>>& b) {
  std::ostringstream os;
  os << "key,lambda\n";
  for (const auto& [key, members] : b)
    for (const auto& la : members) os << csv_field(key_label(key)) << "," << csv_field(la.to_string()) << "\n";
  return os.str();
}

}  // namespace cycloschur
