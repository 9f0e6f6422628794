#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "cycloschur/branching.hpp"
#include "cycloschur/fockcat.hpp"
#include "cycloschur/schurgen.hpp"

namespace cycloschur {

using Json = nlohmann::ordered_json;

Json to_json(const MultiPartition& la);
Json to_json(const MultiComposition& mu);
Json to_json(const Node& x);
Json to_json(const FiltrationReport& rep);
Json to_json(const RelationReport& rep);
Json to_json(const FockVector& v);
Json to_json(const SparseMatrix& M);
Json blocks_json(const std::map<BlockKey, std::vector<MultiPartition>>& b);

MultiPartition multipartition_from_json(const Json& j);
Node node_from_json(const Json& j);
FiltrationReport filtration_from_json(const Json& j);
RelationReport relation_from_json(const Json& j);
FockVector fock_from_json(const Json& j);

/// Quotes a CSV field when it contains a comma, quote or newline.
std::string csv_field(const std::string& s);
std::string matrix_csv(const SparseMatrix& M);
std::string blocks_csv(const std::map<BlockKey, std::vector<MultiPartition>>& b);

}  // namespace cycloschur
