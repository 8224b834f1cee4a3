#pragma once

#include <json.hpp>

#include "irreps/gelfand.hpp"
#include "irreps/hadamard.hpp"
#include "irreps/linalg.hpp"
#include "irreps/permutation.hpp"
#include "irreps/schar.hpp"
#include "irreps/tableaux.hpp"

namespace irreps {

using nlohmann::json;

// Wire formats:
//   permutation   one-based image array            [2,3,1,5,4]
//   cycle type    descending integer array         [3,2]
//   diagram       descending integer array         [3,2,1]
//   tableau       array of row arrays              [[1,3],[2]]
//   weight        {"group": "gl"|"so_odd"|"so_even", "twice_entries": [...]}
//   matrix        nested arrays of [re, im] pairs
//   report        {"estimate", "shots", "epsilon", "delta", "seed"}
//   plan          {"epsilon", "delta", "part", "seed"}

json to_json(const Permutation& p);
Permutation permutation_from_json(const json& j);

json to_json(const CycleType& c);
CycleType cycle_type_from_json(const json& j);

json to_json(const YoungDiagram& d);
YoungDiagram diagram_from_json(const json& j);

json to_json(const StandardTableau& t);
StandardTableau tableau_from_json(const json& j);

json to_json(const GTWeight& w);
GTWeight weight_from_json(const json& j);

json to_json(const DenseMatrix& m);
DenseMatrix matrix_from_json(const json& j);

json to_json(const EstimatorReport& r);
EstimatorReport report_from_json(const json& j);

json to_json(const ShotPlan& p);
ShotPlan plan_from_json(const json& j);

}  // namespace irreps
