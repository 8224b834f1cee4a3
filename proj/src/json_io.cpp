#include "irreps/json_io.hpp"

#include <stdexcept>

namespace irreps {

namespace {

std::vector<int> int_array(const json& j, const char* what) {
  if (!j.is_array()) throw std::invalid_argument(std::string(what) + ": expected an array");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw std::invalid_argument(std::string(what) + ": expected integers");
    out.push_back(v.get<int>());
  }
  return out;
}

}  // namespace

json to_json(const Permutation& p) { return json(p.images); }

Permutation permutation_from_json(const json& j) {
  Permutation p{int_array(j, "permutation")};
  validate_permutation(p);
  return p;
}

json to_json(const CycleType& c) { return json(c.parts); }

CycleType cycle_type_from_json(const json& j) { return CycleType{int_array(j, "cycle type")}; }

json to_json(const YoungDiagram& d) { return json(d.rows); }

YoungDiagram diagram_from_json(const json& j) {
  YoungDiagram d{int_array(j, "diagram")};
  validate_diagram(d);
  return d;
}

json to_json(const StandardTableau& t) {
  json rows = json::array();
  for (const auto& row : t.entries) rows.push_back(row);
  return rows;
}

StandardTableau tableau_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("tableau: expected row arrays");
  StandardTableau t;
  for (const auto& row : j) {
    t.entries.push_back(int_array(row, "tableau row"));
    t.shape.rows.push_back(static_cast<int>(t.entries.back().size()));
  }
  validate_tableau(t);
  return t;
}

json to_json(const GTWeight& w) {
  const char* tag = w.group == GroupTag::gl      ? "gl"
                    : w.group == GroupTag::so_odd ? "so_odd"
                                                  : "so_even";
  return json{{"group", tag}, {"twice_entries", w.twice_entries}};
}

GTWeight weight_from_json(const json& j) {
  GTWeight w;
  const std::string tag = j.at("group").get<std::string>();
  if (tag == "gl")
    w.group = GroupTag::gl;
  else if (tag == "so_odd")
    w.group = GroupTag::so_odd;
  else if (tag == "so_even")
    w.group = GroupTag::so_even;
  else
    throw std::invalid_argument("weight: unknown group tag");
  w.twice_entries = int_array(j.at("twice_entries"), "weight");
  validate_weight(w);
  return w;
}

json to_json(const DenseMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j_ = 0; j_ < m.cols(); ++j_)
      row.push_back(json::array({m(i, j_).real(), m(i, j_).imag()}));
    rows.push_back(row);
  }
  return rows;
}

DenseMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix: expected row arrays");
  const int rows = static_cast<int>(j.size());
  const int cols = static_cast<int>(j.at(0).size());
  DenseMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    const auto& row = j.at(r);
    if (static_cast<int>(row.size()) != cols)
      throw std::invalid_argument("matrix: ragged rows");
    for (int c = 0; c < cols; ++c) {
      const auto& e = row.at(c);
      if (!e.is_array() || e.size() != 2)
        throw std::invalid_argument("matrix: entries must be [re, im] pairs");
      m(r, c) = cplx(e.at(0).get<double>(), e.at(1).get<double>());
    }
  }
  return m;
}

json to_json(const EstimatorReport& r) {
  return json{{"estimate", r.estimate},
              {"shots", r.shots},
              {"epsilon", r.epsilon},
              {"delta", r.delta},
              {"seed", r.seed}};
}

EstimatorReport report_from_json(const json& j) {
  return EstimatorReport{j.at("estimate").get<double>(), j.at("shots").get<long long>(),
                         j.at("epsilon").get<double>(), j.at("delta").get<double>(),
                         j.at("seed").get<std::uint64_t>()};
}

json to_json(const ShotPlan& p) {
  return json{{"epsilon", p.epsilon},
              {"delta", p.delta},
              {"shots", p.shots},
              {"part", p.part == OverlapPart::real ? "real" : "imaginary"}};
}

ShotPlan plan_from_json(const json& j) {
  const std::string part = j.at("part").get<std::string>();
  if (part != "real" && part != "imaginary")
    throw std::invalid_argument("plan: part must be real or imaginary");
  ShotPlan p = make_shot_plan(j.at("epsilon").get<double>(), j.at("delta").get<double>(),
                              part == "real" ? OverlapPart::real : OverlapPart::imaginary);
  if (j.contains("shots")) {
    const long long shots = j.at("shots").get<long long>();
    if (shots < hoeffding_floor_shots(p.epsilon, p.delta))
      throw std::invalid_argument("plan: shots below the confidence bound");
    p.shots = shots;
  }
  return p;
}

}  // namespace irreps
