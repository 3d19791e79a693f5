// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ssg/report.h"

#include <sstream>
#include <utility>
#include <vector>

#include "ssg/errors.h"

namespace ssg::report {
namespace {

Json OneBased(const std::vector<int>& targets) {
  Json out = Json::array();
  for (int t : targets) out.push_back(t + 1);
  return out;
}

}  // namespace

Json Value(const Rational& r) {
  Json out;
  out["value"] = r.ToString();
  out["decimal"] = r.ToDecimal(6);
  return out;
}

std::string AssignmentKey(const JointSchedule& js) {
  std::string key;
  for (std::size_t r = 0; r < js.assignment.size(); ++r) {
    if (r) key += ',';
    key += js.assignment[r] == kUnassigned ? "-"
                                           : std::to_string(js.assignment[r]);
  }
  return key;
}

Json Strategy(const MixedStrategy& x) {
  Json out = Json::object();
  for (const StrategyEntry& e : x.support) {
    out[AssignmentKey(e.schedule)] = e.probability.ToString();
  }
  return out;
}

MixedStrategy ParseStrategy(const SecurityGame& game, const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
  if (doc.is_object() && doc.contains("strategy")) doc = doc["strategy"];
  if (!doc.is_object()) {
    throw ValidationError("strategy must be an object of assignment -> p/q");
  }
  MixedStrategy x;
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    std::vector<int> assignment;
    std::stringstream parts(it.key());
    std::string part;
    while (std::getline(parts, part, ',')) {
      if (part == "-") {
        assignment.push_back(kUnassigned);
        continue;
      }
      try {
        std::size_t used = 0;
        int s = std::stoi(part, &used);
        if (used != part.size() || s < 0) throw std::invalid_argument(part);
        assignment.push_back(s);
      } catch (const std::exception&) {
        throw ValidationError("strategy key '" + it.key() +
                              "': expected schedule indices or '-'");
      }
    }
    Rational p;
    if (it.value().is_string()) {
      p = Rational::Parse(it.value().get<std::string>());
    } else if (it.value().is_number_integer()) {
      p = Rational(static_cast<long long>(it.value().get<std::int64_t>()));
    } else {
      throw ValidationError("strategy key '" + it.key() +
                            "': probability must be a \"p/q\" string");
    }
    x.support.push_back(
        StrategyEntry{MakeJointSchedule(game, std::move(assignment)), p});
  }
  ValidateStrategy(game, x);
  return x;
}

Json Coverage(const CoverageVector& c) {
  Json out = Json::array();
  for (const Rational& v : c.values) out.push_back(v.ToString());
  return out;
}

Json Guarantee(const GuaranteeReport& g, const ElementPartition& partition) {
  Json out = Value(g.value);
  if (g.witness_element) {
    out["witness_element"] =
        OneBased(partition.elements[*g.witness_element].targets);
  } else {
    out["witness_element"] = nullptr;
  }
  out["degenerate"] = g.degenerate;
  return out;
}

Json Equilibrium(const EquilibriumResult& r, const ElementPartition& partition) {
  Json out;
  out["concept"] = ToString(r.solution_concept);
  out["strategy"] = Strategy(r.strategy);
  out["coverage"] = Coverage(r.coverage);
  out["attacked_target"] = r.attacked_target + 1;
  out["attacked_element"] =
      OneBased(partition.elements[r.attacked_element].targets);
  out["optimistic_value"] = Value(r.optimistic_value);
  out["guarantee"] = Guarantee(r.guarantee, partition);
  return out;
}

}  // namespace ssg::report
