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

#include "ssg/instances.h"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include "json.hpp"
#include "ssg/errors.h"
#include "ssg/prng.h"

namespace ssg {
namespace {

using Json = nlohmann::json;

// Fisher-Yates on the first `take` positions: v[0..take) becomes a uniform
// sample without replacement.
void PartialShuffle(std::vector<int>& v, int take, SplitMix64& rng) {
  const int size = static_cast<int>(v.size());
  for (int k = 0; k < take; ++k) {
    int j = static_cast<int>(rng.UniformInt(k, size - 1));
    std::swap(v[k], v[j]);
  }
}

PayoffTable DrawPayoffs(const GeneratorConfig& cfg, SplitMix64& rng) {
  PayoffTable table(cfg.n);
  for (TargetPayoffs& p : table) {
    std::int64_t reward, penalty;
    do {
      reward = rng.UniformInt(cfg.reward_lo, cfg.reward_hi);
      penalty = rng.UniformInt(cfg.penalty_lo, cfg.penalty_hi);
    } while (reward <= penalty);
    p.def_cov = Rational(static_cast<long long>(reward));
    p.def_unc = Rational(static_cast<long long>(penalty));
    do {
      reward = rng.UniformInt(cfg.reward_lo, cfg.reward_hi);
      penalty = rng.UniformInt(cfg.penalty_lo, cfg.penalty_hi);
    } while (reward <= penalty);
    p.att_unc = Rational(static_cast<long long>(reward));
    p.att_cov = Rational(static_cast<long long>(penalty));
  }
  return table;
}

std::vector<Schedule> DrawSchedules(const GeneratorConfig& cfg,
                                    SplitMix64& rng) {
  std::vector<int> order(cfg.n);
  for (int t = 0; t < cfg.n; ++t) order[t] = t;
  PartialShuffle(order, cfg.n, rng);
  std::vector<Schedule> schedules(cfg.num_schedules);
  for (int i = 0; i < cfg.n; ++i) {
    schedules[i % cfg.num_schedules].push_back(order[i]);
  }
  for (Schedule& s : schedules) {
    std::vector<char> in(cfg.n, 0);
    for (int t : s) in[t] = 1;
    std::vector<int> rest;
    for (int t = 0; t < cfg.n; ++t) {
      if (!in[t]) rest.push_back(t);
    }
    int need = cfg.l - static_cast<int>(s.size());
    PartialShuffle(rest, need, rng);
    s.insert(s.end(), rest.begin(), rest.begin() + need);
    std::sort(s.begin(), s.end());
  }
  return schedules;
}

std::string Path(const std::string& base, const std::string& field) {
  return base.empty() ? field : base + "." + field;
}

std::string Index(const std::string& base, std::size_t i) {
  return base + "[" + std::to_string(i) + "]";
}

Rational ReadRational(const Json& v, const std::string& path) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) {
      return Rational(BigInt(std::to_string(v.get<std::uint64_t>())));
    }
    return Rational(static_cast<long long>(v.get<std::int64_t>()));
  }
  if (v.is_string()) {
    try {
      return Rational::Parse(v.get<std::string>());
    } catch (const ValidationError& e) {
      throw ValidationError(path + ": " + e.what());
    }
  }
  if (v.is_number()) {
    throw ValidationError(path +
                          ": non-integer values must be written as strings");
  }
  throw ValidationError(path + ": expected a number or a rational string");
}

int ReadIndex(const Json& v, const std::string& path) {
  if (!v.is_number_integer()) {
    throw ValidationError(path + ": expected an integer");
  }
  std::int64_t i = v.get<std::int64_t>();
  if (i < 0 || i > 1'000'000'000) {
    throw ValidationError(path + ": index out of range");
  }
  return static_cast<int>(i);
}

const Json& Field(const Json& obj, const char* name, const std::string& path) {
  auto it = obj.find(name);
  if (it == obj.end()) {
    throw ValidationError(Path(path, name) + ": missing field");
  }
  return *it;
}

void CheckKeys(const Json& obj, std::initializer_list<const char*> keys,
               const std::string& path) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (std::none_of(keys.begin(), keys.end(),
                     [&](const char* k) { return it.key() == k; })) {
      throw ValidationError(Path(path, it.key()) + ": unknown field");
    }
  }
}

std::string RationalJson(const Rational& r) {
  if (r.is_integer()) return r.ToString();
  return "\"" + r.ToString() + "\"";
}

}  // namespace

void ValidateConfig(const GeneratorConfig& cfg) {
  auto fail = [](const std::string& m) { throw ValidationError(m); };
  if (cfg.n < 1) fail("n must be at least 1");
  if (cfg.num_schedules < 1) fail("the schedule count must be at least 1");
  if (cfg.l < 1 || cfg.l > cfg.n) fail("l must lie in [1, n]");
  if (cfg.resources < 0) fail("the resource count must be nonnegative");
  if (static_cast<long long>(cfg.l) * cfg.num_schedules < cfg.n) {
    fail("l * schedules must be at least n so every target can be covered");
  }
  if (cfg.reward_lo < 0 || cfg.reward_lo > cfg.reward_hi) {
    fail("the reward range must be a nonempty interval within [0, inf)");
  }
  if (cfg.penalty_hi > 0 || cfg.penalty_lo > cfg.penalty_hi) {
    fail("the penalty range must be a nonempty interval within (-inf, 0]");
  }
  if (cfg.reward_hi == 0 && cfg.penalty_lo == 0) {
    fail("reward and penalty ranges admit no strictly ordered pair");
  }
}

SecurityGame RandomGame(const GeneratorConfig& cfg) {
  ValidateConfig(cfg);
  SplitMix64 rng(cfg.seed);
  PayoffTable payoffs = DrawPayoffs(cfg, rng);
  std::vector<Schedule> schedules = DrawSchedules(cfg, rng);
  return SecurityGame::Homogeneous(std::move(payoffs), std::move(schedules),
                                   cfg.resources);
}

SecurityGame RandomSsasGame(const GeneratorConfig& cfg) {
  if (cfg.l > kMaxSsasScheduleSize) {
    throw LimitError("subset closure needs l <= " +
                     std::to_string(kMaxSsasScheduleSize) + ", got " +
                     std::to_string(cfg.l));
  }
  SecurityGame base = RandomGame(cfg);
  std::set<Schedule> closed;
  for (const Schedule& s : base.schedules()) {
    const unsigned full = 1u << s.size();
    for (unsigned mask = 1; mask < full; ++mask) {
      Schedule sub;
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (mask & (1u << i)) sub.push_back(s[i]);
      }
      closed.insert(std::move(sub));
    }
  }
  std::vector<Schedule> schedules(closed.begin(), closed.end());
  std::stable_sort(schedules.begin(), schedules.end(),
                   [](const Schedule& a, const Schedule& b) {
                     return a.size() < b.size();
                   });
  return SecurityGame::Homogeneous(base.payoffs(), std::move(schedules),
                                   cfg.resources);
}

SecurityGame Example2Game() {
  auto p = [](int dc, int du, int ac, int au) {
    return TargetPayoffs{dc, du, ac, au};
  };
  PayoffTable payoffs = {p(1, -1, -1, 1), p(100, 0, -2, 2), p(2, -2, -3, 3),
                         p(30, -3, -8, 4)};
  return SecurityGame::Homogeneous(std::move(payoffs), {{0, 1, 2}, {3}}, 1);
}

SecurityGame ParseGame(const std::string& text,
                       std::vector<std::string>* warnings) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("top level must be an object");
  CheckKeys(doc, {"n", "targets", "schedules", "resources", "homogeneous"}, "");
  const int n = ReadIndex(Field(doc, "n", ""), "n");

  const Json& targets = Field(doc, "targets", "");
  if (!targets.is_array()) throw ValidationError("targets: expected an array");
  if (static_cast<int>(targets.size()) != n) {
    throw ValidationError("targets: " + std::to_string(targets.size()) +
                          " entries but n = " + std::to_string(n));
  }
  PayoffTable payoffs;
  for (std::size_t t = 0; t < targets.size(); ++t) {
    const std::string path = Index("targets", t);
    const Json& obj = targets[t];
    if (!obj.is_object()) throw ValidationError(path + ": expected an object");
    CheckKeys(obj, {"def_cov", "def_unc", "att_cov", "att_unc"}, path);
    TargetPayoffs p;
    p.def_cov = ReadRational(Field(obj, "def_cov", path), path + ".def_cov");
    p.def_unc = ReadRational(Field(obj, "def_unc", path), path + ".def_unc");
    p.att_cov = ReadRational(Field(obj, "att_cov", path), path + ".att_cov");
    p.att_unc = ReadRational(Field(obj, "att_unc", path), path + ".att_unc");
    if (!(p.def_cov > p.def_unc)) {
      throw ValidationError(path + ": def_cov must exceed def_unc (target " +
                            std::to_string(t) + ")");
    }
    if (!(p.att_unc > p.att_cov)) {
      throw ValidationError(path + ": att_unc must exceed att_cov (target " +
                            std::to_string(t) + ")");
    }
    payoffs.push_back(std::move(p));
  }

  const Json& sched_json = Field(doc, "schedules", "");
  if (!sched_json.is_array()) {
    throw ValidationError("schedules: expected an array");
  }
  std::vector<Schedule> schedules;
  std::vector<int> remap;
  std::map<Schedule, int> first;
  for (std::size_t s = 0; s < sched_json.size(); ++s) {
    const std::string path = Index("schedules", s);
    if (!sched_json[s].is_array() || sched_json[s].empty()) {
      throw ValidationError(path + ": expected a nonempty array");
    }
    Schedule sched;
    for (std::size_t i = 0; i < sched_json[s].size(); ++i) {
      int t = ReadIndex(sched_json[s][i], Index(path, i));
      if (t >= n) throw ValidationError(Index(path, i) + ": no such target");
      sched.push_back(t);
    }
    std::sort(sched.begin(), sched.end());
    if (std::adjacent_find(sched.begin(), sched.end()) != sched.end()) {
      throw ValidationError(path + ": repeated target");
    }
    auto [it, inserted] = first.emplace(sched, static_cast<int>(schedules.size()));
    if (inserted) {
      schedules.push_back(std::move(sched));
    } else if (warnings) {
      warnings->push_back(path + " duplicates schedule " +
                          std::to_string(it->second) +
                          "; merged");
    }
    remap.push_back(it->second);
  }

  std::vector<std::vector<int>> resources;
  const bool has_res = doc.contains("resources");
  const bool has_hom = doc.contains("homogeneous");
  if (has_res == has_hom) {
    throw ValidationError("exactly one of resources and homogeneous is required");
  }
  if (has_hom) {
    int k = ReadIndex(doc["homogeneous"], "homogeneous");
    std::vector<int> all(schedules.size());
    for (std::size_t s = 0; s < all.size(); ++s) all[s] = static_cast<int>(s);
    resources.assign(k, all);
  } else {
    const Json& res = doc["resources"];
    if (!res.is_array()) throw ValidationError("resources: expected an array");
    for (std::size_t r = 0; r < res.size(); ++r) {
      const std::string path = Index("resources", r);
      if (!res[r].is_object()) {
        throw ValidationError(path + ": expected an object");
      }
      CheckKeys(res[r], {"allowed"}, path);
      const Json& allowed = Field(res[r], "allowed", path);
      if (!allowed.is_array()) {
        throw ValidationError(path + ".allowed: expected an array");
      }
      std::vector<int> ids;
      for (std::size_t i = 0; i < allowed.size(); ++i) {
        const std::string p = Index(path + ".allowed", i);
        int s = ReadIndex(allowed[i], p);
        if (s >= static_cast<int>(remap.size())) {
          throw ValidationError(p + ": no such schedule");
        }
        ids.push_back(remap[s]);
      }
      std::sort(ids.begin(), ids.end());
      ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
      resources.push_back(std::move(ids));
    }
  }
  return SecurityGame(std::move(payoffs), std::move(schedules),
                      std::move(resources));
}

SecurityGame LoadGame(const std::string& path,
                      std::vector<std::string>* warnings) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return ParseGame(buf.str(), warnings);
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

std::string SerializeGame(const SecurityGame& game) {
  std::ostringstream out;
  out << "{\n  \"n\": " << game.num_targets() << ",\n  \"targets\": [\n";
  for (int t = 0; t < game.num_targets(); ++t) {
    const TargetPayoffs& p = game.payoffs(t);
    out << "    {\"def_cov\": " << RationalJson(p.def_cov)
        << ", \"def_unc\": " << RationalJson(p.def_unc)
        << ", \"att_cov\": " << RationalJson(p.att_cov)
        << ", \"att_unc\": " << RationalJson(p.att_unc) << "}"
        << (t + 1 < game.num_targets() ? "," : "") << "\n";
  }
  out << "  ],\n  \"schedules\": [";
  auto list = [&](const std::vector<int>& v) {
    out << "[";
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << v[i];
    out << "]";
  };
  for (int s = 0; s < game.num_schedules(); ++s) {
    out << (s ? ",\n    " : "\n    ");
    list(game.schedule(s));
  }
  out << (game.num_schedules() ? "\n  ]" : "]");
  if (game.homogeneous()) {
    out << ",\n  \"homogeneous\": " << game.num_resources() << "\n}\n";
    return out.str();
  }
  out << ",\n  \"resources\": [";
  for (int r = 0; r < game.num_resources(); ++r) {
    out << (r ? ",\n    " : "\n    ") << "{\"allowed\": ";
    list(game.allowed(r));
    out << "}";
  }
  out << (game.num_resources() ? "\n  ]" : "]") << "\n}\n";
  return out.str();
}

void SaveGame(const SecurityGame& game, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write " + path);
  out << SerializeGame(game);
  if (!out) throw ValidationError("failed writing " + path);
}

}  // namespace ssg
