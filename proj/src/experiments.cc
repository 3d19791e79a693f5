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

#include "ssg/experiments.h"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <sstream>
#include <utility>

#include "parallel.h"
#include "ssg/errors.h"
#include "ssg/prng.h"

namespace ssg {
namespace {

constexpr int kDigits = 6;

std::string Dec(const Rational& r) { return r.ToDecimal(kDigits); }

std::string Ms(double ms) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", ms);
  return buf;
}

double ElapsedMs(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

int LargestSchedule(const SecurityGame& g) {
  int l = 0;
  for (const Schedule& s : g.schedules()) l = std::max(l, int(s.size()));
  return l;
}

Rational Percent(int part, int whole) {
  return Rational(BigInt(100) * part, BigInt(whole));
}

TrialRecord RunTrial(const ExperimentConfig& config, int n, int trial) {
  TrialRecord rec;
  rec.trial = trial;
  rec.seed = StreamSeed(config.base.seed, static_cast<std::uint64_t>(trial));
  GeneratorConfig cfg = config.base;
  cfg.seed = rec.seed;
  cfg.n = n;
  SecurityGame game =
      config.example2_fixture ? Example2Game() : RandomGame(cfg);
  rec.n = game.num_targets();
  rec.num_schedules = game.num_schedules();
  rec.l = config.example2_fixture ? LargestSchedule(game) : cfg.l;
  rec.resources = game.num_resources();
  // Trials already run in parallel; the solver itself stays sequential.
  SolveOptions solve = config.solve;
  solve.jobs = 1;

  switch (config.mode) {
    case ExperimentMode::kInducibility: {
      ElementPartition p = InducibleElements(game, solve);
      for (const Element& e : p.elements) {
        if (e.targets.size() == 1 && *e.inducible) ++rec.inducible_targets;
      }
      break;
    }
    case ExperimentMode::kOveropt: {
      SseAssessment a = AssessSse(game, solve);
      rec.sse_u = a.sse.optimistic_value;
      rec.sse_g = a.sse.guarantee.value;
      rec.ise_g = a.ise.guarantee.value;
      rec.overoptimistic = a.overoptimistic;
      rec.suboptimal = a.suboptimal;
      rec.sse_g_degenerate = a.sse.guarantee.degenerate;
      break;
    }
    case ExperimentMode::kScalability: {
      auto start = std::chrono::steady_clock::now();
      {
        StrategySpace space(game, solve.strategy_space);
        Sse(space, solve, false, nullptr);
      }
      rec.sse_ms = ElapsedMs(start);
      start = std::chrono::steady_clock::now();
      {
        StrategySpace space(game, solve.strategy_space);
        Ise(space, solve, nullptr);
      }
      rec.ise_ms = ElapsedMs(start);
      break;
    }
  }
  return rec;
}

}  // namespace

ExperimentMode ParseExperimentMode(const std::string& name) {
  if (name == "inducibility") return ExperimentMode::kInducibility;
  if (name == "overopt") return ExperimentMode::kOveropt;
  if (name == "scalability") return ExperimentMode::kScalability;
  throw ValidationError("unknown experiment mode '" + name + "'");
}

const char* ToString(ExperimentMode mode) {
  switch (mode) {
    case ExperimentMode::kInducibility:
      return "inducibility";
    case ExperimentMode::kOveropt:
      return "overopt";
    case ExperimentMode::kScalability:
      return "scalability";
  }
  return "?";
}

ExperimentResult RunExperiment(const ExperimentConfig& config) {
  if (config.trials < 0) throw ValidationError("trials must be >= 0");
  std::vector<int> sizes = config.sizes;
  if (sizes.empty() || config.mode != ExperimentMode::kScalability) {
    sizes = {config.base.n};
  }
  if (!config.example2_fixture) {
    for (int n : sizes) {
      GeneratorConfig cfg = config.base;
      cfg.n = n;
      ValidateConfig(cfg);
    }
  }
  ExperimentResult result;
  result.config = config;
  const int per_size = config.trials;
  result.records.resize(sizes.size() * static_cast<std::size_t>(per_size));
  internal::ParallelFor(
      static_cast<int>(result.records.size()), config.jobs, [&](int i) {
        result.records[i] = RunTrial(config, sizes[i / per_size], i % per_size);
      });
  return result;
}

std::string ExperimentResult::ToCsv() const {
  std::ostringstream out;
  out << "trial,seed,n,num_schedules,l,resources";
  switch (config.mode) {
    case ExperimentMode::kInducibility:
      out << ",inducible,inducible_pct\n";
      break;
    case ExperimentMode::kOveropt:
      out << ",sse_u,sse_g,ise_g,overopt,subopt,sse_g_degenerate\n";
      break;
    case ExperimentMode::kScalability:
      out << ",sse_ms,ise_ms,ise_sse_ratio\n";
      break;
  }
  auto prefix = [&](const TrialRecord& r) {
    out << r.trial << ',' << r.seed << ',' << r.n << ',' << r.num_schedules
        << ',' << r.l << ',' << r.resources;
  };
  auto agg_prefix = [&](const TrialRecord& r) {
    out << "AGG,," << r.n << ',' << r.num_schedules << ',' << r.l << ','
        << r.resources;
  };
  const int per_size = config.trials;
  if (per_size == 0) return out.str();
  for (std::size_t begin = 0; begin < records.size(); begin += per_size) {
    Rational count_sum, pct_sum, u_sum, g_sum, ig_sum;
    int overopt = 0, subopt = 0, degenerate = 0;
    double sse_sum = 0, ise_sum = 0;
    for (std::size_t i = begin; i < begin + per_size; ++i) {
      const TrialRecord& r = records[i];
      prefix(r);
      switch (config.mode) {
        case ExperimentMode::kInducibility: {
          Rational pct = Percent(r.inducible_targets, r.n);
          out << ',' << r.inducible_targets << ',' << Dec(pct) << '\n';
          count_sum += r.inducible_targets;
          pct_sum += pct;
          break;
        }
        case ExperimentMode::kOveropt:
          out << ',' << Dec(r.sse_u) << ',' << Dec(r.sse_g) << ','
              << Dec(r.ise_g) << ',' << int(r.overoptimistic) << ','
              << int(r.suboptimal) << ',' << int(r.sse_g_degenerate) << '\n';
          u_sum += r.sse_u;
          g_sum += r.sse_g;
          ig_sum += r.ise_g;
          overopt += r.overoptimistic;
          subopt += r.suboptimal;
          degenerate += r.sse_g_degenerate;
          break;
        case ExperimentMode::kScalability:
          out << ',' << Ms(r.sse_ms) << ',' << Ms(r.ise_ms) << ','
              << Ms(r.sse_ms > 0 ? r.ise_ms / r.sse_ms : 0) << '\n';
          sse_sum += r.sse_ms;
          ise_sum += r.ise_ms;
          break;
      }
    }
    const Rational k(per_size);
    agg_prefix(records[begin]);
    switch (config.mode) {
      case ExperimentMode::kInducibility:
        out << ',' << Dec(count_sum / k) << ',' << Dec(pct_sum / k) << '\n';
        break;
      case ExperimentMode::kOveropt:
        out << ',' << Dec(u_sum / k) << ',' << Dec(g_sum / k) << ','
            << Dec(ig_sum / k) << ',' << Dec(Percent(overopt, per_size))
            << ',' << Dec(Percent(subopt, per_size)) << ',' << degenerate
            << '\n';
        break;
      case ExperimentMode::kScalability:
        out << ',' << Ms(sse_sum / per_size) << ',' << Ms(ise_sum / per_size)
            << ',' << Ms(sse_sum > 0 ? ise_sum / sse_sum : 0) << '\n';
        break;
    }
  }
  return out.str();
}

}  // namespace ssg
