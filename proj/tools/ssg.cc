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

// Command-line front end: solve game files, run the experiments, generate
// instances.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ssg/equilibria.h"
#include "ssg/errors.h"
#include "ssg/experiments.h"
#include "ssg/instances.h"
#include "ssg/report.h"

namespace {

using ssg::report::Json;

constexpr int kExitUsage = 2;
constexpr int kExitValidation = 3;
constexpr int kExitLimit = 4;

// Usage problems detected after parsing (bad flag combinations, invalid
// generator configurations).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ssg::ValidationError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteOutput(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ssg::ValidationError("cannot write " + path);
  out << text;
}

ssg::SecurityGame Load(const std::string& path) {
  std::vector<std::string> warnings;
  ssg::SecurityGame game = ssg::LoadGame(path, &warnings);
  for (const std::string& w : warnings) {
    std::cerr << "warning: " << path << ": " << w << "\n";
  }
  return game;
}

int TargetIndex(const ssg::SecurityGame& game, int one_based) {
  if (one_based < 1 || one_based > game.num_targets()) {
    throw ssg::ValidationError("--target must lie in [1, " +
                               std::to_string(game.num_targets()) + "]");
  }
  return one_based - 1;
}

struct SolveFlags {
  std::string game;
  std::string mode = "auto";
  int jobs = 1;
  int target = 0;
  bool elements = false;
  std::string strategy;
  std::size_t digit_budget = 10000;
};

ssg::SolveOptions Options(const SolveFlags& f) {
  ssg::SolveOptions o;
  if (f.mode == "enumerate") {
    o.strategy_space.mode = ssg::StrategySpaceMode::kEnumerate;
  } else if (f.mode == "cg") {
    o.strategy_space.mode = ssg::StrategySpaceMode::kColumnGeneration;
  }
  o.jobs = f.jobs;
  return o;
}

void Print(const Json& j) { std::cout << j.dump(2) << "\n"; }

void SolveEquilibrium(const SolveFlags& f, bool ise) {
  ssg::SecurityGame game = Load(f.game);
  ssg::SolveOptions o = Options(f);
  ssg::StrategySpace space(game, o.strategy_space);
  ssg::ElementPartition p = ssg::InducibleElements(space, o);
  ssg::EquilibriumResult r =
      ise ? ssg::Ise(space, o, &p) : ssg::Sse(space, o, true, &p);
  Print(ssg::report::Equilibrium(r, p));
}

void SolveGuarantee(const SolveFlags& f) {
  ssg::SecurityGame game = Load(f.game);
  ssg::MixedStrategy x = ssg::report::ParseStrategy(game, ReadFile(f.strategy));
  ssg::ElementPartition p = ssg::InducibleElements(game, Options(f));
  ssg::CoverageVector c = ssg::CoverageOf(game, x);
  ssg::TieBreakValues tb = ssg::ComputeTieBreakValues(game, c);
  Json out;
  out["coverage"] = ssg::report::Coverage(c);
  Json gamma = Json::array();
  for (int t : ssg::AttackSet(game, c)) gamma.push_back(t + 1);
  out["attack_set"] = gamma;
  out["strong_value"] = ssg::report::Value(tb.strong);
  out["weak_value"] = ssg::report::Value(tb.weak);
  out["guarantee"] =
      ssg::report::Guarantee(ssg::UtilityGuarantee(game, c, p), p);
  Print(out);
}

void SolveInducible(const SolveFlags& f, bool target_given) {
  ssg::SecurityGame game = Load(f.game);
  ssg::SolveOptions o = Options(f);
  ssg::StrategySpace space(game, o.strategy_space);
  Json out;
  if (f.elements) {
    ssg::ElementPartition p = ssg::InducibleElements(space, o);
    Json list = Json::array();
    int inducible_targets = 0;
    for (const ssg::Element& e : p.elements) {
      Json item;
      Json targets = Json::array();
      for (int t : e.targets) targets.push_back(t + 1);
      item["targets"] = targets;
      item["inducible"] = *e.inducible;
      list.push_back(item);
      if (*e.inducible && e.targets.size() == 1) ++inducible_targets;
    }
    out["elements"] = list;
    out["inducible_targets"] = inducible_targets;
    out["inducible_target_percentage"] = ssg::report::Value(
        ssg::Rational(ssg::BigInt(100) * inducible_targets,
                      ssg::BigInt(game.num_targets())));
    Print(out);
    return;
  }
  std::vector<int> targets;
  if (target_given) {
    targets.push_back(TargetIndex(game, f.target));
  } else {
    for (int t = 0; t < game.num_targets(); ++t) targets.push_back(t);
  }
  Json list = Json::array();
  for (int t : targets) {
    ssg::InducibilityResult r = ssg::InducibleTarget(space, t);
    Json item;
    item["target"] = t + 1;
    item["inducible"] = r.inducible;
    item["witness"] =
        r.witness ? ssg::report::Strategy(*r.witness) : Json(nullptr);
    list.push_back(item);
  }
  out["targets"] = list;
  Print(out);
}

void SolveReduce(const SolveFlags& f) {
  ssg::SecurityGame game = Load(f.game);
  int t = TargetIndex(game, f.target);
  ssg::ReductionOptions ro;
  ro.solve = Options(f);
  ro.digit_budget = f.digit_budget;
  bool via = ssg::InducibilityViaReduction(game, t, ro);
  bool direct = ssg::InducibleTarget(game, t, ro.solve).inducible;
  ssg::BigInt m0 = ssg::PayoffMagnitude(game);
  ssg::BigInt m2 = ssg::M2Bound(game.num_targets(), m0);
  ssg::BigInt k = ssg::BigInt(game.num_targets() + 1) * m2 * m2;
  Json out;
  out["target"] = f.target;
  out["m0"] = m0.get_str();
  out["m2"] = m2.get_str();
  out["scale_digits"] = ssg::DecimalDigits(k);
  out["inducible_via_reduction"] = via;
  out["inducible_direct"] = direct;
  out["agree"] = via == direct;
  Print(out);
}

struct GenFlags {
  std::uint64_t seed = 1;
  int n = 100;
  int schedules = 20;
  int l = 10;
  int resources = 1;
  std::int64_t reward_lo = 0, reward_hi = 5, penalty_lo = -5, penalty_hi = 0;
  std::string out;
};

void AddGeneratorFlags(CLI::App* app, GenFlags& g) {
  app->add_option("--seed", g.seed, "Master seed")->capture_default_str();
  app->add_option("--n", g.n, "Number of targets")->capture_default_str();
  app->add_option("--schedules", g.schedules, "Number of schedules")
      ->capture_default_str();
  app->add_option("--l", g.l, "Targets per schedule")->capture_default_str();
  app->add_option("--resources", g.resources, "Number of resources")
      ->capture_default_str();
  app->add_option("--reward-lo", g.reward_lo)->capture_default_str();
  app->add_option("--reward-hi", g.reward_hi)->capture_default_str();
  app->add_option("--penalty-lo", g.penalty_lo)->capture_default_str();
  app->add_option("--penalty-hi", g.penalty_hi)->capture_default_str();
  app->add_option("--out", g.out, "Output file (default stdout)");
}

ssg::GeneratorConfig Config(const GenFlags& g) {
  ssg::GeneratorConfig cfg;
  cfg.seed = g.seed;
  cfg.n = g.n;
  cfg.num_schedules = g.schedules;
  cfg.l = g.l;
  cfg.resources = g.resources;
  cfg.reward_lo = g.reward_lo;
  cfg.reward_hi = g.reward_hi;
  cfg.penalty_lo = g.penalty_lo;
  cfg.penalty_hi = g.penalty_hi;
  return cfg;
}

void CheckConfig(const ssg::GeneratorConfig& cfg) {
  try {
    ssg::ValidateConfig(cfg);
  } catch (const ssg::ValidationError& e) {
    throw UsageError(e.what());
  }
}

int Run(int argc, char** argv) {
  CLI::App app{"Stackelberg security games with scheduling constraints"};
  app.require_subcommand(1);

  CLI::App* solve = app.add_subcommand("solve", "Solve a game file");
  solve->require_subcommand(1);
  SolveFlags sf;
  bool target_given = false;
  auto common = [&](CLI::App* cmd) {
    cmd->add_option("game", sf.game, "Game JSON file")->required();
    cmd->add_option("--strategy-space", sf.mode, "Strategy space: auto, enumerate, cg")
        ->check(CLI::IsMember({"auto", "enumerate", "cg"}))
        ->capture_default_str();
    cmd->add_option("--jobs", sf.jobs, "Worker threads")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  };
  CLI::App* sse = solve->add_subcommand("sse", "Strong Stackelberg equilibrium");
  common(sse);
  CLI::App* ise = solve->add_subcommand("ise", "Inducible Stackelberg equilibrium");
  common(ise);
  CLI::App* guarantee =
      solve->add_subcommand("guarantee", "Utility guarantee of a strategy");
  common(guarantee);
  guarantee->add_option("--strategy", sf.strategy, "Strategy JSON file")
      ->required();
  CLI::App* inducible =
      solve->add_subcommand("inducible", "Inducible targets or elements");
  common(inducible);
  auto* target_opt =
      inducible->add_option("--target", sf.target, "Target (1-based)");
  auto* elements_opt =
      inducible->add_flag("--elements", sf.elements, "Report elements");
  target_opt->excludes(elements_opt);
  CLI::App* ssas = solve->add_subcommand("ssas-check", "Subset closure test");
  ssas->add_option("game", sf.game, "Game JSON file")->required();
  CLI::App* reduce =
      solve->add_subcommand("reduce", "Inducibility via the SSE reduction");
  common(reduce);
  reduce->add_option("--target", sf.target, "Target (1-based)")->required();
  reduce->add_option("--digit-budget", sf.digit_budget,
                     "Largest allowed digit count of the scale factor")
      ->capture_default_str();

  CLI::App* experiment =
      app.add_subcommand("experiment", "Run an experiment, CSV to stdout");
  std::string mode;
  experiment->add_option("mode", mode, "inducibility, overopt or scalability")
      ->required()
      ->check(CLI::IsMember({"inducibility", "overopt", "scalability"}));
  GenFlags ef;
  AddGeneratorFlags(experiment, ef);
  int trials = 10;
  int jobs = 1;
  std::string fixture;
  std::vector<int> sizes;
  std::string emode = "auto";
  experiment->add_option("--trials", trials, "Trials per size")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  experiment->add_option("--jobs", jobs, "Worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  experiment->add_option("--seed-fixture", fixture, "Use a fixture game")
      ->check(CLI::IsMember({"example2"}));
  experiment->add_option("--sizes", sizes, "Scalability target counts")
      ->delimiter(',');
  experiment->add_option("--strategy-space", emode, "Strategy space: auto, enumerate, cg")
      ->check(CLI::IsMember({"auto", "enumerate", "cg"}))
      ->capture_default_str();

  CLI::App* gen = app.add_subcommand("gen", "Generate a game file");
  GenFlags gf;
  AddGeneratorFlags(gen, gf);
  bool ssas_family = false;
  std::string gen_fixture;
  gen->add_flag("--ssas", ssas_family, "Close schedules under subsets");
  gen->add_option("--fixture", gen_fixture, "Write a fixture game instead")
      ->check(CLI::IsMember({"example2"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  target_given = target_opt->count() > 0;

  if (solve->parsed()) {
    if (sse->parsed()) SolveEquilibrium(sf, false);
    if (ise->parsed()) SolveEquilibrium(sf, true);
    if (guarantee->parsed()) SolveGuarantee(sf);
    if (inducible->parsed()) SolveInducible(sf, target_given);
    if (reduce->parsed()) SolveReduce(sf);
    if (ssas->parsed()) {
      Json out;
      out["ssas"] = ssg::SsasCheck(Load(sf.game));
      Print(out);
    }
    return 0;
  }
  if (experiment->parsed()) {
    ssg::ExperimentConfig cfg;
    cfg.mode = ssg::ParseExperimentMode(mode);
    cfg.base = Config(ef);
    cfg.sizes = sizes;
    cfg.trials = trials;
    cfg.example2_fixture = !fixture.empty();
    cfg.jobs = jobs;
    SolveFlags modes;
    modes.mode = emode;
    cfg.solve = Options(modes);
    if (!cfg.example2_fixture) {
      for (int n : sizes.empty() ? std::vector<int>{cfg.base.n} : sizes) {
        ssg::GeneratorConfig c = cfg.base;
        c.n = n;
        CheckConfig(c);
      }
    }
    WriteOutput(ssg::RunExperiment(cfg).ToCsv(), ef.out);
    return 0;
  }
  if (gen->parsed()) {
    ssg::SecurityGame game = ssg::Example2Game();
    if (gen_fixture.empty()) {
      ssg::GeneratorConfig cfg = Config(gf);
      if (ssas_family) {
        if (cfg.l > ssg::kMaxSsasScheduleSize) {
          throw ssg::LimitError("--ssas needs --l <= " +
                                std::to_string(ssg::kMaxSsasScheduleSize));
        }
        CheckConfig(cfg);
        game = ssg::RandomSsasGame(cfg);
      } else {
        CheckConfig(cfg);
        game = ssg::RandomGame(cfg);
      }
    }
    WriteOutput(ssg::SerializeGame(game), gf.out);
    return 0;
  }
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return Run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ssg::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const ssg::LimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitLimit;
  } catch (const ssg::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitLimit;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
