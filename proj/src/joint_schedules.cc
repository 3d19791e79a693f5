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

#include "ssg/joint_schedules.h"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>

#include "ssg/errors.h"

namespace ssg {
namespace {

// For each resource, the closest earlier resource with the same allowed set,
// or -1. Symmetric resources take nondecreasing schedule indices.
std::vector<int> SymmetryPredecessors(const SecurityGame& game) {
  std::vector<int> prev(game.num_resources(), -1);
  for (int r = 0; r < game.num_resources(); ++r) {
    for (int q = r - 1; q >= 0; --q) {
      if (game.allowed(q) == game.allowed(r)) {
        prev[r] = q;
        break;
      }
    }
  }
  return prev;
}

std::string ColumnKey(const std::vector<int>& cover) {
  std::string key(cover.size(), '0');
  for (std::size_t t = 0; t < cover.size(); ++t) {
    if (cover[t] > 0) key[t] = '1';
  }
  return key;
}

class Enumerator {
 public:
  Enumerator(const SecurityGame& game, std::size_t cap)
      : game_(game),
        cap_(cap),
        visit_limit_(cap * 100 + 100000),
        prev_(SymmetryPredecessors(game)),
        assignment_(game.num_resources(), kUnassigned),
        cover_(game.num_targets(), 0) {}

  std::vector<JointSchedule> Run() {
    Visit(0);
    return std::move(out_);
  }

 private:
  void Visit(int r) {
    if (r == game_.num_resources()) {
      if (++visits_ > visit_limit_) Fail();
      if (seen_.insert(ColumnKey(cover_)).second) {
        if (out_.size() == cap_) Fail();
        out_.push_back(MakeJointSchedule(game_, assignment_));
      }
      return;
    }
    int lo = prev_[r] >= 0 ? assignment_[prev_[r]] : kUnassigned;
    if (lo == kUnassigned) Visit(r + 1);
    for (int s : game_.allowed(r)) {
      if (s < lo) continue;
      assignment_[r] = s;
      for (int t : game_.schedule(s)) ++cover_[t];
      Visit(r + 1);
      for (int t : game_.schedule(s)) --cover_[t];
      assignment_[r] = kUnassigned;
    }
  }

  [[noreturn]] void Fail() const {
    throw LimitError("joint schedule enumeration exceeds the cap of " +
                     std::to_string(cap_) +
                     " columns; use column generation instead");
  }

  const SecurityGame& game_;
  std::size_t cap_;
  std::size_t visit_limit_;
  std::size_t visits_ = 0;
  std::vector<int> prev_;
  std::vector<int> assignment_;
  std::vector<int> cover_;
  std::unordered_set<std::string> seen_;
  std::vector<JointSchedule> out_;
};

class ExactPricer {
 public:
  ExactPricer(const SecurityGame& game, const std::vector<Rational>& weights)
      : game_(game),
        weights_(weights),
        prev_(SymmetryPredecessors(game)),
        assignment_(game.num_resources(), kUnassigned),
        cover_(game.num_targets(), 0) {
    // Resources sharing an allowed set share the per-resource bound term.
    class_of_.assign(game.num_resources(), -1);
    for (int r = 0; r < game.num_resources(); ++r) {
      class_of_[r] = prev_[r] >= 0 ? class_of_[prev_[r]] : num_classes_++;
    }
  }

  std::pair<std::vector<int>, Rational> Run() {
    Visit(0, Rational());
    return {best_assignment_, best_};
  }

  // Admissible: each remaining resource adds at most its best positive
  // marginal gain, and together they add at most the uncovered positive
  // weight.
  Rational BoundAt(int r, const std::vector<int>& cover) const {
    Rational remaining;
    for (int t = 0; t < game_.num_targets(); ++t) {
      if (cover[t] == 0 && weights_[t].sign() > 0) remaining += weights_[t];
    }
    std::vector<std::optional<Rational>> per_class(num_classes_);
    Rational total;
    for (int q = r; q < game_.num_resources(); ++q) {
      auto& best = per_class[class_of_[q]];
      if (!best) {
        best = Rational();
        for (int s : game_.allowed(q)) {
          Rational g;
          for (int t : game_.schedule(s)) {
            if (cover[t] == 0 && weights_[t].sign() > 0) g += weights_[t];
          }
          if (g > *best) best = std::move(g);
        }
      }
      total += *best;
      if (total >= remaining) return remaining;
    }
    return total;
  }

 private:
  Rational Gain(int s) const {
    Rational g;
    for (int t : game_.schedule(s)) {
      if (cover_[t] == 0) g += weights_[t];
    }
    return g;
  }

  Rational Bound(int r) const { return BoundAt(r, cover_); }

  void Visit(int r, const Rational& value) {
    if (r == game_.num_resources()) {
      if (!found_ || value > best_) {
        found_ = true;
        best_ = value;
        best_assignment_ = assignment_;
      }
      return;
    }
    if (found_ && value + Bound(r) <= best_) return;
    int lo = prev_[r] >= 0 ? assignment_[prev_[r]] : kUnassigned;
    if (lo == kUnassigned) Visit(r + 1, value);
    for (int s : game_.allowed(r)) {
      if (s < lo) continue;
      Rational next = value + Gain(s);
      assignment_[r] = s;
      for (int t : game_.schedule(s)) ++cover_[t];
      Visit(r + 1, next);
      for (int t : game_.schedule(s)) --cover_[t];
      assignment_[r] = kUnassigned;
    }
  }

  const SecurityGame& game_;
  const std::vector<Rational>& weights_;
  std::vector<int> prev_;
  std::vector<int> class_of_;
  int num_classes_ = 0;
  std::vector<int> assignment_;
  std::vector<int> cover_;
  bool found_ = false;
  Rational best_;
  std::vector<int> best_assignment_;
};

// Same search with double-precision gains and bounds steering the order and
// the pruning. Decisions within eps of a tie are redone exactly, and every
// incumbent value is exact, so the result equals ExactPricer's.
class FastPricer {
 public:
  FastPricer(const SecurityGame& game, const std::vector<Rational>& weights,
             std::vector<double> w, double eps)
      : game_(game),
        exact_(game, weights),
        weights_(weights),
        w_(std::move(w)),
        eps_(eps),
        prev_(SymmetryPredecessors(game)),
        assignment_(game.num_resources(), kUnassigned),
        cover_(game.num_targets(), 0) {
    class_of_.assign(game.num_resources(), -1);
    for (int r = 0; r < game.num_resources(); ++r) {
      class_of_[r] = prev_[r] >= 0 ? class_of_[prev_[r]] : num_classes_++;
    }
  }

  std::pair<std::vector<int>, Rational> Run() {
    Visit(0, 0.0);
    return {best_assignment_, best_};
  }

 private:
  double Gain(int s) const {
    double g = 0;
    for (int t : game_.schedule(s)) {
      if (cover_[t] == 0) g += w_[t];
    }
    return g;
  }

  double Bound(int r) const {
    double remaining = 0;
    for (int t = 0; t < game_.num_targets(); ++t) {
      if (cover_[t] == 0 && w_[t] > 0) remaining += w_[t];
    }
    std::vector<double> per_class(num_classes_, -1);
    double total = 0;
    for (int q = r; q < game_.num_resources(); ++q) {
      double& best = per_class[class_of_[q]];
      if (best < 0) {
        best = 0;
        for (int s : game_.allowed(q)) {
          double g = 0;
          for (int t : game_.schedule(s)) {
            if (cover_[t] == 0 && w_[t] > 0) g += w_[t];
          }
          best = std::max(best, g);
        }
      }
      total += best;
      if (total >= remaining) return remaining;
    }
    return total;
  }

  Rational ExactValue() const {
    Rational v;
    for (int t = 0; t < game_.num_targets(); ++t) {
      if (cover_[t] > 0) v += weights_[t];
    }
    return v;
  }

  // -1, 0, 1 as the first r entries of the current assignment compare with
  // the incumbent's.
  int ComparePrefix(int r) const {
    for (int q = 0; q < r; ++q) {
      if (assignment_[q] != best_assignment_[q]) {
        return assignment_[q] < best_assignment_[q] ? -1 : 1;
      }
    }
    return 0;
  }

  bool Prune(int r, double value) {
    if (!found_) return false;
    double hi = value + Bound(r);
    if (hi < best_d_ - eps_) return true;
    if (hi > best_d_ + eps_) return false;
    Rational exact_hi = ExactValue() + exact_.BoundAt(r, cover_);
    if (exact_hi < best_) return true;
    return exact_hi == best_ && ComparePrefix(r) > 0;
  }

  void Leaf(double value) {
    if (found_ && value < best_d_ - eps_) return;
    Rational v = ExactValue();
    if (found_) {
      if (v < best_) return;
      if (v == best_ && assignment_ >= best_assignment_) return;
    }
    found_ = true;
    best_ = std::move(v);
    best_d_ = best_.ToDouble();
    best_assignment_ = assignment_;
  }

  void Visit(int r, double value) {
    if (r == game_.num_resources()) {
      Leaf(value);
      return;
    }
    if (Prune(r, value)) return;
    int lo = prev_[r] >= 0 ? assignment_[prev_[r]] : kUnassigned;
    std::vector<std::pair<double, int>> children;
    if (lo == kUnassigned) children.emplace_back(0.0, kUnassigned);
    for (int s : game_.allowed(r)) {
      if (s >= lo) children.emplace_back(Gain(s), s);
    }
    std::stable_sort(children.begin(), children.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    for (const auto& [gain, s] : children) {
      if (s == kUnassigned) {
        Visit(r + 1, value);
        continue;
      }
      assignment_[r] = s;
      for (int t : game_.schedule(s)) ++cover_[t];
      Visit(r + 1, value + gain);
      for (int t : game_.schedule(s)) --cover_[t];
      assignment_[r] = kUnassigned;
    }
  }

  const SecurityGame& game_;
  ExactPricer exact_;
  const std::vector<Rational>& weights_;
  std::vector<double> w_;
  double eps_;
  std::vector<int> prev_;
  std::vector<int> class_of_;
  int num_classes_ = 0;
  std::vector<int> assignment_;
  std::vector<int> cover_;
  bool found_ = false;
  Rational best_;
  double best_d_ = 0;
  std::vector<int> best_assignment_;
};

}  // namespace

std::vector<JointSchedule> EnumerateJointSchedules(const SecurityGame& game,
                                                   std::size_t cap) {
  return Enumerator(game, cap).Run();
}

std::size_t JointScheduleCountBound(const SecurityGame& game,
                                    std::size_t limit) {
  std::vector<int> prev = SymmetryPredecessors(game);
  // Multisets of size k over m + 1 options (unassigned included):
  // C(m + k, k), multiplied over classes of symmetric resources.
  long double total = 1;
  for (int r = 0; r < game.num_resources(); ++r) {
    if (prev[r] >= 0) continue;
    int k = 0;
    for (int q = r; q < game.num_resources(); ++q) {
      if (game.allowed(q) == game.allowed(r)) ++k;
    }
    long double m = static_cast<long double>(game.allowed(r).size());
    long double c = 1;
    for (int i = 1; i <= k; ++i) c = c * (m + i) / i;
    total *= c;
    if (total >= static_cast<long double>(limit)) return limit;
  }
  return static_cast<std::size_t>(total + 0.5L);
}

PricingResult PriceJointSchedule(const SecurityGame& game,
                                 const std::vector<Rational>& weights,
                                 const Rational& scalar) {
  if (static_cast<int>(weights.size()) != game.num_targets()) {
    throw ValidationError("pricing weight vector length mismatch");
  }
  // Doubles steer the search only when every weight converts with room to
  // spare; eps dominates the accumulated rounding error of any sum.
  std::vector<double> w(weights.size());
  double total = 0;
  bool fast = true;
  for (std::size_t t = 0; t < weights.size() && fast; ++t) {
    w[t] = weights[t].ToDouble();
    fast = std::isfinite(w[t]) && std::fabs(w[t]) < 1e250;
    total += std::fabs(w[t]);
  }
  auto [assignment, value] =
      fast ? FastPricer(game, weights, std::move(w), 1e-9 * total + 1e-250).Run()
           : ExactPricer(game, weights).Run();
  PricingResult result{MakeJointSchedule(game, std::move(assignment)), value,
                       value - scalar};
  return result;
}

std::vector<PricingResult> PriceJointSchedules(
    const SecurityGame& game, const std::vector<Rational>& weights,
    const Rational& scalar, int extra) {
  std::vector<PricingResult> out;
  out.push_back(PriceJointSchedule(game, weights, scalar));
  if (extra <= 0 || out.front().reduced_cost.sign() <= 0) return out;
  std::unordered_set<std::string> seen;
  std::vector<int> cover(game.num_targets());
  for (int t = 0; t < game.num_targets(); ++t) {
    cover[t] = out.front().schedule.column[t];
  }
  seen.insert(ColumnKey(cover));
  std::vector<PricingResult> neighbours;
  const std::vector<int>& base = out.front().schedule.assignment;
  for (int r = 0; r < game.num_resources(); ++r) {
    std::vector<int> options = game.allowed(r);
    options.push_back(kUnassigned);
    for (int s : options) {
      if (s == base[r]) continue;
      std::vector<int> assignment = base;
      assignment[r] = s;
      JointSchedule js = MakeJointSchedule(game, std::move(assignment));
      for (int t = 0; t < game.num_targets(); ++t) cover[t] = js.column[t];
      if (!seen.insert(ColumnKey(cover)).second) continue;
      Rational value;
      for (int t = 0; t < game.num_targets(); ++t) {
        if (js.column[t]) value += weights[t];
      }
      Rational reduced = value - scalar;
      if (reduced.sign() <= 0) continue;
      neighbours.push_back(
          PricingResult{std::move(js), std::move(value), std::move(reduced)});
    }
  }
  std::sort(neighbours.begin(), neighbours.end(),
            [](const PricingResult& a, const PricingResult& b) {
              if (a.reduced_cost != b.reduced_cost) {
                return a.reduced_cost > b.reduced_cost;
              }
              return a.schedule.assignment < b.schedule.assignment;
            });
  for (PricingResult& p : neighbours) {
    if (static_cast<int>(out.size()) > extra) break;
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<JointSchedule> GreedyCoveringColumns(const SecurityGame& game) {
  std::vector<JointSchedule> out;
  std::unordered_set<std::string> seen;
  for (int t = 0; t < game.num_targets(); ++t) {
    std::vector<int> assignment(game.num_resources(), kUnassigned);
    std::vector<int> cover(game.num_targets(), 0);
    int first = -1;
    for (int r = 0; r < game.num_resources() && first < 0; ++r) {
      int pick = -1;
      for (int s : game.allowed(r)) {
        const Schedule& sched = game.schedule(s);
        if (!std::binary_search(sched.begin(), sched.end(), t)) continue;
        if (pick < 0 || sched.size() > game.schedule(pick).size()) pick = s;
      }
      if (pick >= 0) {
        first = r;
        assignment[r] = pick;
        for (int u : game.schedule(pick)) cover[u] = 1;
      }
    }
    if (first < 0) continue;
    for (int r = 0; r < game.num_resources(); ++r) {
      if (r == first) continue;
      int pick = -1;
      int pick_gain = 0;
      for (int s : game.allowed(r)) {
        int gain = 0;
        for (int u : game.schedule(s)) gain += cover[u] == 0;
        if (gain > pick_gain) {
          pick = s;
          pick_gain = gain;
        }
      }
      if (pick < 0) continue;
      assignment[r] = pick;
      for (int u : game.schedule(pick)) cover[u] = 1;
    }
    if (seen.insert(ColumnKey(cover)).second) {
      out.push_back(MakeJointSchedule(game, std::move(assignment)));
    }
  }
  return out;
}

}  // namespace ssg
