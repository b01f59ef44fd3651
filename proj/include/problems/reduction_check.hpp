#pragma once

#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "problems/instances.hpp"

namespace problems {

/// One direction of an exact reduction: the instance transform t1 and the
/// solution back-map t2 (a closure over the source instance), together with
/// solution-space membership and the two objective metrics. Carried as
/// plain function objects so tests can corrupt individual pieces.
template <class SourceInst, class TargetInst, class SourceSol, class TargetSol>
struct ReductionWitness {
  std::string name;
  std::function<TargetInst(const SourceInst&)> transform;
  std::function<SourceSol(const SourceInst&, const TargetSol&)> back_map;
  std::function<bool(const SourceInst&, const SourceSol&)> source_feasible;
  std::function<long long(const SourceInst&, const SourceSol&)> source_metric;
  std::function<long long(const TargetInst&, const TargetSol&)> target_metric;
};

struct ReductionViolation {
  int trial = 0;
  std::string item;  // "solution-map", "metric", "optimum"
  std::string detail;
};

struct ReductionReport {
  int trials = 0;
  std::vector<ReductionViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Samples instances, maps random feasible target solutions back, and
/// checks the three testable exact-reduction conditions: back-mapped
/// solutions are feasible, metrics agree exactly, and the source optimum
/// never beats the target optimum. Violations point at implementation bugs.
template <class SourceInst, class TargetInst, class SourceSol, class TargetSol>
ReductionReport verify_exact_reduction(
    const ReductionWitness<SourceInst, TargetInst, SourceSol, TargetSol>& w,
    const std::function<SourceInst(std::mt19937_64&)>& sample_instance,
    const std::function<TargetSol(const TargetInst&, std::mt19937_64&)>& sample_target_solution,
    const std::function<long long(const SourceInst&)>& source_optimum,
    const std::function<long long(const TargetInst&)>& target_optimum,
    int trials, std::uint64_t seed) {
  ReductionReport rep;
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    ++rep.trials;
    const SourceInst x = sample_instance(rng);
    const TargetInst tx = w.transform(x);
    const TargetSol y = sample_target_solution(tx, rng);
    const SourceSol s = w.back_map(x, y);
    if (!w.source_feasible(x, s)) {
      rep.violations.push_back({t, "solution-map", "back-mapped solution infeasible"});
      continue;
    }
    const long long mf = w.source_metric(x, s);
    const long long mg = w.target_metric(tx, y);
    if (mf != mg) {
      std::ostringstream os;
      os << "source metric " << mf << " != target metric " << mg;
      rep.violations.push_back({t, "metric", os.str()});
    }
    const long long of = source_optimum(x);
    const long long og = target_optimum(tx);
    if (of < og) {
      std::ostringstream os;
      os << "source optimum " << of << " < target optimum " << og;
      rep.violations.push_back({t, "optimum", os.str()});
    }
  }
  return rep;
}

}  // namespace problems
