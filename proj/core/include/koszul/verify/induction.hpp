#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "koszul/curves/line_bundle.hpp"
#include "koszul/verify/status.hpp"

namespace koszul::verify {

/// One genus-raising step Y -> X = Y u_{u,v} P^1.
struct InductionStep {
  GvCertificate certificate;       // GV(p) on X
  bool kp1_vanishes = false;       // condition (1) on Y: K_{p,1}(Y, A) = 0
  bool rank_condition = false;     // condition (2) on Y: K_{p-1,2} = 0 and the rank condition at u, v
  std::optional<bool> quadric_witness;  // p = 1: B_Q(u, v) != 0 for some Q through Y
  curves::PointOnCurve u;
  curves::PointOnCurve v;
  int attempts = 0;
};

struct InductionReport {
  GvCertificate base;
  std::vector<InductionStep> steps;
  std::optional<std::string> diagnostic;  // why the chain stopped early
  bool exhausted = false;                 // stopped because resampling ran out

  bool complete(std::size_t requested) const { return steps.size() == requested && !diagnostic; }
};

/// Starting from `base` (whose GV(p) is checked directly), repeatedly picks
/// u, v on the current model, requires one of the two sufficient conditions,
/// attaches a bridge and certifies GV(p) on the new model. Certificates of
/// iterated nodal models carry kSmoothingCaveat.
InductionReport induction_driver(const curves::LineBundle& base, std::size_t steps, std::size_t p,
                                 std::uint64_t seed, bool with_timing = false);

nlohmann::json to_json(const InductionStep& step);

}  // namespace koszul::verify
