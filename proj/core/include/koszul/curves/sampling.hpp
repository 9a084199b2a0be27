#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <utility>

#include "koszul/curves/nodal_curve.hpp"
#include "koszul/error.hpp"

namespace koszul::curves {

inline constexpr int kMaxResampleAttempts = 32;

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

/// Deterministic source of small-height rationals and points. Uses only the
/// raw mt19937_64 stream so results do not depend on the standard library's
/// distribution implementations.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }
  /// num/den with |num| <= height, 1 <= den <= height.
  Rat small_rational(int height = 9);
  Rat nonzero_rational(int height = 9);
  ProjPoint point(int height = 9);
  /// A smooth point of `curve` on the given component, avoiding `avoid`.
  PointOnCurve smooth_point(const NodalCurve& curve, std::size_t component,
                            std::span<const PointOnCurve> avoid = {});
  PointOnCurve smooth_point(const NodalCurve& curve, std::span<const PointOnCurve> avoid = {});

 private:
  std::mt19937_64 engine_;
};

/// Runs build(seed') for seed' = mix_seed(seed, attempt) until audit(result)
/// holds, at most kMaxResampleAttempts times. Throws SamplingExhausted with
/// `what` in the message.
template <class Build, class Audit>
auto with_resampling(std::uint64_t seed, const std::string& what, Build&& build, Audit&& audit) {
  for (int attempt = 0; attempt < kMaxResampleAttempts; ++attempt) {
    auto result = build(mix_seed(seed, static_cast<std::uint64_t>(attempt)));
    if (audit(result)) return result;
  }
  throw SamplingExhausted(what + ": degeneracy audit failed after " +
                          std::to_string(kMaxResampleAttempts) + " attempts (seed " +
                          std::to_string(seed) + ")");
}

}  // namespace koszul::curves
