#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "koszul/curves/line_bundle.hpp"

namespace koszul::verify {

using curves::LineBundle;

enum class MrcVerdict { Injective, Surjective, Bijective, Fails };

struct MrcStatus {
  std::size_t k11 = 0;
  std::size_t k02 = 0;
  MrcVerdict verdict = MrcVerdict::Fails;
  std::size_t sym2_dimension = 0;
  std::size_t h0_square = 0;
  std::size_t rank = 0;
};

MrcVerdict classify(std::size_t k11, std::size_t k02);
const char* to_string(MrcVerdict verdict);

/// k11 = dim ker(Sym^2 H^0(L) -> H^0(L^2)), k02 = dim coker.
MrcStatus mrc_status(const LineBundle& l);

inline constexpr const char* kSmoothingCaveat = "subject to smoothing hypothesis";

struct MatrixShape {
  std::size_t rows = 0;
  std::size_t cols = 0;
};

struct GvCertificate {
  long g = 0;
  std::size_t r = 0;
  long d = 0;
  std::size_t p = 0;
  bool holds = false;
  std::size_t k_p1 = 0;       // k_{p,1}
  std::size_t k_pminus1_2 = 0;  // k_{p-1,2}
  std::uint64_t witness_curve_hash = 0;
  std::uint64_t seed = 0;
  std::optional<std::string> caveat;
  MatrixShape d_p_1;          // telemetry: shapes of the differentials used
  MatrixShape d_p_plus_1_0;
  MatrixShape d_p_minus_1_2;
  std::optional<double> seconds;  // wall time, only when timing is requested
};

/// Computes k_{p,1} and k_{p-1,2} on the model; holds iff their minimum is 0.
/// Nodal witnesses (more than one component) carry kSmoothingCaveat.
/// Requires 1 <= p <= r - 1 (std::out_of_range otherwise).
GvCertificate gv_status(const LineBundle& l, std::size_t p, bool with_timing = false);

nlohmann::json to_json(const MrcStatus& status);
nlohmann::json to_json(const GvCertificate& certificate);

}  // namespace koszul::verify
