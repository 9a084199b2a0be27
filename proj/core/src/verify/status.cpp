#include "koszul/verify/status.hpp"

#include <chrono>
#include <stdexcept>

#include "koszul/curves/serialization.hpp"
#include "koszul/engine/koszul_complex.hpp"
#include "koszul/linalg/elimination.hpp"
#include "koszul/verify/quadrics.hpp"

namespace koszul::verify {

MrcVerdict classify(std::size_t k11, std::size_t k02) {
  if (k11 == 0 && k02 == 0) return MrcVerdict::Bijective;
  if (k11 == 0) return MrcVerdict::Injective;
  if (k02 == 0) return MrcVerdict::Surjective;
  return MrcVerdict::Fails;
}

const char* to_string(MrcVerdict verdict) {
  switch (verdict) {
    case MrcVerdict::Injective: return "Injective";
    case MrcVerdict::Surjective: return "Surjective";
    case MrcVerdict::Bijective: return "Bijective";
    case MrcVerdict::Fails: return "Fails";
  }
  return "?";
}

MrcStatus mrc_status(const LineBundle& l) {
  const auto sections = curves::h0_basis(l);
  const ProjectiveMap map(sections);
  MrcStatus s;
  const auto n = sections.dimension();
  s.sym2_dimension = n * (n + 1) / 2;
  s.h0_square = curves::h0_basis(l.tensor(l)).dimension();
  s.rank = linalg::rank(symmetric_multiplication_matrix(map));
  s.k11 = s.sym2_dimension - s.rank;
  s.k02 = s.h0_square - s.rank;
  s.verdict = classify(s.k11, s.k02);
  return s;
}

GvCertificate gv_status(const LineBundle& l, std::size_t p, bool with_timing) {
  const auto start = std::chrono::steady_clock::now();
  const engine::KoszulComplex complex(l, std::nullopt, 2);
  const auto r = complex.r();
  if (p < 1 || p + 1 > r) throw std::out_of_range("GV(p) needs 1 <= p <= r - 1");
  GvCertificate c;
  c.g = l.curve().arithmetic_genus();
  c.r = r;
  c.d = l.total_degree();
  c.p = p;
  c.k_p1 = complex.cell(p, 1).k;
  c.k_pminus1_2 = complex.cell(p - 1, 2).k;
  c.holds = std::min(c.k_p1, c.k_pminus1_2) == 0;
  c.witness_curve_hash = curves::model_hash(l);
  c.seed = l.curve().seed();
  if (l.curve().component_count() > 1) c.caveat = kSmoothingCaveat;
  auto shape = [&](std::size_t pp, int q) {
    return MatrixShape{q + 1 >= 0 && pp >= 1 ? complex.space_dimension(pp - 1, q + 1) : 0,
                       complex.space_dimension(pp, q)};
  };
  c.d_p_1 = shape(p, 1);
  c.d_p_plus_1_0 = shape(p + 1, 0);
  c.d_p_minus_1_2 = shape(p - 1, 2);
  if (with_timing) {
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  return c;
}

nlohmann::json to_json(const MrcStatus& s) {
  return {{"k11", s.k11},
          {"k02", s.k02},
          {"verdict", to_string(s.verdict)},
          {"sym2_dimension", s.sym2_dimension},
          {"h0_square", s.h0_square},
          {"rank", s.rank}};
}

nlohmann::json to_json(const GvCertificate& c) {
  auto shape = [](const MatrixShape& m) { return nlohmann::json::array({m.rows, m.cols}); };
  nlohmann::json j{{"g", c.g},
                   {"r", c.r},
                   {"d", c.d},
                   {"p", c.p},
                   {"holds", c.holds},
                   {"k_p_1", c.k_p1},
                   {"k_pm1_2", c.k_pminus1_2},
                   {"witness_curve_hash", curves::hash_hex(c.witness_curve_hash)},
                   {"seed", c.seed},
                   {"caveat", c.caveat ? nlohmann::json(*c.caveat) : nlohmann::json(nullptr)},
                   {"telemetry",
                    {{"d_p_1", shape(c.d_p_1)},
                     {"d_p+1_0", shape(c.d_p_plus_1_0)},
                     {"d_p-1_2", shape(c.d_p_minus_1_2)}}}};
  if (c.seconds) j["telemetry"]["seconds"] = *c.seconds;
  return j;
}

}  // namespace koszul::verify
