#include "koszul/curves/line_bundle.hpp"

#include <numeric>

#include "koszul/error.hpp"

namespace koszul::curves {

AmbientLayout::AmbientLayout(const std::vector<long>& degrees) : offsets_(degrees.size() + 1) {
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    offsets_[i + 1] = offsets_[i] + (degrees[i] >= 0 ? static_cast<std::size_t>(degrees[i] + 1) : 0);
  }
}

LineBundle::LineBundle(CurvePtr curve, std::vector<long> degrees, std::vector<Rat> gluings)
    : curve_(std::move(curve)), degrees_(std::move(degrees)), gluings_(std::move(gluings)) {
  if (!curve_) throw ModelError("line bundle without a curve");
  if (degrees_.size() != curve_->component_count()) {
    throw ModelError("line bundle needs one degree per component");
  }
  if (gluings_.size() != curve_->nodes().size()) {
    throw ModelError("line bundle needs one gluing scalar per node");
  }
  for (const auto& g : gluings_) {
    if (g == 0) throw ModelError("gluing scalars must be nonzero");
  }
}

LineBundle LineBundle::trivial(CurvePtr curve) {
  const auto n = curve->component_count();
  const auto m = curve->nodes().size();
  return LineBundle(std::move(curve), std::vector<long>(n, 0), std::vector<Rat>(m, Rat(1)));
}

long LineBundle::total_degree() const {
  return std::accumulate(degrees_.begin(), degrees_.end(), 0L);
}

bool LineBundle::same_curve(const LineBundle& other) const { return curve_ == other.curve_; }

LineBundle LineBundle::tensor(const LineBundle& other) const {
  if (!same_curve(other)) throw ModelError("tensor product of bundles on different curves");
  auto degrees = degrees_;
  auto gluings = gluings_;
  for (std::size_t i = 0; i < degrees.size(); ++i) degrees[i] += other.degrees_[i];
  for (std::size_t n = 0; n < gluings.size(); ++n) gluings[n] *= other.gluings_[n];
  return LineBundle(curve_, std::move(degrees), std::move(gluings));
}

LineBundle LineBundle::dual() const {
  auto degrees = degrees_;
  auto gluings = gluings_;
  for (auto& d : degrees) d = -d;
  for (auto& g : gluings) g = 1 / g;
  return LineBundle(curve_, std::move(degrees), std::move(gluings));
}

LineBundle LineBundle::power(long k) const {
  auto result = trivial(curve_);
  const LineBundle base = k >= 0 ? *this : dual();
  for (long i = 0; i < (k >= 0 ? k : -k); ++i) result = result.tensor(base);
  return result;
}

LineBundle LineBundle::rescaled(const std::vector<Rat>& factors) const {
  if (factors.size() != degrees_.size()) throw ModelError("one rescaling factor per component");
  auto gluings = gluings_;
  const auto& nodes = curve_->nodes();
  for (std::size_t n = 0; n < nodes.size(); ++n) {
    const auto& fa = factors[nodes[n].a.component];
    const auto& fb = factors[nodes[n].b.component];
    if (fa == 0 || fb == 0) throw ModelError("rescaling factors must be nonzero");
    gluings[n] *= fa / fb;
  }
  return LineBundle(curve_, degrees_, std::move(gluings));
}

}  // namespace koszul::curves
