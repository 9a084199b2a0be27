#include "koszul/curves/sampling.hpp"

#include <algorithm>

namespace koszul::curves {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 finalizer
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Rat Sampler::small_rational(int height) {
  const auto h = static_cast<std::uint64_t>(height);
  const long num = static_cast<long>(below(2 * h + 1)) - height;
  const long den = static_cast<long>(below(h)) + 1;
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat Sampler::nonzero_rational(int height) {
  Rat r;
  do {
    r = small_rational(height);
  } while (r == 0);
  return r;
}

ProjPoint Sampler::point(int height) { return affine_point(small_rational(height)); }

PointOnCurve Sampler::smooth_point(const NodalCurve& curve, std::size_t component,
                                   std::span<const PointOnCurve> avoid) {
  for (int attempt = 0; attempt < 4096; ++attempt) {
    PointOnCurve p{component, point()};
    if (curve.is_smooth_point(p) && std::find(avoid.begin(), avoid.end(), p) == avoid.end()) {
      return p;
    }
  }
  throw SamplingExhausted("no smooth point found on component " + std::to_string(component));
}

PointOnCurve Sampler::smooth_point(const NodalCurve& curve, std::span<const PointOnCurve> avoid) {
  return smooth_point(curve, below(curve.component_count()), avoid);
}

}  // namespace koszul::curves
