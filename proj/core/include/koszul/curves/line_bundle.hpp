#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "koszul/curves/nodal_curve.hpp"

namespace koszul::curves {

using CurvePtr = std::shared_ptr<const NodalCurve>;

/// Offsets of the per-component coefficient blocks in the ambient space
/// sum_i H^0(P^1, O(d_i)). Components of negative degree have width 0.
class AmbientLayout {
 public:
  explicit AmbientLayout(const std::vector<long>& degrees);

  std::size_t dimension() const { return offsets_.back(); }
  std::size_t offset(std::size_t component) const { return offsets_[component]; }
  std::size_t width(std::size_t component) const {
    return offsets_[component + 1] - offsets_[component];
  }

 private:
  std::vector<std::size_t> offsets_;
};

/// Line bundle on a nodal curve: degree d_i on component i plus one gluing
/// scalar per node. A section is a tuple of binary forms (f_i) with
/// f_{a}(branch a) = gluing * f_{b}(branch b) at every node.
class LineBundle {
 public:
  LineBundle(CurvePtr curve, std::vector<long> degrees, std::vector<Rat> gluings);

  /// O_X: degree 0 everywhere, all gluings 1.
  static LineBundle trivial(CurvePtr curve);

  const NodalCurve& curve() const { return *curve_; }
  const CurvePtr& curve_ptr() const { return curve_; }
  const std::vector<long>& degrees() const { return degrees_; }
  const std::vector<Rat>& gluings() const { return gluings_; }
  long total_degree() const;
  AmbientLayout layout() const { return AmbientLayout(degrees_); }

  LineBundle tensor(const LineBundle& other) const;
  LineBundle dual() const;
  LineBundle power(long k) const;
  /// Isomorphic bundle obtained by scaling the trivialization of component i
  /// by factors[i].
  LineBundle rescaled(const std::vector<Rat>& factors) const;

  bool same_curve(const LineBundle& other) const;

 private:
  CurvePtr curve_;
  std::vector<long> degrees_;
  std::vector<Rat> gluings_;
};

}  // namespace koszul::curves
