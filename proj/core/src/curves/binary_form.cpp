#include "koszul/curves/binary_form.hpp"

#include "koszul/error.hpp"

namespace koszul::curves {

ProjPoint make_point(Rat a, Rat b) {
  if (b != 0) return ProjPoint{a / b, Rat(1)};
  if (a == 0) throw ModelError("(0:0) is not a point of P^1");
  return point_at_infinity();
}

ProjPoint affine_point(Rat a) { return ProjPoint{std::move(a), Rat(1)}; }

ProjPoint point_at_infinity() { return ProjPoint{Rat(1), Rat(0)}; }

Rat evaluate_form(std::span<const Rat> coeffs, const ProjPoint& p) {
  if (coeffs.empty()) return Rat(0);
  if (p.b == 0) return coeffs.front();
  // Horner in the affine coordinate; coefficient j multiplies a^(d-j).
  Rat value = 0;
  for (const auto& c : coeffs) value = value * p.a + c;
  return value;
}

RatVector multiply_forms(std::span<const Rat> a, std::span<const Rat> b) {
  if (a.empty() || b.empty()) return {};
  RatVector out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

RatVector vanishing_linear_form(const ProjPoint& p) { return {p.b, -p.a}; }

Rat linear_form_value(const ProjPoint& zero_of, const ProjPoint& at) {
  return zero_of.b * at.a - zero_of.a * at.b;
}

namespace {

// Dehomogenized polynomial in z = s/t, stored low degree first.
RatVector dehomogenize(const RatVector& form) {
  RatVector poly(form.rbegin(), form.rend());
  while (!poly.empty() && poly.back() == 0) poly.pop_back();
  return poly;
}

RatVector poly_mod(RatVector a, const RatVector& b) {
  while (a.size() >= b.size()) {
    const Rat f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

}  // namespace

bool have_common_zero(const std::vector<RatVector>& forms) {
  bool all_vanish_at_infinity = true;
  RatVector gcd;
  for (const auto& f : forms) {
    if (!f.empty() && f.front() != 0) all_vanish_at_infinity = false;
    RatVector g = dehomogenize(f);
    if (g.empty()) continue;
    if (gcd.empty()) {
      gcd = std::move(g);
      continue;
    }
    while (!g.empty()) {
      RatVector r = poly_mod(gcd, g);
      gcd = std::move(g);
      g = std::move(r);
    }
  }
  if (all_vanish_at_infinity) return true;  // includes the all-zero system
  return gcd.size() > 1;
}

}  // namespace koszul::curves
