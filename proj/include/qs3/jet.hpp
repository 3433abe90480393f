#pragma once

#include <cmath>

namespace qs3 {

// First-order dual number a + b*eps with eps^2 = 0. Pushing a curve's
// coordinates through arithmetic in this type yields exact directional
// derivatives of everything downstream; sqrt is the only nonlinear
// primitive the geometry needs.
struct Jet {
  double v = 0.0;  // value
  double d = 0.0;  // directional derivative

  Jet() = default;
  Jet(double value) : v(value) {}  // constants carry zero derivative
  Jet(double value, double deriv) : v(value), d(deriv) {}
};

inline Jet operator+(Jet a, Jet b) { return {a.v + b.v, a.d + b.d}; }
inline Jet operator-(Jet a, Jet b) { return {a.v - b.v, a.d - b.d}; }
inline Jet operator-(Jet a) { return {-a.v, -a.d}; }
inline Jet operator*(Jet a, Jet b) { return {a.v * b.v, a.v * b.d + a.d * b.v}; }
inline Jet operator/(Jet a, Jet b) { return {a.v / b.v, (a.d * b.v - a.v * b.d) / (b.v * b.v)}; }

inline Jet& operator+=(Jet& a, Jet b) { return a = a + b; }
inline Jet& operator-=(Jet& a, Jet b) { return a = a - b; }
inline Jet& operator*=(Jet& a, Jet b) { return a = a * b; }
inline Jet& operator/=(Jet& a, Jet b) { return a = a / b; }

inline Jet sqrt(Jet a) {
  const double r = std::sqrt(a.v);
  return {r, a.d / (2.0 * r)};
}

inline double value(double x) { return x; }
inline double value(Jet x) { return x.v; }

}  // namespace qs3
