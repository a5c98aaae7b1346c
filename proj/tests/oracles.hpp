#pragma once

// Reference derivatives for the tests, independent of the library's
// closed-form jets and of its stencil code: sixth-order central differences
// on point evaluators, with a step small enough that truncation sits near
// 1e-11 for O(1) wavenumbers.

#include <array>
#include <cmath>
#include <functional>

#include <matterwave/vec3.hpp>

namespace oracle {

using Point = std::array<double, 4>;  // x, y, z, t
using Scalar = std::function<double(const Point&)>;

inline constexpr double kStep = 1e-2;

inline Point shifted(Point p, int axis, double d) {
  p[axis] += d;
  return p;
}

inline double d1(const Scalar& f, const Point& p, int axis, double h = kStep) {
  auto at = [&](double k) { return f(shifted(p, axis, k * h)); };
  return (45.0 * (at(1) - at(-1)) - 9.0 * (at(2) - at(-2)) + (at(3) - at(-3))) / (60.0 * h);
}

inline double d2(const Scalar& f, const Point& p, int axis, double h = kStep) {
  auto at = [&](double k) { return f(shifted(p, axis, k * h)); };
  return (2.0 * (at(3) + at(-3)) - 27.0 * (at(2) + at(-2)) + 270.0 * (at(1) + at(-1)) - 490.0 * at(0)) /
         (180.0 * h * h);
}

inline double laplacian(const Scalar& f, const Point& p) { return d2(f, p, 0) + d2(f, p, 1) + d2(f, p, 2); }

inline Point point(const mw::Vec3& x, double t) { return {x.x, x.y, x.z, t}; }

inline mw::Vec3 position(const Point& p) { return {p[0], p[1], p[2]}; }

}  // namespace oracle
