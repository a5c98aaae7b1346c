#include <doctest.h>

#include <cmath>
#include <functional>
#include <numbers>

#include <matterwave/diffops.hpp>
#include <matterwave/error.hpp>
#include <matterwave/numeric.hpp>

using namespace mw;

namespace {

constexpr double kPi = std::numbers::pi;

using Fn = std::function<double(double, double, double, double)>;

ScalarField fill(const GridGeometry& g, const Fn& f) {
  ScalarField out(g);
  for (std::size_t i = 0; i < g.dims.total(); ++i) {
    const auto [ix, iy, iz, it] = g.unravel(i);
    const Vec3 x = g.position(ix, iy, iz);
    out.values[i] = f(x.x, x.y, x.z, g.time(it));
  }
  return out;
}

double max_abs(const ScalarField& f) {
  double m = 0.0;
  for (double v : f.values) m = std::max(m, std::abs(v));
  return m;
}

// Max error of op(f) against the exact derivative over the interior lattice.
double max_error(const ScalarField& approx, const Fn& exact) {
  const ScalarField ref = fill(approx.geometry, exact);
  double m = 0.0;
  for (std::size_t i = 0; i < ref.values.size(); ++i) m = std::max(m, std::abs(approx.values[i] - ref.values[i]));
  return m;
}

GridGeometry cube(double h, double dt, std::size_t n = 9) { return {{0.2, -0.1, 0.3}, 0.05, h, dt, {n, n, n, n}}; }

const Fn wave = [](double x, double y, double z, double t) { return std::sin(0.7 * x - 0.4 * y + 0.5 * z - 0.9 * t); };
const Fn wave_lap = [](double x, double y, double z, double t) {
  return -(0.49 + 0.16 + 0.25) * std::sin(0.7 * x - 0.4 * y + 0.5 * z - 0.9 * t);
};
const Fn wave_dt = [](double x, double y, double z, double t) { return -0.9 * std::cos(0.7 * x - 0.4 * y + 0.5 * z - 0.9 * t); };
const Fn wave_dtt = [](double x, double y, double z, double t) {
  return -0.81 * std::sin(0.7 * x - 0.4 * y + 0.5 * z - 0.9 * t);
};

}  // namespace

TEST_SUITE("diffops") {
  TEST_CASE("laplacian of sin at its crest") {
    const double h = 0.05;
    // x = pi/2 lands on ix = 4
    const GridGeometry g{{kPi / 2 - 4 * h, 0, 0}, 0.0, h, h, {9, 9, 9, 9}};
    const ScalarField f = fill(g, [](double x, double, double, double) { return std::sin(x); });
    const ScalarField lap = laplacian(f, StencilConfig::for_grid(g));
    const double v = lap.at(3, 3, 3, 3);
    CHECK(std::abs(v + 1.0) <= h * h);
  }

  TEST_CASE("constant fields have zero derivatives") {
    const GridGeometry g = cube(0.1, 0.1);
    const ScalarField c = fill(g, [](double, double, double, double) { return 3.25; });
    for (int order : {2, 4}) {
      const StencilConfig cfg = StencilConfig::for_grid(g, order);
      CHECK(max_abs(laplacian(c, cfg)) <= 1e-12);
      CHECK(max_abs(d_dt(c, cfg)) <= 1e-12);
      CHECK(max_abs(d2_dt2(c, cfg)) <= 1e-12);
      const VectorField cc = curl({c, c, c}, cfg);
      for (const auto& comp : cc) CHECK(max_abs(comp) <= 1e-12);
    }
  }

  TEST_CASE("interior shrinks by order/2") {
    const GridGeometry g = cube(0.1, 0.1);
    const ScalarField f = fill(g, wave);
    CHECK(laplacian(f, StencilConfig::for_grid(g, 2)).geometry.dims.nx == 7);
    const ScalarField l4 = laplacian(f, StencilConfig::for_grid(g, 4));
    CHECK(l4.geometry.dims.nt == 5);
    CHECK(l4.geometry.origin.x == doctest::Approx(g.origin.x + 0.2));
  }

  TEST_CASE("measured convergence order") {
    for (int order : {2, 4}) {
      const double h = 0.2;
      const double dt = 0.15;
      // Same physical interior box: coarse and fine both cover it.
      const GridGeometry coarse = cube(h, dt, 9);
      const GridGeometry fine{coarse.origin, coarse.t0, h / 2, dt / 2, {17, 17, 17, 17}};
      const StencilConfig cc = StencilConfig::for_grid(coarse, order);
      const StencilConfig cf = StencilConfig::for_grid(fine, order);
      const ScalarField fc = fill(coarse, wave);
      const ScalarField ff = fill(fine, wave);
      const double r_lap = max_error(laplacian(fc, cc), wave_lap) / max_error(laplacian(ff, cf), wave_lap);
      const double r_dt = max_error(d_dt(fc, cc), wave_dt) / max_error(d_dt(ff, cf), wave_dt);
      const double r_dtt = max_error(d2_dt2(fc, cc), wave_dtt) / max_error(d2_dt2(ff, cf), wave_dtt);
      for (double r : {r_lap, r_dt, r_dtt}) {
        CHECK(std::abs(std::log2(r) - order) <= 0.3);
      }
      if (order == 2) {
        CHECK(r_lap >= 3.5);
        CHECK(r_lap <= 4.5);
      }
    }
  }

  TEST_CASE("gradient of sin(k.x) at phase zero") {
    const double h = 0.02;
    const GridGeometry g{{-4 * h, -4 * h, -4 * h}, 0.0, h, h, {9, 9, 9, 9}};
    const Vec3 k{0.6, -0.3, 0.8};
    const ScalarField f = fill(g, [&](double x, double y, double z, double) { return std::sin(k.x * x + k.y * y + k.z * z); });
    const VectorField gr = grad(f, StencilConfig::for_grid(g));
    // Origin of the lattice maps to interior index 3.
    for (int a = 0; a < 3; ++a) CHECK(std::abs(gr[a].at(3, 3, 3, 0) - k[a]) <= h * h);
  }

  TEST_CASE("div curl vanishes and operators are linear") {
    const GridGeometry g = cube(0.1, 0.1, 11);
    const StencilConfig cfg = StencilConfig::for_grid(g, 2);
    Rng rng(9);
    const double a = rng.uniform(0.2, 1.0), b = rng.uniform(0.2, 1.0), c = rng.uniform(0.2, 1.0);
    const VectorField F = {fill(g, [&](double x, double y, double z, double) { return std::sin(a * y + b * z) * x; }),
                           fill(g, [&](double x, double y, double z, double) { return std::cos(b * x * z + c * y); }),
                           fill(g, [&](double x, double y, double z, double t) { return std::sin(c * x - a * y * z + t); })};
    CHECK(max_abs(div(curl(F, cfg), cfg)) <= 1e-12);

    const ScalarField G = fill(g, wave);
    const ScalarField combo = combine(2.5, F[0], -0.75, G);
    const ScalarField lhs = laplacian(combo, cfg);
    const ScalarField rhs = combine(2.5, laplacian(F[0], cfg), -0.75, laplacian(G, cfg));
    CHECK(max_abs(combine(1.0, lhs, -1.0, rhs)) <= 1e-12);
  }

  TEST_CASE("translation by whole periods") {
    const double lambda = 2 * kPi;
    const Fn f = [](double x, double, double, double t) { return std::sin(x - t); };
    GridGeometry g{{0.1, 0, 0}, 0.0, lambda / 16, lambda / 64, {9, 9, 9, 9}};
    GridGeometry shifted = g;
    shifted.origin.x += 3 * lambda;
    shifted.t0 += 2 * lambda;
    const StencilConfig cfg = StencilConfig::for_grid(g);
    const ScalarField a = laplacian(fill(g, f), cfg);
    const ScalarField b = laplacian(fill(shifted, f), cfg);
    CHECK(max_abs(combine(1.0, a, -1.0, b)) <= 1e-11);
  }

  TEST_CASE("invalid stencil configurations") {
    const GridGeometry g = cube(0.1, 0.1);
    const ScalarField f = fill(g, wave);
    CHECK_THROWS_AS(partial(f, 0, 1, {3, 0.1, 0.1}), Error);
    CHECK_THROWS_AS(partial(f, 0, 1, {2, 0.2, 0.1}), Error);
    CHECK_THROWS_AS(partial(f, 4, 1, {2, 0.1, 0.1}), Error);
    try {
      validate(StencilConfig{2, -1.0, 0.1});
      FAIL("expected error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InvalidArgument);
    }
  }
}
