#include <doctest.h>

#include <cmath>
#include <functional>
#include <numbers>

#include <matterwave/error.hpp>
#include <matterwave/model.hpp>
#include <matterwave/numeric.hpp>

using namespace mw;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected mw::Error");
  return ErrorCode::InvalidArgument;
}

Constants with_c0(double c0) {
  ConstantOverrides o;
  o.c0 = c0;
  return make_constants(UnitSystem::Natural, o);
}

}  // namespace

TEST_SUITE("model") {
  TEST_CASE("natural constants") {
    const Constants c = make_constants(UnitSystem::Natural);
    CHECK(c.c0 == 1.0);
    CHECK(c.hbar == 1.0);
    CHECK(c.h == doctest::Approx(6.2831853).epsilon(1e-8));
    CHECK(c.m == 1.0);
    CHECK(c.sigma_bar == 1.0);
  }

  TEST_CASE("h follows hbar overrides") {
    ConstantOverrides o;
    o.hbar = 2.0;
    CHECK(make_constants(UnitSystem::Natural, o).h == doctest::Approx(4.0 * std::numbers::pi));
    const Constants si = make_constants(UnitSystem::SI);
    CHECK(si.h == 2.0 * std::numbers::pi * si.hbar);
    // rho_bar / sigma_bar = m / e for unit rho_bar
    CHECK(1.0 / si.sigma_bar == doctest::Approx(si.m / si.e).epsilon(1e-15));
  }

  TEST_CASE("non-positive constants rejected") {
    ConstantOverrides o;
    o.c0 = -1.0;
    CHECK(code_of([&] { make_constants(UnitSystem::Natural, o); }) == ErrorCode::InvalidConstant);
    o.c0 = 0.0;
    CHECK(code_of([&] { make_constants(UnitSystem::Natural, o); }) == ErrorCode::InvalidConstant);
  }

  TEST_CASE("canonical electron") {
    const ParticleSpec s = make_electron(with_c0(10.0), 2.0, {1, 0, 0}, 1.0);
    CHECK(s.wavenumber() == doctest::Approx(1.0));
    CHECK(s.omega == doctest::Approx(1.0));
    CHECK(s.phase_velocity() == doctest::Approx(1.0));
    CHECK(s.V_P == 1.0);
    CHECK(s.rho0 == 2.0);
    CHECK(s.u == Vec3{1, 0, 0});
    CHECK_NOTHROW(validate(s));
  }

  TEST_CASE("electron preconditions") {
    CHECK(code_of([] { make_electron(natural_constants(), 1.0, {1, 0, 0}); }) == ErrorCode::SuperluminalElectron);
    CHECK(code_of([] { make_electron(natural_constants(), 1.0, {0, 0, 0}); }) == ErrorCode::ZeroVelocity);
    CHECK(code_of([] { make_electron(with_c0(10), -1.0, {1, 0, 0}); }) == ErrorCode::InvalidArgument);
  }

  TEST_CASE("photon construction") {
    const ParticleSpec a = make_photon(natural_constants(), 1.0, {1, 0, 0}, 1.0);
    CHECK(a.wavenumber() == doctest::Approx(1.0));
    CHECK(a.phi0 == doctest::Approx(1.0));
    const ParticleSpec b = make_photon(natural_constants(), 3.0, {0, 1, 0}, 2.0);
    CHECK(b.wavenumber() == doctest::Approx(2.0));
    CHECK(b.phi0 == doctest::Approx(3.0));
    CHECK(code_of([] { make_photon(natural_constants(), 1.0, {1, 0, 0}, 0.0); }) == ErrorCode::InvalidArgument);
  }

  TEST_CASE("phase velocity equals speed for random specs") {
    Rng rng(42);
    for (int i = 0; i < 200; ++i) {
      const Constants c = with_c0(rng.uniform(1.5, 20.0));
      const Vec3 dir = normalized(Vec3{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)});
      const double speed = rng.uniform(0.01, 0.99) * c.c0;
      const ParticleSpec e = make_electron(c, rng.uniform(0.1, 5.0), speed * dir);
      CHECK(std::abs(e.phase_velocity() / e.speed() - 1.0) <= 1e-14);
      CHECK(std::abs(dot(e.e_k, e.e_t)) <= 1e-14);
      CHECK_NOTHROW(validate(e));
      const ParticleSpec p = make_photon(c, rng.uniform(0.1, 5.0), dir, rng.uniform(0.1, 10.0));
      CHECK(std::abs(p.phase_velocity() / c.c0 - 1.0) <= 1e-14);
      CHECK_NOTHROW(validate(p));
    }
  }

  TEST_CASE("detuned spec fails validation") {
    const ParticleSpec s = detuned(make_electron(with_c0(10), 2.0, {1, 0, 0}), 1.1);
    CHECK(code_of([&] { validate(s); }) == ErrorCode::InvalidArgument);
  }

  TEST_CASE("transversal direction is orthonormal") {
    for (const Vec3& k : {Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}, normalized(Vec3{1, 1, 1}),
                          normalized(Vec3{0.9, -0.1, 1e-9})}) {
      const Vec3 t = transversal_direction(k);
      CHECK(norm(t) == doctest::Approx(1.0).epsilon(1e-15));
      CHECK(std::abs(dot(t, k)) <= 1e-15);
    }
  }

  TEST_CASE("packet amplitudes and photon balance") {
    const Constants c = natural_constants();
    const WavePacket p = make_packet({make_photon(c, 1.0, {1, 0, 0}, 1.0), make_photon(c, 2.0, {0, 1, 0}, 3.0)});
    REQUIRE(p.size() == 2);
    CHECK(p.p0[1] == doctest::Approx(2.0));
    CHECK(p.phi0[1] == doctest::Approx(2.0));
    for (std::size_t i = 0; i < p.size(); ++i) CHECK(std::abs(photon_balance_residual(p, i)) <= 1e-14);
    CHECK(code_of([&] { make_packet({}); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([&] {
            make_packet({make_photon(c, 1.0, {1, 0, 0}, 1.0), make_electron(with_c0(10), 1.0, {1, 0, 0})});
          }) == ErrorCode::InvalidArgument);
  }
}

TEST_SUITE("numeric") {
  TEST_CASE("pairwise sum and shortest formatting") {
    std::vector<double> v(1000, 0.1);
    CHECK(pairwise_sum(v) == doctest::Approx(100.0).epsilon(1e-14));
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(1.0) == "1");
    CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
  }

  TEST_CASE("seeded generator is reproducible") {
    Rng a(5);
    Rng b(5);
    for (int i = 0; i < 100; ++i) {
      const double x = a.uniform();
      CHECK(x == b.uniform());
      CHECK(x >= 0.0);
      CHECK(x < 1.0);
    }
  }
}
