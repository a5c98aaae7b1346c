#include <doctest.h>

#include <cmath>
#include <numbers>

#include <matterwave/error.hpp>
#include <matterwave/interaction.hpp>
#include <matterwave/numeric.hpp>
#include <matterwave/spin.hpp>

using namespace mw;

namespace {

template <class F>
ErrorCode code_of(F f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidConfig;
}

Constants random_constants(Rng& rng) {
  ConstantOverrides o;
  o.c0 = rng.uniform(0.5, 10);
  o.hbar = rng.uniform(0.1, 5);
  o.m = rng.uniform(0.1, 5);
  o.e = rng.uniform(0.1, 5);
  o.sigma_bar = rng.uniform(0.1, 5);
  return make_constants(UnitSystem::Natural, o);
}

}  // namespace

TEST_SUITE("spin") {
  TEST_CASE("photon spin") {
    const SpinResult s = spin_photon(natural_constants(), 3.0);
    CHECK(s.s == doctest::Approx(1.0));
    CHECK(s.g == doctest::Approx(1.0));
    CHECK(s.product_gs == doctest::Approx(1.0));
    ConstantOverrides o;
    o.hbar = 2.0;
    const SpinResult t = spin_photon(make_constants(UnitSystem::Natural, o), 3.0);
    CHECK(t.s == doctest::Approx(2.0));
    CHECK(t.g == doctest::Approx(1.0));
    CHECK(code_of([] { spin_photon(natural_constants(), 0.0); }) == ErrorCode::InvalidFrequency);
    CHECK(code_of([] { spin_electron(natural_constants(), -1.0); }) == ErrorCode::InvalidFrequency);
  }

  TEST_CASE("electron spin") {
    const SpinResult s = spin_electron(natural_constants(), 1.0);
    CHECK(s.s == doctest::Approx(0.5));
    CHECK(s.g == doctest::Approx(2.0));
    CHECK(s.product_gs == doctest::Approx(1.0));
  }

  TEST_CASE("g s = hbar for arbitrary constants and frequencies") {
    Rng rng(41);
    for (int i = 0; i < 200; ++i) {
      const Constants c = random_constants(rng);
      const double w = rng.uniform(0.01, 100);
      const SpinResult p = spin_photon(c, w);
      const SpinResult e = spin_electron(c, w);
      CHECK(std::abs(p.product_gs - c.hbar) <= 1e-12 * c.hbar);
      CHECK(std::abs(e.product_gs - c.hbar) <= 1e-12 * c.hbar);
      CHECK(std::abs(p.g - 1.0) <= 1e-12);
      CHECK(std::abs(e.g - 2.0) <= 1e-12);
      CHECK(p.s == c.hbar);
      CHECK(e.s == 0.5 * c.hbar);
      CHECK(p.B_used == doctest::Approx(c.c0 * 2 * (c.m / c.e) * w));
    }
  }

  TEST_CASE("direction follows the polarization triad") {
    ConstantOverrides o;
    o.c0 = 10;
    const ParticleSpec e = make_electron(make_constants(UnitSystem::Natural, o), 1.0, {0, 0.6, 0.2});
    const SpinResult s = spin_of(e);
    CHECK(norm(s.direction - e.e_b()) <= 1e-15);
    CHECK(std::abs(dot(s.direction, e.e_k)) <= 1e-15);
    CHECK(s.g == doctest::Approx(2.0));
  }

  TEST_CASE("plane-wave momentum has no curl") {
    ConstantOverrides o;
    o.c0 = 10;
    const ParticleSpec e = make_electron(make_constants(UnitSystem::Natural, o), 1.0, {0.3, 0.4, -0.2});
    const VectorEvaluator b = magnetic_field_from_curl(e, 2);
    Rng rng(2);
    for (int i = 0; i < 100; ++i) {
      const Vec3 x{rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-5, 5)};
      CHECK(norm(b(x, rng.uniform(-5, 5))) <= 1e-14);
    }
    CHECK(code_of([&] { magnetic_field_from_curl(e, 3); }) == ErrorCode::InvalidFactor);
  }

  TEST_CASE("rigid rotation reproduces the rotation fields") {
    // Test field only: p = rho_bar (omega x r) has curl 2 rho_bar omega.
    const Constants c = natural_constants();
    const RigidRotation rot{0.5, {0, 0, 1.7}};
    const VectorEvaluator photon = magnetic_field_from_curl(rot.jacobian(), c.sigma_bar, 1);
    const VectorEvaluator electron = magnetic_field_from_curl(rot.jacobian(), c.sigma_bar, 2);
    const double w = 1.7;
    const Vec3 x{0.3, -1.2, 0.4};
    CHECK(std::abs(norm(photon(x, 0.0)) - 2 * rot.rho_bar / c.sigma_bar * w) <= 1e-6);
    CHECK(std::abs(norm(electron(x, 0.0)) - rot.rho_bar / c.sigma_bar * w) <= 1e-6);
    // Jacobian against a difference quotient of the momentum itself.
    const double h = 1e-4;
    const Vec3 dpx = (rot.momentum(x + Vec3{h, 0, 0}) - rot.momentum(x - Vec3{h, 0, 0})) / (2 * h);
    CHECK(norm(dpx - rot.jacobian()(x, 0.0)[0]) <= 1e-9);
  }
}

TEST_SUITE("interaction") {
  TEST_CASE("hamiltonian balance examples") {
    const Constants c = natural_constants();
    const InteractionState a = hamiltonian_balance(1.0, 0.2, 1.0, 0.0, c);
    CHECK(a.H_w == doctest::Approx(-0.04));
    CHECK(a.rho_ph0 == doctest::Approx(0.04));
    CHECK(a.sign_tension);
    const InteractionState b = hamiltonian_balance(1.0, 0.0, 1.0, 0.3, c);
    CHECK(b.H_w == 0.0);
    CHECK(b.rho_ph0 == 0.0);
    CHECK(b.H == b.H0);
    CHECK_FALSE(b.sign_tension);
    CHECK(hamiltonian_balance(2.0, 0.5, 1.0, 0.0, c).rho_ph0 == doctest::Approx(0.5));
    CHECK(code_of([&] { hamiltonian_balance(1.0, 1.0, 1.0, 0.0, c); }) == ErrorCode::SuperluminalElectron);
    CHECK(code_of([&] { hamiltonian_balance(0.0, 0.1, 1.0, 0.0, c); }) == ErrorCode::InvalidArgument);
  }

  TEST_CASE("balance over a velocity sweep") {
    ConstantOverrides o;
    o.c0 = 3.0;
    const Constants c = make_constants(UnitSystem::Natural, o);
    for (int i = 0; i < 100; ++i) {
      const double xdot = -2.97 + 0.06 * i;
      const InteractionState s = hamiltonian_balance(1.3, xdot, 0.7, -0.4, c);
      const double kinetic = 1.3 * xdot * xdot;
      CHECK(std::abs(s.rho_ph0 * c.c0 * c.c0 - kinetic) <= 1e-12 * std::max(kinetic, 1.0));
      CHECK(std::abs(s.H - (s.H0 + s.H_w)) <= 1e-15 * std::max(std::abs(s.H0), 1.0));
    }
  }

  TEST_CASE("transfer rate") {
    const Constants c = natural_constants();
    CHECK(transfer_rate(c, 1.0) == doctest::Approx(2 * std::numbers::pi));
    CHECK(transfer_rate(c, 3.0) == doctest::Approx(9 * c.h));
    for (double nu : {0.01, 0.5, 1.0, 7.0, 1e3}) {
      const TransferSpec t = make_transfer_spec(1.0, nu, 1.0);
      CHECK(t.tau * t.nu == doctest::Approx(1.0));
      CHECK(std::abs(transfer_rate(c, nu) * t.tau - c.h * nu) <= 1e-12 * c.h * nu);
    }
    CHECK(code_of([&] { transfer_rate(c, 0.0); }) == ErrorCode::InvalidFrequency);
    CHECK(code_of([&] { make_transfer_spec(1.0, -1.0, 1.0); }) == ErrorCode::InvalidFrequency);
  }

  TEST_CASE("transfer quantum") {
    const Constants c = natural_constants();
    const double nu = 2.0;
    const double lambda = c.c0 / nu;
    const double A = 0.3;
    const double V_ph = A * lambda;
    const TransferSpec t = make_transfer_spec(A, nu, lambda);
    const double rho = c.h * nu / (V_ph * c.c0 * c.c0);
    const TransferQuantum q = transfer_quantum(t, rho, c);
    CHECK(q.dW == doctest::Approx(c.h * nu));
    CHECK(std::abs(q.residual) <= 1e-12);
    CHECK(transfer_quantum(t, 0.0, c).dW == 0.0);
    const TransferQuantum doubled = transfer_quantum(make_transfer_spec(2 * A, nu, lambda), rho, c);
    CHECK(doubled.dW == doctest::Approx(2 * q.dW));
    const TransferQuantum rescaled = transfer_quantum(make_transfer_spec(A / 4, nu, lambda), 4 * rho, c);
    CHECK(rescaled.dW == doctest::Approx(q.dW).epsilon(1e-14));
  }
}
