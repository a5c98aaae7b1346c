#pragma once

#include <vector>

#include <matterwave/fields.hpp>
#include <matterwave/vec3.hpp>

namespace mw {

// Closed-form value and derivatives of every channel at one spacetime point.
// Each mode contributes amplitude * f(theta) with theta = k.x - omega t, so
// grad f = f' k, lap f = f'' |k|^2, df/dt = -omega f', d2f/dt2 = omega^2 f''.

struct ScalarJet {
  double value = 0.0;
  Vec3 grad;
  double lap = 0.0;
  double dt = 0.0;
  double dtt = 0.0;
};

struct VectorJet {
  Vec3 value;
  Vec3 lap;
  Vec3 dt;
  Vec3 dtt;
  Vec3 curl;
  double div = 0.0;
};

struct FieldJets {
  ScalarJet psi;
  ScalarJet rho;
  ScalarJet phi;
  VectorJet p;
  VectorJet E;
  VectorJet B;
  VectorJet A;
};

FieldJets eval_jets(const std::vector<Mode>& modes, double c0, const Vec3& x, double t);

}  // namespace mw
