#include <matterwave/analytic.hpp>

#include <cmath>

namespace mw {

namespace {

// f, f', f'' of one phase profile.
struct Profile {
  double f;
  double d1;
  double d2;
};

void accumulate(ScalarJet& j, double amp, const Profile& pr, const Vec3& k, double k2, double omega) {
  j.value += amp * pr.f;
  j.grad += (amp * pr.d1) * k;
  j.lap += amp * pr.d2 * k2;
  j.dt += -omega * amp * pr.d1;
  j.dtt += omega * omega * amp * pr.d2;
}

void accumulate(VectorJet& j, const Vec3& amp, const Profile& pr, const Vec3& k, double k2,
                double omega) {
  j.value += pr.f * amp;
  j.lap += (pr.d2 * k2) * amp;
  j.dt += (-omega * pr.d1) * amp;
  j.dtt += (omega * omega * pr.d2) * amp;
  j.curl += pr.d1 * cross(k, amp);
  j.div += pr.d1 * dot(k, amp);
}

}  // namespace

FieldJets eval_jets(const std::vector<Mode>& modes, double c0, const Vec3& x, double t) {
  FieldJets j;
  for (const Mode& m : modes) {
    const double theta = dot(m.k, x) - m.omega * t;
    const double s = std::sin(theta);
    const double c = std::cos(theta);
    const double k2 = dot(m.k, m.k);
    const double cos2 = c * c - s * s;
    const Profile sine{s, c, -s};
    const Profile sine2{s * s, 2.0 * s * c, 2.0 * cos2};
    const Profile cosine2{c * c, -2.0 * s * c, -2.0 * cos2};
    const Profile cosine{c, -s, -c};

    accumulate(j.psi, m.psi0, sine, m.k, k2, m.omega);
    accumulate(j.rho, m.rho0, sine2, m.k, k2, m.omega);
    accumulate(j.phi, m.phi0, cosine2, m.k, k2, m.omega);
    accumulate(j.p, m.p_amp, sine2, m.k, k2, m.omega);
    accumulate(j.A, -c0 * m.p_amp, sine2, m.k, k2, m.omega);
    accumulate(j.E, m.E_amp, cosine, m.k, k2, m.omega);
    accumulate(j.B, m.B_amp, cosine, m.k, k2, m.omega);
  }
  return j;
}

}  // namespace mw
