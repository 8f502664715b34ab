// Per-move traversal times in a uniform wind field.
//
// A UAV flying at airspeed v_a in wind v_w (blowing along +x) covers one
// cell pitch D in
//
//   Ts = D / (v_a + v_w)            with the wind
//   Tp = D / sqrt(v_a^2 - v_w^2)    across the wind
//   To = D / (v_a - v_w)            against the wind
//
// which gives Ts <= Tp <= To and Ts + To >= 2*Tp. The diagonal (Moore)
// times Tf and Tb come from the ground speed along a track at angle theta
// to the wind,
//
//   v_g(theta) = v_w*cos(theta) + sqrt(v_a^2 - v_w^2*sin^2(theta))
//
// with theta = pi/4 for the forward diagonal and 3*pi/4 for the backward
// one, each over the sqrt(2)*D diagonal distance. At theta = 0, pi/2, pi
// this reproduces Ts, Tp, To. The backward diagonal admits an equivalent
// law-of-sines form (tb_lawofsines below) used as a cross-check.
#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>

namespace mucpp {

struct WindKinematics {
  double airspeed = 1.0;    // v_a, m/s
  double wind_speed = 0.0;  // v_w, m/s
  double cell_pitch = 1.0;  // D, m

  void validate() const {
    if (cell_pitch <= 0.0) throw std::domain_error("cell_pitch must be > 0");
    if (wind_speed < 0.0) throw std::domain_error("wind_speed must be >= 0");
    if (airspeed <= wind_speed)
      throw std::domain_error(
          "airspeed must exceed wind speed (UAV cannot make headway)");
  }
};

struct MoveTimes {
  double ts = 1.0;  // one pitch with the wind
  double tp = 1.0;  // one pitch across the wind
  double to = 1.0;  // one pitch against the wind
  // Diagonal traversal times over the sqrt(2)*pitch distance; set only when
  // derived from kinematics (a raw Ts/Tp/To override has no wind vector to
  // derive them from).
  std::optional<double> tf;
  std::optional<double> tb;

  // Diagonal times normalized to one pitch of travel. These are the values
  // that interleave with the orthogonal times as
  //   Ts < Tf/sqrt(2) < Tp < Tb/sqrt(2) < To   for 0 < v_w < v_a,
  // the ordering that makes diagonal detours unprofitable.
  double tf_per_pitch() const { return *tf / std::numbers::sqrt2; }
  double tb_per_pitch() const { return *tb / std::numbers::sqrt2; }
};

namespace detail {
// Ground speed along a straight track at angle theta to the wind.
inline double ground_speed(double va, double vw, double theta) {
  double s = vw * std::sin(theta);
  return vw * std::cos(theta) + std::sqrt(va * va - s * s);
}
}  // namespace detail

/// All five per-move times from wind kinematics. Throws std::domain_error
/// when v_w >= v_a (no headway against the wind).
inline MoveTimes move_times(const WindKinematics& k) {
  k.validate();
  const double va = k.airspeed, vw = k.wind_speed, d = k.cell_pitch;
  MoveTimes t;
  t.ts = d / (va + vw);
  t.tp = d / std::sqrt(va * va - vw * vw);
  t.to = d / (va - vw);
  const double diag = std::numbers::sqrt2 * d;
  t.tf = diag / detail::ground_speed(va, vw, std::numbers::pi / 4);
  t.tb = diag / detail::ground_speed(va, vw, 3 * std::numbers::pi / 4);
  return t;
}

/// Backward-diagonal time via the law-of-sines construction:
///   alpha = arcsin(sqrt(2)*v_w / (2*v_a))
///   v_g   = sqrt(v_a^2 + v_w^2 - 2*v_a*v_w*cos(pi/4 - alpha))
///   Tb    = sqrt(2)*D / v_g
/// Algebraically equal to move_times().tb; kept as an independent route.
inline double tb_lawofsines(const WindKinematics& k) {
  k.validate();
  const double va = k.airspeed, vw = k.wind_speed, d = k.cell_pitch;
  if (vw == 0.0) return std::numbers::sqrt2 * d / va;
  const double alpha = std::asin(std::numbers::sqrt2 * vw / (2.0 * va));
  const double beta = std::numbers::pi / 4 - alpha;
  const double vg = std::sqrt(va * va + vw * vw - 2.0 * va * vw * std::cos(beta));
  return std::numbers::sqrt2 * d / vg;
}

/// g(gamma) for the wind ratio gamma = v_w/v_a in (0,1):
///   g = 1/(1+gamma)
///     + sqrt(2)/sqrt(1 + gamma^2 - 2*gamma*cos(pi/4 - arcsin(sqrt(2)*gamma/2)))
///     - 2/sqrt(1 - gamma^2)
/// (Ts + Tb - 2*Tp) in units of D/v_a. Positive and increasing on (0,1),
/// which is what rules out backward-diagonal shortcuts.
inline double g_of_gamma(double gamma) {
  if (!(gamma > 0.0 && gamma < 1.0))
    throw std::domain_error("g_of_gamma: gamma must lie in (0,1)");
  const double beta =
      std::numbers::pi / 4 - std::asin(std::numbers::sqrt2 * gamma / 2.0);
  return 1.0 / (1.0 + gamma) +
         std::numbers::sqrt2 /
             std::sqrt(1.0 + gamma * gamma - 2.0 * gamma * std::cos(beta)) -
         2.0 / std::sqrt(1.0 - gamma * gamma);
}

}  // namespace mucpp
