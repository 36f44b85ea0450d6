#pragma once

// Straight-line reference formulas for cross-checking the library. Nothing
// here calls into uavvlc; inputs are plain doubles.

#include <cmath>
#include <numbers>
#include <vector>

namespace oracle {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kE = std::numbers::e;

struct Optics {
  double half_power_deg = 60.0;
  double fov_deg = 60.0;
  double area = 1e-4;
  double n_r = 1.5;
  double noise = 1e-11;
  int exponent = 2;
};

inline double deg(double d) { return d * kPi / 180.0; }

inline double gain(double ux, double uy, double uz, double rx, double ry, double rz,
                   const Optics& o = {}) {
  const double d = std::sqrt((ux - rx) * (ux - rx) + (uy - ry) * (uy - ry) + (uz - rz) * (uz - rz));
  const double c = (uz - rz) / d;
  const double psi = std::acos(c);
  if (psi >= deg(o.fov_deg)) {
    return 0.0;
  }
  const double m = -std::log(2.0) / std::log(std::cos(deg(o.half_power_deg)));
  const double g = o.n_r * o.n_r / (std::sin(deg(o.fov_deg)) * std::sin(deg(o.fov_deg)));
  return (m + 1.0) * o.area / (2.0 * kPi * std::pow(d, o.exponent)) * g * std::pow(c, m) * c;
}

inline double rate(double signal_sq, double interference_sq, double noise) {
  return 0.5 * std::log2(1.0 + kE / (2.0 * kPi) * signal_sq / (interference_sq + noise));
}

struct Rotor {
  double p0 = 79.86;
  double pi = 88.63;
  double u_tip = 120.0;
  double v0 = 4.03;
  double d0 = 0.6;
  double s = 0.05;
  double rho = 1.225;
  double a = 0.503;
};

inline double power(double v, const Rotor& r = {}) {
  const double blade = r.p0 * (1.0 + 3.0 * v * v / (r.u_tip * r.u_tip));
  const double induced =
      r.pi * std::sqrt(std::sqrt(1.0 + std::pow(v, 4) / (4.0 * std::pow(r.v0, 4))) -
                       v * v / (2.0 * r.v0 * r.v0));
  const double parasite = 0.5 * r.d0 * r.rho * r.s * r.a * v * v * v;
  return blade + induced + parasite;
}

struct Uav {
  double x, y, z, p;
};

struct Point {
  double x, y;
};

// f1 in W^2 (unscaled), f2, f3 for UAVs at altitude z over ground receivers.
inline double variance_w2(const std::vector<Uav>& uavs, const std::vector<Point>& rx,
                          const Optics& o = {}) {
  std::vector<double> pr;
  for (const Point& r : rx) {
    double total = 0.0;
    for (const Uav& u : uavs) {
      total += gain(u.x, u.y, u.z, r.x, r.y, 0.0, o) * u.p;
    }
    pr.push_back(total);
  }
  double mean = 0.0;
  for (double v : pr) mean += v;
  mean /= static_cast<double>(pr.size());
  double acc = 0.0;
  for (double v : pr) acc += (v - mean) * (v - mean);
  return acc / static_cast<double>(pr.size());
}

inline double leakage(const std::vector<Uav>& uavs, Point eve, const Optics& o = {}) {
  double total = 0.0;
  for (std::size_t i = 0; i < uavs.size(); ++i) {
    const double hi = gain(uavs[i].x, uavs[i].y, uavs[i].z, eve.x, eve.y, 0.0, o);
    if (hi == 0.0) continue;
    double interf = 0.0;
    for (std::size_t r = 0; r < uavs.size(); ++r) {
      if (r == i) continue;
      const double a = uavs[r].p * gain(uavs[r].x, uavs[r].y, uavs[r].z, eve.x, eve.y, 0.0, o);
      interf += a * a;
    }
    const double s = uavs[i].p * hi;
    total += rate(s * s, interf, o.noise);
  }
  return total;
}

inline double energy(const std::vector<Uav>& uavs, const std::vector<Point>& starts, double v,
                     const Rotor& r = {}) {
  double total = 0.0;
  for (std::size_t i = 0; i < uavs.size(); ++i) {
    const double l = std::hypot(uavs[i].x - starts[i].x, uavs[i].y - starts[i].y);
    total += power(v, r) * l / v;
  }
  return total;
}

// Monte-Carlo dominated volume in the box [0, ref].
template <typename Rng, typename Points>
double monte_carlo_hv(const Points& pts, const double ref[3], int samples, Rng& rng,
                      double* stderr_out) {
  int hits = 0;
  for (int s = 0; s < samples; ++s) {
    const double q[3] = {rng.uniform01() * ref[0], rng.uniform01() * ref[1],
                         rng.uniform01() * ref[2]};
    for (const auto& p : pts) {
      if (p[0] <= q[0] && p[1] <= q[1] && p[2] <= q[2]) {
        ++hits;
        break;
      }
    }
  }
  const double vol = ref[0] * ref[1] * ref[2];
  const double frac = static_cast<double>(hits) / samples;
  *stderr_out = vol * std::sqrt(frac * (1.0 - frac) / samples);
  return vol * frac;
}

} // namespace oracle
