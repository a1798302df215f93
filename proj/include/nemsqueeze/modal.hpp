// Fundamental flexural mode of a thin film: frequency, effective mass,
// zero-point displacement uncertainty, thermal occupation, relaxation time.
#pragma once

#include <cmath>

#include "nemsqueeze/constants.hpp"
#include "nemsqueeze/device.hpp"

namespace nemsqueeze {

// w = 3.52 h sqrt(E/rho) / L^2 (cantilever), 6.48 ... (doubly clamped).
inline double modal_frequency(const Material& mat, const Geometry& geo) {
  const double coeff = geo.clamping == Clamping::cantilever ? 3.52 : 6.48;
  return coeff * geo.thickness * std::sqrt(mat.youngs_modulus / mat.density) /
         (geo.length * geo.length);
}

// Mode frequency under applied strain: w_eps = sqrt(w^2 + E eps pi^2/(rho' L^2)).
inline double strained_frequency(double omega, const Material& mat,
                                 const Geometry& geo, const Environment& env) {
  if (env.strain == 0.0) return omega;
  const double rho_eff = env.strained_density.value_or(mat.density);
  const double pi = 3.14159265358979323846;
  const double term = mat.youngs_modulus * env.strain * pi * pi /
                      (rho_eff * geo.length * geo.length);
  return std::sqrt(omega * omega + term);
}

// M_eff = M/4 = rho L W h / 4.
inline double effective_mass(const Material& mat, const Geometry& geo) {
  return mat.density * geo.length * geo.width * geo.thickness / 4.0;
}

// dx_zp = sqrt(hbar / (2 M_eff w)).
inline double zero_point_uncertainty(double m_eff, double omega) {
  return std::sqrt(constants.hbar / (2.0 * m_eff * omega));
}

// Bose occupation N = 1/(exp(hbar w / kB T) - 1). expm1 keeps the
// high-temperature limit (argument < 1e-6) free of cancellation.
inline double thermal_occupation(double omega, double temperature) {
  const double x = constants.hbar * omega / (constants.k_B * temperature);
  return 1.0 / std::expm1(x);
}

// tau = Q / w.
inline double relaxation_time(double quality_factor, double omega) {
  return quality_factor / omega;
}

struct DerivedModal {
  double omega;           // fundamental flexural frequency [rad/s]
  double omega_strained;  // w_eps [rad/s]; equals omega at zero strain
  double m_eff;           // effective motional mass [kg]
  double dx_zp;           // zero-point displacement uncertainty [m]
  double n_quanta;        // thermal occupation at (omega, T)
  double tau;             // relaxation time Q/w [s]
};

inline DerivedModal derive_modal(const Material& mat, const Geometry& geo,
                                 const Environment& env) {
  DerivedModal d{};
  d.omega = modal_frequency(mat, geo);
  d.omega_strained = strained_frequency(d.omega, mat, geo, env);
  d.m_eff = effective_mass(mat, geo);
  d.dx_zp = zero_point_uncertainty(d.m_eff, d.omega);
  d.n_quanta = thermal_occupation(d.omega, env.temperature);
  d.tau = relaxation_time(env.quality_factor, d.omega);
  return d;
}

}  // namespace nemsqueeze
