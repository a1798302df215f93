// Physical constants (CODATA 2018). Compiled in, never configurable.
#pragma once

namespace nemsqueeze {

struct PhysicalConstants {
  double hbar;      // reduced Planck constant [J s]
  double k_B;       // Boltzmann constant [J/K]
  double e_charge;  // elementary charge [C]
  double m_e;       // electron mass [kg]
  double eps0;      // vacuum permittivity [F/m]
  double c_light;   // speed of light [m/s]
  double v_F;       // graphene Fermi velocity, c/300 [m/s]
};

inline constexpr PhysicalConstants constants{
    1.054571817e-34,
    1.380649e-23,
    1.602176634e-19,
    9.1093837015e-31,
    8.8541878128e-12,
    2.99792458e8,
    2.99792458e8 / 300.0,
};

}  // namespace nemsqueeze
