// Structure, quantum, and screening capacitances and their series total C_T.
//
// The published quantum-capacitance formulas are per unit area (F/m^2); the
// device value is the per-area value times the plate area L*W. The screening
// capacitance has no closed form here and is a user-supplied farad value,
// excluded by default (C_s -> infinity).
#pragma once

#include <algorithm>
#include <cmath>
#include <optional>

#include "nemsqueeze/constants.hpp"
#include "nemsqueeze/device.hpp"
#include "nemsqueeze/errors.hpp"

namespace nemsqueeze {

enum class GrapheneLayer { monolayer, bilayer, trilayer };

struct ChargeModel {
  bool include_quantum = false;
  std::optional<double> carrier_density;       // n [1/m^2], monolayer C_q
  std::optional<double> effective_mass_ratio;  // m*/m_e, bi/trilayer C_q
  std::optional<double> screen_capacitance;    // C_s [F]; unset = excluded
};

struct CapacitanceStack {
  double c_structure = 0.0;           // C_0 [F]
  std::optional<double> c_quantum;    // C_q [F]
  std::optional<double> c_screen;     // C_s [F]
  double c_total = 0.0;               // series C_T [F]
};

// Parallel-plate structure capacitance C_0 = eps0 L W / d.
inline double structure_capacitance(const Geometry& geo) {
  return constants.eps0 * geo.length * geo.width / geo.gap;
}

// Per-area quantum capacitance:
//   monolayer: 2 e^2 sqrt(n) / (hbar v_F sqrt(pi))
//   bi/trilayer: 2 m* e^2 / (pi hbar^2)
inline double quantum_capacitance_per_area(GrapheneLayer layer,
                                           const ChargeModel& model) {
  const double pi = 3.14159265358979323846;
  const double e2 = constants.e_charge * constants.e_charge;
  if (layer == GrapheneLayer::monolayer) {
    if (!model.carrier_density)
      throw MissingCarrierDensity(
          "quantum_capacitance: monolayer requires carrier_density_m2");
    if (!(*model.carrier_density > 0.0))
      throw ValidationError("carrier_density_m2: must be > 0");
    return 2.0 * e2 * std::sqrt(*model.carrier_density) /
           (constants.hbar * constants.v_F * std::sqrt(pi));
  }
  if (!model.effective_mass_ratio)
    throw MissingEffectiveMass(
        "quantum_capacitance: bi/trilayer requires effective_mass_ratio");
  const double m_star = *model.effective_mass_ratio * constants.m_e;
  return 2.0 * m_star * e2 / (pi * constants.hbar * constants.hbar);
}

inline double quantum_capacitance(GrapheneLayer layer, const ChargeModel& model,
                                  const Geometry& geo) {
  return quantum_capacitance_per_area(layer, model) * geo.length * geo.width;
}

// Harmonic (series) combination; excluded elements are omitted.
inline CapacitanceStack series_total(double c0, std::optional<double> cq,
                                     std::optional<double> cs) {
  CapacitanceStack stack;
  stack.c_structure = c0;
  stack.c_quantum = cq;
  stack.c_screen = cs;
  double inv = 1.0 / c0;
  if (cq) inv += 1.0 / *cq;
  if (cs) inv += 1.0 / *cs;
  stack.c_total = 1.0 / inv;
  return stack;
}

// Full stack for a device. `layer` is needed only when the charge model
// includes the quantum capacitance.
inline CapacitanceStack build_stack(const Geometry& geo,
                                    const ChargeModel& model,
                                    std::optional<GrapheneLayer> layer) {
  const double c0 = structure_capacitance(geo);
  std::optional<double> cq;
  if (model.include_quantum) {
    if (!layer)
      throw ValidationError(
          "charge_model: quantum capacitance requires a graphene layer");
    cq = quantum_capacitance(*layer, model, geo);
  }
  return series_total(c0, cq, model.screen_capacitance);
}

}  // namespace nemsqueeze
