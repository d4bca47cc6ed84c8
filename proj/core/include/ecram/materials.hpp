/* Copyright 2026 ecramsim contributors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <array>
#include <string>

namespace ecram {

class Config;

/// Oxygen-vacancy site fraction per unit cell. Electroneutrality with the
/// acceptor doping bounds it to [0, sr_doping/2]; construction rejects
/// anything outside.
class VacancyConcentration {
 public:
  explicit VacancyConcentration(double value, double cap = 0.25);
  double value() const { return value_; }
  operator double() const { return value_; }

 private:
  double value_;
};

enum class RangePolicy { kClamp, kStrict };

/// Counts clamping events so callers can warn once instead of per evaluation.
struct ClampLog {
  long cv_clamps = 0;
  long temperature_clamps = 0;
  double worst_cv = 0.0;   // most out-of-range value seen
  double worst_T = 0.0;
  bool any() const { return cv_clamps > 0 || temperature_clamps > 0; }
};

/// Defect-chemistry and transport laws of the mixed-conducting channel/gate
/// material. Conductivities are in S/cm and diffusivities in cm^2/s to match
/// the conventional units of the source data; SI conversions happen at the
/// simulator boundary.
struct LsfModel {
  /// ln(sigma_eon / (S/cm)) = a0 + a1*cv + a2/T + a3*cv^2 + a4/T^2 + a5*cv/T
  std::array<double, 6> conductivity_fit_coeffs{4.44, 23.08, 1190.0, -89.33, -370000.0, -14380.0};
  double fit_valid_cv_min = 0.01;
  double fit_valid_cv_max = 0.24;
  double fit_valid_T_min_K = 323.15;
  double fit_valid_T_max_K = 623.15;

  double dv_prefactor_cm2_s = 0.02;
  double dv_activation_J_mol = 7500.0;

  double sr_doping = 0.5;           // acceptor site fraction per unit cell
  double density_kg_m3 = 6000.0;
  double molar_mass_kg_mol = 0.2197;

  RangePolicy range_policy = RangePolicy::kClamp;

  double cv_cap() const { return sr_doping / 2.0; }

  /// Electronic conductivity in S/cm; out-of-range (cv, T) is clamped into
  /// the fit validity window (recorded in `log`) or rejected under kStrict.
  double electronic_conductivity_S_cm(double cv, double T_K, ClampLog* log = nullptr) const;

  /// Vacancy self-diffusivity in cm^2/s, Arrhenius in temperature.
  double vacancy_diffusivity_cm2_s(double T_K) const;

  /// Ionic conductivity of the channel material via the Nernst-Einstein
  /// relation, in S/cm. Zero iff cv is zero.
  double ionic_conductivity_S_cm(double cv, double T_K) const;

  /// Formula-unit molar density in mol/m^3.
  double molar_density_mol_m3() const { return density_kg_m3 / molar_mass_kg_mol; }
};

/// Charge held by a vacancy site fraction, in C/cm^3 (density in kg/m^3,
/// molar mass in kg/mol). Exactly linear in every argument.
double charge_density_C_cm3(double cv, double density_kg_m3, double molar_mass_kg_mol);

/// sigma(T) = (prefactor / T) * exp(-activation / (kB T)), result in S/cm.
struct Arrhenius {
  double prefactor_SK_cm = 0.0;
  double activation_eV = 0.0;

  double conductivity_S_cm(double T_K) const;
};

/// Anisotropic pure ionic conductor (the electrolyte film).
struct ElectrolyteModel {
  Arrhenius sigma_inplane{3.76e4, 0.55};
  Arrhenius sigma_outofplane{3.76e2, 0.55};
};

LsfModel load_lsf_model(const Config& cfg, const std::string& section = "material.lsf");
ElectrolyteModel load_electrolyte_model(const Config& cfg,
                                        const std::string& section = "material.electrolyte");

}  // namespace ecram
