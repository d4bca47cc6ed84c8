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

#include "ecram/materials.hpp"

#include <cmath>

#include "ecram/config.hpp"
#include "ecram/constants.hpp"
#include "ecram/errors.hpp"

namespace ecram {

VacancyConcentration::VacancyConcentration(double value, double cap) : value_(value) {
  if (!(cap > 0.0)) throw ConfigError("vacancy concentration cap must be positive");
  if (!(value >= 0.0 && value <= cap))
    throw ConfigError("vacancy concentration " + std::to_string(value) +
                      " outside [0, " + std::to_string(cap) + "]");
}

namespace {
double clamp_or_throw(double v, double lo, double hi, const char* what, long* count,
                      double* worst) {
  if (v >= lo && v <= hi) return v;
  if (count) ++*count;
  if (worst) *worst = v;
  return v < lo ? lo : hi;
}
}  // namespace

double LsfModel::electronic_conductivity_S_cm(double cv, double T_K, ClampLog* log) const {
  if (range_policy == RangePolicy::kStrict) {
    if (cv < fit_valid_cv_min || cv > fit_valid_cv_max)
      throw NumericalError("electronic conductivity: cv=" + std::to_string(cv) +
                           " outside fit validity range");
    if (T_K < fit_valid_T_min_K || T_K > fit_valid_T_max_K)
      throw NumericalError("electronic conductivity: T=" + std::to_string(T_K) +
                           " K outside fit validity range");
  } else {
    cv = clamp_or_throw(cv, fit_valid_cv_min, fit_valid_cv_max, "cv",
                        log ? &log->cv_clamps : nullptr, log ? &log->worst_cv : nullptr);
    T_K = clamp_or_throw(T_K, fit_valid_T_min_K, fit_valid_T_max_K, "T",
                         log ? &log->temperature_clamps : nullptr,
                         log ? &log->worst_T : nullptr);
  }
  const auto& a = conductivity_fit_coeffs;
  double ln_sigma = a[0] + a[1] * cv + a[2] / T_K + a[3] * cv * cv + a[4] / (T_K * T_K) +
                    a[5] * cv / T_K;
  return std::exp(ln_sigma);
}

double LsfModel::vacancy_diffusivity_cm2_s(double T_K) const {
  if (!(T_K > 0.0)) throw NumericalError("vacancy diffusivity: temperature must be positive");
  return dv_prefactor_cm2_s * std::exp(-dv_activation_J_mol / (constants::gas_R_J_per_molK * T_K));
}

double LsfModel::ionic_conductivity_S_cm(double cv, double T_K) const {
  using namespace constants;
  const double dv = vacancy_diffusivity_cm2_s(T_K);
  // volumetric vacancy count per cm^3
  const double n_cm3 = cv * molar_density_mol_m3() * 1e-6 * avogadro_per_mol;
  const double mobility_factor =
      4.0 * elementary_charge_C * elementary_charge_C / (boltzmann_J_per_K * T_K);
  return dv * mobility_factor * n_cm3;
}

double charge_density_C_cm3(double cv, double density_kg_m3, double molar_mass_kg_mol) {
  if (!(density_kg_m3 > 0.0) || !(molar_mass_kg_mol > 0.0))
    throw ConfigError("charge density: density and molar mass must be positive");
  const double q0_m3 = 2.0 * cv * constants::faraday_C_per_mol * density_kg_m3 / molar_mass_kg_mol;
  return q0_m3 * 1e-6;
}

double Arrhenius::conductivity_S_cm(double T_K) const {
  if (!(T_K > 0.0)) throw NumericalError("Arrhenius conductivity: temperature must be positive");
  return prefactor_SK_cm / T_K *
         std::exp(-activation_eV / (constants::boltzmann_eV_per_K * T_K));
}

LsfModel load_lsf_model(const Config& cfg, const std::string& section) {
  LsfModel m;
  if (cfg.has(section, "conductivity_fit_coeffs")) {
    auto c = cfg.require_doubles(section, "conductivity_fit_coeffs");
    if (c.size() != 6)
      throw ConfigError("config key [" + section + "] conductivity_fit_coeffs needs 6 numbers");
    for (int i = 0; i < 6; ++i) m.conductivity_fit_coeffs[i] = c[i];
  }
  m.fit_valid_cv_min = cfg.get_double(section, "fit_valid_cv_min", m.fit_valid_cv_min);
  m.fit_valid_cv_max = cfg.get_double(section, "fit_valid_cv_max", m.fit_valid_cv_max);
  m.fit_valid_T_min_K = cfg.get_double(section, "fit_valid_T_min_K", m.fit_valid_T_min_K);
  m.fit_valid_T_max_K = cfg.get_double(section, "fit_valid_T_max_K", m.fit_valid_T_max_K);
  m.dv_prefactor_cm2_s = cfg.get_double(section, "dv_prefactor_cm2_s", m.dv_prefactor_cm2_s);
  m.dv_activation_J_mol = cfg.get_double(section, "dv_activation_J_mol", m.dv_activation_J_mol);
  m.sr_doping = cfg.get_double(section, "sr_doping", m.sr_doping);
  m.density_kg_m3 = cfg.get_double(section, "density_kg_m3", m.density_kg_m3);
  m.molar_mass_kg_mol = cfg.get_double(section, "molar_mass_kg_mol", m.molar_mass_kg_mol);
  std::string policy = cfg.get_string(section, "range_policy", "clamp");
  if (policy == "clamp")
    m.range_policy = RangePolicy::kClamp;
  else if (policy == "strict")
    m.range_policy = RangePolicy::kStrict;
  else
    throw ConfigError("config key [" + section + "] range_policy must be clamp or strict");
  if (!(m.sr_doping > 0.0 && m.sr_doping <= 1.0))
    throw ConfigError("config key [" + section + "] sr_doping must be in (0, 1]");
  if (!(m.dv_prefactor_cm2_s > 0.0))
    throw ConfigError("config key [" + section + "] dv_prefactor_cm2_s must be positive");
  return m;
}

ElectrolyteModel load_electrolyte_model(const Config& cfg, const std::string& section) {
  ElectrolyteModel m;
  m.sigma_inplane.prefactor_SK_cm =
      cfg.get_double(section, "inplane_prefactor_SK_cm", m.sigma_inplane.prefactor_SK_cm);
  m.sigma_inplane.activation_eV =
      cfg.get_double(section, "inplane_activation_eV", m.sigma_inplane.activation_eV);
  m.sigma_outofplane.prefactor_SK_cm =
      cfg.get_double(section, "outofplane_prefactor_SK_cm", m.sigma_outofplane.prefactor_SK_cm);
  m.sigma_outofplane.activation_eV =
      cfg.get_double(section, "outofplane_activation_eV", m.sigma_outofplane.activation_eV);
  if (!(m.sigma_inplane.prefactor_SK_cm > 0.0) || !(m.sigma_outofplane.prefactor_SK_cm > 0.0))
    throw ConfigError("config section [" + section + "]: conductivity prefactors must be positive");
  return m;
}

}  // namespace ecram
