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

namespace ecram {

/// Physical constants, CODATA 2018 exact values where defined.
namespace constants {
inline constexpr double faraday_C_per_mol = 96485.33212;
inline constexpr double gas_R_J_per_molK = 8.314462618;
inline constexpr double boltzmann_J_per_K = 1.380649e-23;
inline constexpr double boltzmann_eV_per_K = 8.617333262e-5;
inline constexpr double elementary_charge_C = 1.602176634e-19;
inline constexpr double avogadro_per_mol = 6.02214076e23;
}  // namespace constants

inline constexpr double celsius_to_kelvin(double t_c) { return t_c + 273.15; }
inline constexpr double kelvin_to_celsius(double t_k) { return t_k - 273.15; }

}  // namespace ecram
