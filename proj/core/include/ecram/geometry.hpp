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

#include <string>

namespace ecram {

class Config;

/// Planar device cross-section: channel and gate electrodes sitting on top of
/// the electrolyte film, separated laterally by `gap_m`. The trench between
/// them is over-etched `electrolyte_etch_gap_m` into the electrolyte.
/// All lengths in metres, all strictly positive.
struct DeviceGeometry {
  double channel_width_m = 6e-6;
  double channel_length_m = 35e-6;  // out-of-plane depth of the 2D model
  double channel_thickness_m = 35e-9;
  double gate_width_m = 6e-6;
  double gate_thickness_m = 35e-9;
  double gap_m = 3e-6;
  double electrolyte_thickness_m = 140e-9;
  double electrolyte_etch_gap_m = 10e-9;

  /// Throws ConfigError when any invariant is violated.
  void validate() const;

  double total_width_m() const { return channel_width_m + gap_m + gate_width_m; }
  double channel_cross_section_m2() const { return channel_width_m * channel_thickness_m; }
};

/// The microfabricated device dimensions.
DeviceGeometry geometry_a();
/// Reduced lateral dimensions for low-temperature studies.
DeviceGeometry geometry_b();

DeviceGeometry load_geometry(const Config& cfg, const std::string& section = "geometry");

}  // namespace ecram
