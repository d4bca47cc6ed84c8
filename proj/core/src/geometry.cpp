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

#include "ecram/geometry.hpp"

#include "ecram/config.hpp"
#include "ecram/errors.hpp"

namespace ecram {

void DeviceGeometry::validate() const {
  auto positive = [](double v, const char* name) {
    if (!(v > 0.0)) throw ConfigError(std::string("geometry: ") + name + " must be > 0");
  };
  positive(channel_width_m, "channel_width_m");
  positive(channel_length_m, "channel_length_m");
  positive(channel_thickness_m, "channel_thickness_m");
  positive(gate_width_m, "gate_width_m");
  positive(gate_thickness_m, "gate_thickness_m");
  positive(gap_m, "gap_m");
  positive(electrolyte_thickness_m, "electrolyte_thickness_m");
  positive(electrolyte_etch_gap_m, "electrolyte_etch_gap_m");
  if (!(electrolyte_etch_gap_m < electrolyte_thickness_m))
    throw ConfigError("geometry: electrolyte_etch_gap_m must be smaller than "
                      "electrolyte_thickness_m");
}

DeviceGeometry geometry_a() {
  DeviceGeometry g;  // defaults are geometry A
  g.validate();
  return g;
}

DeviceGeometry geometry_b() {
  DeviceGeometry g;
  g.channel_width_m = 1e-6;
  g.gate_width_m = 1e-6;
  g.gap_m = 0.5e-6;
  g.channel_length_m = 10e-6;
  g.validate();
  return g;
}

DeviceGeometry load_geometry(const Config& cfg, const std::string& section) {
  DeviceGeometry g;
  g.channel_width_m = cfg.get_double(section, "channel_width_m", g.channel_width_m);
  g.channel_length_m = cfg.get_double(section, "channel_length_m", g.channel_length_m);
  g.channel_thickness_m = cfg.get_double(section, "channel_thickness_m", g.channel_thickness_m);
  g.gate_width_m = cfg.get_double(section, "gate_width_m", g.gate_width_m);
  g.gate_thickness_m = cfg.get_double(section, "gate_thickness_m", g.gate_thickness_m);
  g.gap_m = cfg.get_double(section, "gap_m", g.gap_m);
  g.electrolyte_thickness_m =
      cfg.get_double(section, "electrolyte_thickness_m", g.electrolyte_thickness_m);
  g.electrolyte_etch_gap_m =
      cfg.get_double(section, "electrolyte_etch_gap_m", g.electrolyte_etch_gap_m);
  g.validate();
  return g;
}

}  // namespace ecram
