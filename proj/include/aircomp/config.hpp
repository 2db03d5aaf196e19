// SPDX-License-Identifier: Apache-2.0
//
// aircomp-fas: OFDM over-the-air computation with a 2D fluid antenna receiver
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef AIRCOMP_CONFIG_HPP
#define AIRCOMP_CONFIG_HPP

#include <string>

#include "aircomp/model.hpp"

namespace aircomp {

/// Parses a JSON configuration document (schema_version 1). Every key is
/// optional and falls back to the reference defaults; keys are exactly the
/// SystemConfig field names, with `region` given as an object
/// {"x_lo": .., "x_hi": .., "y_lo": .., "y_hi": ..}. When `wavelength` is
/// given, the defaults of `min_spacing` (λ/2), `region` ([-3λ/2, 3λ/2]^2)
/// and `grid_step` (λ/20) follow it. Unknown keys are rejected; all
/// validation errors name the offending key.
SystemConfig load_config(const std::string& json_text);

SystemConfig load_config_file(const std::string& path);

}  // namespace aircomp

#endif  // AIRCOMP_CONFIG_HPP
