/*
   Copyright 2026 The fsoplan Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include "fsoplan/camera.hpp"
#include "fsoplan/linkbudget.hpp"
#include "fsoplan/turbulence.hpp"

namespace fsoplan {

/// Joint description of one drone: optical channel, turbulence, camera and
/// the width of the subarea it must cover. Default-constructed values are the
/// reference planning parameters (2000 px, 100 px/m, 20 m subarea, 1550 nm, 2 km).
struct Scenario {
    ChannelParams channel;
    TurbulenceProfile profile;
    CameraSpec camera;
    ImageRequirement requirement;
    double hsl = 20.0; // m

    void validate() const;

    double c1() const { return half_swath(camera.horizontal_pixels, requirement.resolution); }
};

} // namespace fsoplan
