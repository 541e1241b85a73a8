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

#include "fsoplan/scenario.hpp"

#include "fsoplan/error.hpp"

#include <cmath>

namespace fsoplan {

void Scenario::validate() const
{
    channel.validate();
    profile.validate();
    camera.validate();
    requirement.validate();
    detail::require(std::isfinite(hsl) && hsl > 0.0, "subarea width (hsl) must be positive");
}

} // namespace fsoplan
