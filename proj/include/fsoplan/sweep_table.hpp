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

#include <json.hpp>

#include <ostream>
#include <string>
#include <vector>

namespace fsoplan {

/// Shortest decimal text that reads back to the same double ('.' separator).
std::string format_number(double value);

struct SweepTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    void add_row(std::vector<double> row);

    /// Header row then one line per row, comma separated, LF terminated.
    void write_csv(std::ostream& os) const;

    /// Array of objects keyed by column name.
    nlohmann::json to_json() const;
};

} // namespace fsoplan
