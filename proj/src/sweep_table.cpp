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

#include "fsoplan/sweep_table.hpp"

#include <charconv>
#include <stdexcept>

namespace fsoplan {

std::string format_number(double value)
{
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
    if (ec != std::errc{}) {
        throw std::runtime_error("number formatting failed");
    }
    return {buf, end};
}

void SweepTable::add_row(std::vector<double> row)
{
    if (row.size() != columns.size()) {
        throw std::logic_error("sweep row width does not match the column count");
    }
    rows.push_back(std::move(row));
}

void SweepTable::write_csv(std::ostream& os) const
{
    for (std::size_t i = 0; i < columns.size(); ++i) {
        os << (i ? "," : "") << columns[i];
    }
    os << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            os << (i ? "," : "") << format_number(row[i]);
        }
        os << '\n';
    }
}

nlohmann::json SweepTable::to_json() const
{
    auto out = nlohmann::json::array();
    for (const auto& row : rows) {
        nlohmann::json obj = nlohmann::json::object();
        for (std::size_t i = 0; i < row.size(); ++i) {
            obj[columns[i]] = row[i];
        }
        out.push_back(std::move(obj));
    }
    return out;
}

} // namespace fsoplan
