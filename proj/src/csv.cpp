// hstlink — link-level analysis for delay-correlated antenna arrays
// Copyright (C) 2026 The hstlink authors
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

#include "hstlink/csv.hpp"

#include <cstdio>

#include "hstlink/errors.hpp"

namespace hstlink {

void CsvBuilder::header(const std::vector<std::string> &names) {
    if (columns_ != 0) throw Error("csv: header already written");
    columns_ = names.size();
    line(names);
}

void CsvBuilder::row(const std::vector<std::string> &cells) {
    if (columns_ == 0) throw Error("csv: header must be written first");
    if (cells.size() != columns_) throw Error("csv: row width does not match header");
    line(cells);
}

void CsvBuilder::line(const std::vector<std::string> &cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) text_ += ',';
        text_ += cells[i];
    }
    text_ += '\n';
}

std::string CsvBuilder::fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string CsvBuilder::fmt(long long v) { return std::to_string(v); }
std::string CsvBuilder::fmt(int v) { return std::to_string(v); }
std::string CsvBuilder::fmt(bool v) { return v ? "1" : "0"; }

}  // namespace hstlink
