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

#pragma once

#include <sstream>
#include <string>
#include <vector>

namespace hstlink {

/// Minimal RFC-4180-style CSV assembly: comma separators, one header row,
/// locale-independent formatting, floats at 12 significant digits.
class CsvBuilder {
  public:
    void header(const std::vector<std::string> &names);
    void row(const std::vector<std::string> &cells);
    const std::string &text() const { return text_; }

    static std::string fmt(double v);
    static std::string fmt(long long v);
    static std::string fmt(int v);
    static std::string fmt(bool v);

  private:
    void line(const std::vector<std::string> &cells);
    std::string text_;
    std::size_t columns_ = 0;
};

}  // namespace hstlink
