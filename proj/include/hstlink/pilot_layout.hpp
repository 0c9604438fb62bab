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

#include <vector>

#include "hstlink/errors.hpp"

namespace hstlink {

/// Frame partition into pilots and data. Slot numbers are 1-based, matching
/// the frame diagrams: each frame is n_p groups of (l_ratio + 1) slots, the
/// group pilot occupies the first slot, the group's data slots follow at
/// offsets u = 1..l_ratio. The pilot percentage is delta = 1/(l_ratio+1).
struct PilotLayout {
    int n_p = 0;      ///< pilot count per frame
    int n_s = 0;      ///< data count per frame (= l_ratio * n_p)
    int n_r = 0;      ///< total slots (= n_p + n_s)
    int l_ratio = 0;  ///< data slots per pilot
    double delta = 0.0;
    std::vector<int> pilot_indices;  ///< 1-based: {1, L+2, 2(L+1)+1, ...}

    /// 1-based slot of the k-th pilot, k = 1..n_p.
    int pilot_slot(int k) const { return (k - 1) * (l_ratio + 1) + 1; }
    /// 1-based slot of the k-th data symbol of group u: (k-1)(L+1) + 1 + u.
    int data_slot(int k, int u) const { return (k - 1) * (l_ratio + 1) + 1 + u; }
    bool is_pilot_slot(int slot) const { return (slot - 1) % (l_ratio + 1) == 0; }
};

/// Build the layout for n_p pilots each followed by l data slots.
PilotLayout make_layout(int n_p, int l);

}  // namespace hstlink
