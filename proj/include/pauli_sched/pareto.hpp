// Copyright 2026 The pauli_sched Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "pauli_sched/schedule.hpp"

namespace pauli_sched {

struct FrontierEntry {
    Cost cost;
    Schedule schedule;
};

/// Dominance-free set of (space, time) costs, each with a schedule realising it.
/// Entries are kept sorted by increasing time, hence strictly decreasing space.
class ParetoFront {
   public:
    /// True when some entry is at least as good as c in both coordinates.
    bool covers(Cost c) const {
        return std::any_of(entries_.begin(), entries_.end(),
                           [&](const FrontierEntry &e) { return weakly_dominates(e.cost, c); });
    }

    /// Adds the entry unless an existing one covers it; drops entries it dominates.
    bool insert(Cost c, Schedule s) {
        if (covers(c)) {
            return false;
        }
        std::erase_if(entries_, [&](const FrontierEntry &e) { return dominates(c, e.cost); });
        auto pos = std::lower_bound(entries_.begin(), entries_.end(), c.time,
                                    [](const FrontierEntry &e, std::size_t t) { return e.cost.time < t; });
        entries_.insert(pos, FrontierEntry{c, std::move(s)});
        return true;
    }

    const std::vector<FrontierEntry> &entries() const {
        return entries_;
    }
    bool empty() const {
        return entries_.empty();
    }
    std::size_t size() const {
        return entries_.size();
    }
    std::vector<Cost> costs() const {
        std::vector<Cost> out;
        for (const auto &e : entries_) {
            out.push_back(e.cost);
        }
        return out;
    }

    /// Fastest schedule; among those, the smallest space.
    const FrontierEntry *min_time() const {
        return entries_.empty() ? nullptr : &entries_.front();
    }
    /// Smallest-space schedule; among those, the fastest.
    const FrontierEntry *min_space() const {
        return entries_.empty() ? nullptr : &entries_.back();
    }

   private:
    std::vector<FrontierEntry> entries_;
};

}  // namespace pauli_sched
