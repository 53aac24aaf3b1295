// Copyright 2026 The wwqca Authors
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

#include "wwqca/report.h"

#include <algorithm>

namespace wwqca {

Report::Tally &Report::tally(const std::string &id, const std::string &location) {
    for (auto &t : tallies_) {
        if (t.id == id) {
            return t;
        }
    }
    tallies_.push_back(Tally{id, 0, 0, location});
    return tallies_.back();
}

void Report::pass(const std::string &check_id, const std::string &location) {
    tally(check_id, location).checked++;
}

void Report::fail(const std::string &check_id, const std::string &location, const std::string &residual) {
    auto &t = tally(check_id, location);
    t.checked++;
    t.failed++;
    failed_.push_back(CheckRecord{check_id, location, false, residual});
}

void Report::expect(bool ok, const std::string &check_id, const std::string &location,
                    const std::string &residual) {
    if (ok) {
        pass(check_id, location);
    } else {
        fail(check_id, location, residual);
    }
}

void Report::merge(const Report &o) {
    for (const auto &t : o.tallies_) {
        auto &mine = tally(t.id, t.first_location);
        mine.checked += t.checked;
        mine.failed += t.failed;
    }
    failed_.insert(failed_.end(), o.failed_.begin(), o.failed_.end());
}

bool Report::all_pass() const {
    return failed_.empty();
}

size_t Report::failures() const {
    return failed_.size();
}

std::vector<CheckRecord> Report::summary() const {
    std::vector<CheckRecord> out;
    for (const auto &t : tallies_) {
        CheckRecord r;
        r.check_id = t.id;
        r.location = std::to_string(t.checked) + (t.checked == 1 ? " location" : " locations");
        r.pass = t.failed == 0;
        if (!r.pass) {
            r.residual = std::to_string(t.failed) + " failed";
        }
        out.push_back(r);
    }
    std::sort(out.begin(), out.end(),
              [](const CheckRecord &a, const CheckRecord &b) { return a.check_id < b.check_id; });
    return out;
}

}  // namespace wwqca
