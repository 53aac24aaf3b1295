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

#ifndef WWQCA_REPORT_H
#define WWQCA_REPORT_H

#include <string>
#include <vector>

namespace wwqca {

struct CheckRecord {
    std::string check_id;
    std::string location;
    bool pass = true;
    std::string residual;  // empty when passing
};

/// Ordered collection of check outcomes. Passing checks are summarized per
/// check id; each failure is kept with its location and residual.
class Report {
   public:
    void pass(const std::string &check_id, const std::string &location);
    void fail(const std::string &check_id, const std::string &location, const std::string &residual);
    void expect(bool ok, const std::string &check_id, const std::string &location,
                const std::string &residual = "");
    void merge(const Report &o);

    bool all_pass() const;
    size_t failures() const;
    /// Per check id: number of locations checked and failures.
    std::vector<CheckRecord> summary() const;
    const std::vector<CheckRecord> &failed() const { return failed_; }

   private:
    struct Tally {
        std::string id;
        size_t checked = 0;
        size_t failed = 0;
        std::string first_location;
    };
    Tally &tally(const std::string &id, const std::string &location);

    std::vector<Tally> tallies_;
    std::vector<CheckRecord> failed_;
};

}  // namespace wwqca

#endif
