#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ring.hpp"
#include "torsion.hpp"

namespace tc::theorems {

enum class CheckStatus { Pass, Fail, NotApplicable };

struct CheckResult {
    std::string check;
    std::string ring_spec;
    CheckStatus status = CheckStatus::NotApplicable;
    std::vector<std::uint64_t> witness;  // element encs demonstrating a failure
    std::string detail;
};

// Stable check ids with one-line descriptions, in suite order.
const std::vector<std::pair<std::string, std::string>>& check_catalog();

// Shared lazily-computed inputs so a suite run prices each index search once.
class CheckContext {
  public:
    CheckContext(RingPtr ring, int jobs) : ring_(std::move(ring)), jobs_(jobs) {}

    const RingPtr& ring() const { return ring_; }
    int jobs() const { return jobs_; }
    const torsion::IndexReport& plain();
    const torsion::IndexReport& strong();

  private:
    RingPtr ring_;
    int jobs_;
    std::optional<torsion::IndexReport> plain_, strong_;
};

CheckResult run_check(CheckContext& ctx, const std::string& id);
CheckResult run_check(const RingPtr& ring, const std::string& id, int jobs = 1);
std::vector<CheckResult> run_suite(const RingPtr& ring, int jobs = 1);

// Explicit-parameter forms used directly by tests.
CheckResult check_identity_eq(const RingPtr& ring, std::uint64_t n, int jobs = 1);
CheckResult check_odd_reduced(const RingPtr& ring, std::uint64_t n, int jobs = 1);
CheckResult check_unique_clean_radical(const RingPtr& ring, int jobs = 1);
CheckResult check_prop_fields(const std::vector<Field>& fields, int jobs = 1);

}  // namespace tc::theorems
