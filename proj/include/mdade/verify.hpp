#ifndef MDADE_VERIFY_HPP
#define MDADE_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace mdade {

struct CheckResult {
    std::string id;
    std::string theorem;
    bool passed = false;
    std::string witness;  // dimensions, ranks, offending element if any
    long millis = 0;
};

/// One report per group; every id from the fixed catalog appears exactly
/// once, in catalog order.
struct VerificationReport {
    std::string group;
    int order = 0;
    std::vector<CheckResult> checks;

    bool all_passed() const;
};

/// The fixed catalog of check ids, in report order.
const std::vector<std::string>& catalog_ids();

/// Runs the whole catalog on one group. The seed drives every randomized
/// selection, so equal seeds give equal outcomes.
VerificationReport run_catalog(const std::string& group_spec, std::uint64_t seed = 1,
                               int max_order = 32);

}  // namespace mdade

#endif
