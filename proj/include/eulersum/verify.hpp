#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace eulersum::verify {

// Bounds and knobs for the identity sweeps. b_max == 0 follows a_max.
struct SweepConfig {
    unsigned p_max = 8;
    std::int64_t a_max = 25;
    std::int64_t b_max = 0;
    std::int64_t q_max = 9;
    unsigned long fourier_terms = 10000;
    std::uint64_t seed = 1;
    unsigned parallelism = 1;

    std::int64_t effective_b_max() const { return b_max > 0 ? b_max : a_max; }
};

struct FailureRecord {
    std::string params;
    std::string lhs;
    std::string rhs;
};

struct VerificationReport {
    std::string identity;
    std::size_t instances = 0;
    std::vector<FailureRecord> failures;

    bool ok() const { return failures.empty(); }
};

// All supported identity labels, in canonical emission order.
const std::vector<std::string>& identity_labels();
bool is_identity_label(const std::string& label);

// Sweeps one identity over its configured range. Instances are enumerated
// deterministically; workers partition them by index stride and the result
// order is restored, so output does not depend on parallelism.
VerificationReport run_identity(const std::string& label, const SweepConfig& config);

std::vector<VerificationReport> run_identities(const std::vector<std::string>& labels,
                                               const SweepConfig& config);

// JSON array of {identity, instances, failures:[{params, lhs, rhs}]}.
std::string reports_to_json(const std::vector<VerificationReport>& reports);

}  // namespace eulersum::verify
