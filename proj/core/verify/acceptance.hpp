#ifndef CUSPIDAL_VERIFY_ACCEPTANCE_HPP_
#define CUSPIDAL_VERIFY_ACCEPTANCE_HPP_

// The acceptance matrix: nine criteria, each run against the oracles with a
// fixed seed. Shared by the acceptance test binary and `cuspidal selftest`.

#include "cuspidal/cusps.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cuspidal::acceptance {

enum class Status { Pass, Fail, Skipped };
const char* to_string(Status status);

struct Result {
    int id;
    std::string name;
    Status status;
    double seconds;
    std::string detail;
};

struct Options {
    std::uint64_t seed = 20240917;
    SearchConfig cfg;
    // Replaces picard_order inside cusp_count; used for fault injection.
    PicFn pic_override;
    // Criteria to run; empty means all.
    std::vector<int> only;
};

constexpr int kCriterionCount = 9;

const char* criterion_name(int id);

// Inconclusive results become Skipped, any other exception a failure.
Result run_criterion(int id, const Options& opts);
std::vector<Result> run_all(const Options& opts);

}  // namespace cuspidal::acceptance

#endif  // CUSPIDAL_VERIFY_ACCEPTANCE_HPP_
