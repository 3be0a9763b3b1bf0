#pragma once

#include <random>
#include <string>
#include <vector>

#include "qspace/mq2.hpp"

namespace qspace {

struct VerifyConfig {
    int order = 8;
    double tol = 1e-9;
    int max_two_j = 6;        // spin bound for table/twist sweeps
    unsigned long seed = 12345;
    int random_samples = 20;  // random inputs per randomized check
};

struct CheckResult {
    std::string name;
    bool pass = false;
    double max_dev = 0.0;
    std::string note;
};

/// Representation, Clebsch-Gordan, R-matrix and twist identities shared by
/// all spaces.
std::vector<CheckResult> verify_common(const VerifyConfig& cfg);

std::vector<CheckResult> verify_plane(const VerifyConfig& cfg);
std::vector<CheckResult> verify_mq2(const VerifyConfig& cfg);
std::vector<CheckResult> verify_minkowski(const VerifyConfig& cfg);

/// Suite for one space name ("plane", "mq2", "minkowski"): the shared
/// checks followed by the space checks.
std::vector<CheckResult> verify_space(const std::string& space, const VerifyConfig& cfg);

/// Seeded random inputs used by the randomized checks.
HSeries random_series(std::mt19937_64& rng, int order, bool unit_leading = false);
PlanePoly random_plane_poly(std::mt19937_64& rng, int order, int max_two_j);
Mq2Poly random_mq2_poly(std::mt19937_64& rng, int order, int max_degree);

} // namespace qspace
