#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "color4/rational.hpp"

namespace color4::decay {

// Result of one grid search: numerical evidence at the stated resolution,
// not a proof. pass <=> max_found <= threshold + slack.
struct AlphaReport {
    std::string name;
    std::string threshold_text;  // exact rational from the analysis, verbatim
    double threshold = 0.0;
    double max_found = 0.0;
    std::vector<double> argmax;
    double resolution = 0.0;
    double slack = 0.0;
    bool pass = false;
};

struct VerifyOptions {
    double resolution = 0.005;
    int threads = 1;
    bool refine = true;  // one pass at resolution/10 around the incumbent
    // Negative-control hook: replaces the threshold of the named report.
    std::optional<std::pair<std::string, double>> threshold_override;
};

enum class JensenCase { Full, Quarter };

AlphaReport check_deg1_l4(const VerifyOptions& opts);
AlphaReport check_deg1_l3_fixed(const VerifyOptions& opts);
AlphaReport check_deg1_l3(const VerifyOptions& opts);
std::vector<AlphaReport> check_jensen(JensenCase which, const VerifyOptions& opts);
AlphaReport check_resolve3p(const VerifyOptions& opts);
std::vector<AlphaReport> check_resolve2p1m(const VerifyOptions& opts);
AlphaReport check_resolve2p1m_d1(const VerifyOptions& opts);
std::vector<AlphaReport> check_d1_positive(const VerifyOptions& opts);

// Every check above plus the composed "overall" contraction-rate report.
std::vector<AlphaReport> verify_all(const VerifyOptions& opts);

// Named dispatch for the CLI: deg1, jensen, jensen_mod, resolve3+,
// resolve2+1-, resolve2+1-d1, d1-positive, all.
std::vector<AlphaReport> run_case(const std::string& name, const VerifyOptions& opts);

std::string reports_to_json(const std::vector<AlphaReport>& reports);

}  // namespace color4::decay
