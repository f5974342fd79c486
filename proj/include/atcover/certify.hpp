#pragma once
// One-shot certification pipeline: runs every construction and verification
// for n = 1..n_max and assembles a deterministic machine-readable report.

#include <string>

#include <json.hpp>

namespace atcover {

struct CertifyOptions {
    int n_max = 3;
    bool parallel = false;
    std::string support_path;  // empty selects the default fixture
};

struct CertifyResult {
    bool pass = false;
    nlohmann::json report;
};

CertifyResult certify(const CertifyOptions& options);

}  // namespace atcover
