#pragma once

#include <chrono>
#include <filesystem>
#include <functional>
#include <string>

#include "vko/certificate.hpp"

namespace vko::cli {

enum Exit { ok = 0, verification_failed = 2, budget_exceeded = 3, input_error = 4 };

struct PipelineOptions {
    std::filesystem::path out = "vko-out";
    std::uint64_t seed = 0;
    Budget budget;
    std::string level = "mod2";  // theorem1: "mod2" or "generic"
};

/// Accumulates a deterministic report.json plus a timings.json sidecar.
class Run {
public:
    Run(std::string pipeline, const PipelineOptions& options);

    /// Runs one step; its result object goes into the report, its wall time
    /// into the sidecar.  A step reports failure by returning "ok": false.
    void step(const std::string& name, const std::function<json()>& body);

    /// Writes a certificate file under the output directory and returns its
    /// {"path", "sha256"} entry after re-verifying it from the written bytes.
    json certificate(const std::string& file, const json& cert);
    json artifact(const std::string& file, const json& content);

    void mark_incomplete(const std::string& reason);
    int finish();

    const PipelineOptions& options() const { return options_; }

private:
    std::string pipeline_;
    PipelineOptions options_;
    json steps_ = json::array();
    json timings_ = json::object();
    bool failed_ = false;
    std::string incomplete_;
};

int run_pipeline(const std::string& name, const PipelineOptions& options);
const std::vector<std::string>& pipeline_names();

/// Text written to disk and the hash of exactly those bytes.
std::string write_text(const std::filesystem::path& path, const std::string& text);

} // namespace vko::cli
