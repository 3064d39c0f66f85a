#pragma once

#include "bilie/structure.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bilie {

inline constexpr const char* kConfigSchema = "bilie-config/1";
inline constexpr const char* kReportSchema = "bilie-report/1";

/// Malformed job configuration (schema violation).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum ExitCode { ExitPass = 0, ExitCheckFailure = 1, ExitPrecondition = 2, ExitConfig = 3 };

struct Fault {
    enum Kind { StructureConstant, Eigenvalue } kind = StructureConstant;
    int index = 0;
};

struct JobConfig {
    nlohmann::json raw; ///< as given, echoed into the report
    std::string name;
    std::string algebra;
    std::string builder;
    std::vector<Scalar> times;
    nlohmann::json params = nlohmann::json::object();
    std::vector<std::string> checks; ///< empty: all
    std::string output;
    std::string expect = "pass"; ///< "pass", "fail" or "precondition_error"
    std::optional<Fault> fault;
};

/// Validates the schema and the parameter types; throws ConfigError.
JobConfig parse_config(const nlohmann::json& j);
std::vector<std::string> builders();

struct RunOptions {
    bool timing = false;
    bool emit_structure = false;
    std::vector<std::string> checks; ///< overrides the config list when nonempty
};

struct Report {
    nlohmann::json doc;
    int exit_code = ExitPass;
    std::string status; ///< "pass", "fail", "precondition_error", "config_error"
    std::vector<CheckResult> checks;

    std::string text() const { return doc.dump(2) + "\n"; }
};

Report run(const JobConfig& config, const RunOptions& opts = {});
/// Parses and runs; config errors become a report with exit code 3.
Report run_json(const nlohmann::json& config, const RunOptions& opts = {});

/// Fault sites of a structure job: nonzero structure constants (i < j) and operator eigenvectors.
struct FaultSites {
    int structure_constants = 0;
    int eigenvalues = 0;
};
FaultSites fault_sites(const JobConfig& config);

struct Summary {
    int jobs = 0, ok = 0;
    std::vector<std::string> failures; ///< "name: reason"
    std::vector<std::string> names;
    std::vector<Report> reports;
    int exit_code = ExitPass;
    nlohmann::json to_json() const;
};

struct ManifestOptions {
    RunOptions run;
    std::string golden_dir;   ///< compare reports bit-exactly when nonempty
    bool update_golden = false;
    int jobs = 1;
};

/// A manifest is a JSON array of configs or an object with a "jobs" array.
std::vector<nlohmann::json> manifest_jobs(const nlohmann::json& manifest);
Summary verify_all(const std::vector<nlohmann::json>& manifest, const ManifestOptions& opts = {});

/// Job name used for golden files: the "name" field, else builder and algebra.
std::string job_name(const nlohmann::json& config, std::size_t position);

/// Write through a temporary file and rename.
void write_atomic(const std::string& path, const std::string& text);

} // namespace bilie
