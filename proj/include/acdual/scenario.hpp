#pragma once

// Declarative scenario configs (JSON, schema "acdual/v1"), dispatch to the
// computational modules, and machine-readable reports. Reports are
// deterministic for a fixed config and build: fixed summation order inside
// the kernels, shortest round-trip float formatting, insertion-ordered keys.

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "acdual/dynamics.hpp"
#include "acdual/fields.hpp"
#include "acdual/geometry.hpp"
#include "acdual/phase.hpp"
#include "acdual/units.hpp"

namespace acdual {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "acdual/v1";
inline constexpr std::uint64_t kDefaultSeed = 0xACDA1;

struct ScenarioTolerances {
    double tol{kDefaultPhaseTol};
    double eps_singular{kDefaultEpsSingular};
    /// < 0 selects the scale-free default (1e-9 x path diameter).
    double eps_on_path{-1.0};
};

/// Symbolic circle kept unexpanded so sweeps can rewrite radius or turns.
struct CircleSpec {
    Vec3 center{};
    double radius{1.0};
    int segments{64};
    int turns{1};
};

struct PathSpec {
    std::optional<CircleSpec> circle;
    std::optional<Path> polyline;
};

Path realize(const PathSpec& spec);

struct EntangleBlock {
    double analyzer_phase{0.0};
};

struct ScenarioConfig {
    std::string id{"scenario"};
    std::string kind;
    UnitSystem units{};
    ScenarioTolerances tolerances{};

    // phase
    std::optional<FieldSource> source;
    std::optional<Coupling> coupling;
    std::optional<PathSpec> path;
    std::optional<EntangleBlock> entangle_block;

    // force
    std::optional<NeutralState> neutral;
    std::optional<std::vector<ChargedState>> point_sources;
    std::string force_method{"both"};

    // duality
    std::int64_t trials{1000};
    std::uint64_t seed{kDefaultSeed};
    std::array<double, 2> separation{0.1, 10.0};

    // entangle
    std::optional<double> phi;
    double analyzer_phase{0.0};

    // sweep
    std::string sweep_parameter;
    std::vector<double> sweep_values;
    std::shared_ptr<ScenarioConfig> sweep_base;

    /// Declared expectations, interpreted per kind.
    Json expect = Json::object();
};

/// Parses and validates a config. Throws ConfigError with the offending
/// field path in the message.
ScenarioConfig parse_scenario(const Json& j);
ScenarioConfig parse_scenario_file(const std::string& file);

/// Canonical serialization; parse(serialize(cfg)) reproduces cfg.
Json serialize_scenario(const ScenarioConfig& cfg);

struct Expectation {
    std::string name;
    bool pass{false};
    std::string detail;
};

struct RunReport {
    std::string id;
    std::string kind;
    Json inputs;
    Json outputs;
    Json diagnostics;
    std::vector<Expectation> expectations;
    bool pass{true};

    Json to_json() const;
};

/// Dispatches one scenario (kinds: phase, force, duality, entangle).
/// Computational errors propagate with scenario context prepended.
RunReport run_scenario(const ScenarioConfig& cfg);

struct SweepResult {
    std::string id;
    std::string parameter;
    /// One report per swept value, in declared order.
    std::vector<RunReport> rows;
    std::vector<Expectation> expectations;
    bool pass{true};

    Json to_json() const;
    /// Table with a header row naming the swept parameter.
    std::string to_csv() const;
};

SweepResult run_sweep(const ScenarioConfig& cfg);

/// Shortest round-trip decimal formatting used in reports and CSV.
std::string format_double(double v);

}  // namespace acdual
