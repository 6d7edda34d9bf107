#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ramtower/formal.hpp"
#include "ramtower/herbrand.hpp"
#include "ramtower/polygon.hpp"
#include "ramtower/tate.hpp"
#include "ramtower/towers.hpp"

namespace ramtower {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// Rationals travel as "num/den" strings. Readers throw DomainError on
/// malformed input.
Json rat_to_json(const Rat& r);
Rat rat_from_json(const Json& j);

Json to_json(const NewtonPolygon& np);
NewtonPolygon polygon_from_json(const Json& j);

Json to_json(const BreakFiltration& f);
BreakFiltration filtration_from_json(const Json& j);

/// {"points":[["x","y"],...],"final_slope":"r"}.
Json to_json(const PiecewiseLinear& f);
PiecewiseLinear piecewise_from_json(const Json& j);

Json to_json(const TowerParams& P);
TowerParams tower_params_from_json(const Json& j);

Json to_json(const BreakSchedule& s);
BreakSchedule schedule_from_json(const Json& j);

Json to_json(const TorsionTrace& t);
TorsionTrace torsion_from_json(const Json& j);

Json to_json(const TateResult& r);
TateResult tate_result_from_json(const Json& j);

Json to_json(const TateHypothesis& h);

Json to_json(const CharacterBreak& c);

Json to_json(const GridReport& g);

Json to_json(const CheckReport& r);

/// Law coefficients as a nested array law[i][j] for i + j <= D, brackets keyed
/// by the scalar.
Json to_json(const FormalModule<RationalRing>& M);
FormalModule<RationalRing> formal_module_from_json(const Json& j);
/// Reduced modules write each F_q element by its integer code.
Json to_json(const FormalModule<FiniteFieldRing>& M);

struct Diagnostic {
    std::string code;
    std::string message;

    friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

enum class RunStatus { Ok, Fail, PrecisionError };

struct RunReport {
    int schema_version = kSchemaVersion;
    RunStatus status = RunStatus::Ok;
    Json payload;
    std::vector<Diagnostic> diagnostics;
};

std::string to_string(RunStatus s);
Json to_json(const RunReport& r);
RunReport run_report_from_json(const Json& j);

} // namespace ramtower
