#pragma once

#include "linecolor/bounds_and_witnesses.hpp"
#include "linecolor/constructive_colorer.hpp"
#include "linecolor/core_model.hpp"
#include "linecolor/finite_solver.hpp"
#include "linecolor/periodic_solver.hpp"

#include <nlohmann/json_fwd.hpp>

#include <string>

namespace linecolor::json_io {

using json = nlohmann::json;

// All artifacts carry {"format": 1}. Readers accept a missing field and
// reject any other value. Rationals serialize as int64 when integral and
// small enough, as canonical "p/q" strings otherwise; non-integer JSON
// numbers are rejected (floats are not exact).
inline constexpr int kFormatVersion = 1;

json rational_to_json(const Rational& r);
Rational rational_from_json(const json& j);

json array_to_json(const RestrictionArray& d);
RestrictionArray array_from_json(const json& j);

json points_to_json(const PointSet& s);
PointSet points_from_json(const json& j);

json coloring_to_json(const Coloring& t);
Coloring coloring_from_json(const json& j);

json violations_to_json(const std::vector<Violation>& v);

json window_to_json(const WindowReport& w);

json periodic_to_json(const PeriodicColoring& p);
PeriodicColoring periodic_from_json(const json& j);

json bounds_to_json(const BoundSequence& b);
json diagnostics_to_json(const LocalLemmaDiagnostics& d);

json trace_to_json(const std::vector<BranchRecord>& trace);

json kdistance_to_json(const KDistanceSet& s);
KDistanceSet kdistance_from_json(const json& j);

json witness_to_json(const WitnessInstance& w, const std::string& cross_check);

json periodicity_report_to_json(const PeriodicityReport& r);
json chi_report_to_json(const ChiSearchReport& r);

// Canonical text form (sorted keys, two-space indent, trailing newline);
// byte-identical output for equal values.
std::string dump(const json& j);

json read_json_file(const std::string& path);

// Temp file in the target directory, then rename.
void write_json_file_atomic(const std::string& path, const json& j);

}  // namespace linecolor::json_io
