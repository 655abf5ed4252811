#include "linecolor/json_io.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace linecolor::json_io {

namespace {

void check_format(const json& j) {
  if (!j.is_object()) return;
  auto it = j.find("format");
  if (it == j.end()) return;
  if (!it->is_number_integer() || it->get<int>() != kFormatVersion)
    throw std::invalid_argument("unsupported format version (expected 1)");
}

const json& field(const json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end())
    throw std::invalid_argument(std::string("missing field '") + name + "'");
  return *it;
}

int int_field(const json& j, const char* name) {
  const json& f = field(j, name);
  if (!f.is_number_integer())
    throw std::invalid_argument(std::string("field '") + name +
                                "' must be an integer");
  return f.get<int>();
}

}  // namespace

json rational_to_json(const Rational& r) {
  if (r.is_integer() && fits_int64(r.num())) return json(to_int64(r.num()));
  return json(r.str());
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(BigInt(j.get<std::int64_t>()));
  if (j.is_number_unsigned()) return Rational(BigInt(j.get<std::uint64_t>()));
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_float())
    throw std::invalid_argument(
        "non-integer JSON number is not exact; write a \"p/q\" string");
  throw std::invalid_argument("expected integer or \"p/q\" string, got " +
                              std::string(j.type_name()));
}

json array_to_json(const RestrictionArray& d) {
  json entries = json::array();
  for (std::size_t i = 0; i < d.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < d.cols(); ++j)
      row.push_back(rational_to_json(d.entry(i, j)));
    entries.push_back(std::move(row));
  }
  return json{{"format", kFormatVersion},
              {"k", d.rows()},
              {"m", d.cols()},
              {"entries", std::move(entries)}};
}

RestrictionArray array_from_json(const json& j) {
  check_format(j);
  const int k = int_field(j, "k");
  const int m = int_field(j, "m");
  if (k < 0) throw std::invalid_argument("field 'k' must be >= 0");
  if (m < 1) throw std::invalid_argument("field 'm' must be >= 1");
  const json& entries = field(j, "entries");
  if (!entries.is_array() || entries.size() != static_cast<std::size_t>(k))
    throw std::invalid_argument("field 'entries' must be an array of k rows");
  std::vector<std::vector<Rational>> rows;
  rows.reserve(static_cast<std::size_t>(k));
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const json& row = entries[i];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(m))
      throw std::invalid_argument("entries row " + std::to_string(i) +
                                  " must have m values");
    std::vector<Rational> out_row;
    out_row.reserve(static_cast<std::size_t>(m));
    for (const auto& cell : row) out_row.push_back(rational_from_json(cell));
    rows.push_back(std::move(out_row));
  }
  return RestrictionArray(static_cast<std::size_t>(k),
                          static_cast<std::size_t>(m), std::move(rows));
}

json points_to_json(const PointSet& s) {
  json points = json::array();
  for (const auto& x : s) points.push_back(rational_to_json(x));
  return json{{"format", kFormatVersion}, {"points", std::move(points)}};
}

PointSet points_from_json(const json& j) {
  check_format(j);
  const json& points = field(j, "points");
  if (!points.is_array())
    throw std::invalid_argument("field 'points' must be an array");
  std::vector<Rational> values;
  values.reserve(points.size());
  for (const auto& p : points) values.push_back(rational_from_json(p));
  return PointSet::from_values(std::move(values));
}

json coloring_to_json(const Coloring& t) {
  json colors = json::object();
  for (const auto& [point, color] : t.colors()) colors[point.str()] = color;
  return json{{"format", kFormatVersion}, {"colors", std::move(colors)}};
}

Coloring coloring_from_json(const json& j) {
  check_format(j);
  const json& colors = field(j, "colors");
  if (!colors.is_object())
    throw std::invalid_argument("field 'colors' must be an object");
  Coloring t;
  for (const auto& [key, value] : colors.items()) {
    if (!value.is_number_integer())
      throw std::invalid_argument("color of point '" + key +
                                  "' must be an integer");
    t.assign(Rational::parse(key), value.get<int>());
  }
  return t;
}

json violations_to_json(const std::vector<Violation>& v) {
  json list = json::array();
  for (const auto& violation : v) {
    list.push_back(json{{"x", rational_to_json(violation.x)},
                        {"y", rational_to_json(violation.y)},
                        {"color", violation.color},
                        {"distance", rational_to_json(violation.distance)},
                        {"row", violation.row}});
  }
  return json{{"format", kFormatVersion}, {"violations", std::move(list)}};
}

json window_to_json(const WindowReport& w) {
  json out{{"format", kFormatVersion},
           {"found", w.found},
           {"radius_searched", w.radius_searched}};
  if (w.found)
    out["window"] = json::array({w.lo, w.hi});
  else
    out["window"] = nullptr;
  return out;
}

json periodic_to_json(const PeriodicColoring& p) {
  return json{{"format", kFormatVersion},
              {"period", p.period},
              {"colors", p.colors}};
}

PeriodicColoring periodic_from_json(const json& j) {
  check_format(j);
  const int period = int_field(j, "period");
  const json& colors = field(j, "colors");
  if (!colors.is_array())
    throw std::invalid_argument("field 'colors' must be an array");
  PeriodicColoring p;
  p.period = period;
  for (const auto& c : colors) {
    if (!c.is_number_integer())
      throw std::invalid_argument("periodic colors must be integers");
    p.colors.push_back(c.get<int>());
  }
  return p;
}

json bounds_to_json(const BoundSequence& b) {
  json values = json::array();
  for (const auto& v : b.values) values.push_back(v.str());
  const std::size_t k = b.values.size() - 1;
  return json{{"format", kFormatVersion},
              {"k", k},
              {"values", std::move(values)},
              {"closed_form", closed_form_bound(k).str()}};
}

json diagnostics_to_json(const LocalLemmaDiagnostics& d) {
  return json{{"format", kFormatVersion},
              {"k", d.k},
              {"m", d.m},
              {"max_restriction_spread", d.spread},
              {"event_probability", d.event_probability.str()},
              {"dependency_degree_bound", d.dependency_degree.str()},
              {"product", d.product.str()},
              {"guarantee", d.guarantee}};
}

json trace_to_json(const std::vector<BranchRecord>& trace) {
  json out = json::array();
  for (const auto& rec : trace) {
    json entry{{"level", rec.level},
               {"k", rec.k},
               {"m", rec.m},
               {"branch", std::string(1, rec.branch)}};
    if (rec.branch == 'b') entry["split_width"] = rec.split_width.str();
    if (rec.branch == 'c') entry["coset_classes"] = rec.coset_classes;
    if (rec.branch == 'b' || rec.branch == 'c') entry["spread"] = rec.spread;
    out.push_back(std::move(entry));
  }
  return out;
}

json kdistance_to_json(const KDistanceSet& s) {
  json out{{"format", kFormatVersion},
           {"dimension", s.dimension},
           {"level", s.level},
           {"exact", s.exact}};
  if (s.exact) {
    json points = json::array();
    for (const auto& p : s.points) {
      json coords = json::array();
      for (const auto& c : p) coords.push_back(rational_to_json(c));
      points.push_back(std::move(coords));
    }
    out["points"] = std::move(points);
    json squares = json::array();
    for (const auto& v : s.distinct_squared_distances)
      squares.push_back(rational_to_json(v));
    out["distinct_squared_distances"] = std::move(squares);
  } else {
    json points = json::array();
    for (const auto& p : s.float_points)
      points.push_back(json::array({p[0], p[1]}));
    out["points"] = std::move(points);
    out["distinct_distances"] = s.distinct_distances;
    out["tolerance"] = s.tolerance;
  }
  return out;
}

KDistanceSet kdistance_from_json(const json& j) {
  check_format(j);
  const json& points = field(j, "points");
  if (!points.is_array())
    throw std::invalid_argument("field 'points' must be an array");

  // Flat list of rationals: a one-dimensional exact set.
  const bool flat = !points.empty() && !points[0].is_array();
  if (flat || points.empty()) {
    std::vector<Rational> values;
    for (const auto& p : points) values.push_back(rational_from_json(p));
    const auto line = PointSet::from_values(std::move(values));
    KDistanceSet out;
    out.dimension = 1;
    out.exact = true;
    std::set<Rational> squares;
    for (std::size_t a = 0; a < line.size(); ++a) {
      out.points.push_back({line[a]});
      for (std::size_t b = a + 1; b < line.size(); ++b) {
        const Rational diff = line[b] - line[a];
        squares.insert(diff * diff);
      }
    }
    out.distinct_squared_distances.assign(squares.begin(), squares.end());
    out.level = static_cast<int>(out.distinct_squared_distances.size());
    return out;
  }

  if (j.contains("exact") && !field(j, "exact").get<bool>())
    throw std::invalid_argument(
        "float point sets cannot be read back for exact computation");

  KDistanceSet out;
  out.exact = true;
  for (const auto& p : points) {
    std::vector<Rational> coords;
    for (const auto& c : p) coords.push_back(rational_from_json(c));
    out.points.push_back(std::move(coords));
  }
  const std::size_t width = out.points.front().size();
  for (const auto& p : out.points)
    if (p.size() != width)
      throw std::invalid_argument("points must all have the same dimension");
  out.dimension = j.contains("dimension") ? int_field(j, "dimension")
                                          : static_cast<int>(width);
  std::set<Rational> squares;
  for (std::size_t a = 0; a < out.points.size(); ++a) {
    for (std::size_t b = a + 1; b < out.points.size(); ++b) {
      Rational sum(0);
      for (std::size_t i = 0; i < width; ++i) {
        const Rational diff = out.points[a][i] - out.points[b][i];
        sum += diff * diff;
      }
      squares.insert(sum);
    }
  }
  out.distinct_squared_distances.assign(squares.begin(), squares.end());
  out.level = j.contains("level")
                  ? int_field(j, "level")
                  : static_cast<int>(out.distinct_squared_distances.size());
  return out;
}

json witness_to_json(const WitnessInstance& w, const std::string& cross_check) {
  json out{{"format", kFormatVersion},
           {"source", kdistance_to_json(w.source)},
           {"array", array_to_json(w.array)},
           {"entries_are_squared", w.entries_are_squared},
           {"claim", "source points cannot be colored against this array"},
           {"pigeonhole_holds", pigeonhole_certificate(w)}};
  if (cross_check.empty())
    out["solver_cross_check"] = nullptr;
  else
    out["solver_cross_check"] = cross_check;
  return out;
}

namespace {

const char* periodic_status_name(PeriodicStatus s) {
  switch (s) {
    case PeriodicStatus::Found: return "found";
    case PeriodicStatus::None: return "none";
    case PeriodicStatus::BudgetExhausted: return "budget_exhausted";
  }
  return "?";
}

}  // namespace

json periodicity_report_to_json(const PeriodicityReport& r) {
  json records = json::array();
  for (const auto& rec : r.records) {
    json entry{{"array", array_to_json(rec.array)},
               {"discrepant", rec.discrepant}};
    if (rec.window_error) {
      entry["window_verdict"] = "error";
      entry["window_error"] = rec.window_error_message;
    } else {
      entry["window_verdict"] =
          rec.window_found ? "unsat_window" : "sat_to_radius";
    }
    entry["window"] = rec.window_found
                          ? json::array({rec.window.lo, rec.window.hi})
                          : json(nullptr);
    entry["periodic_verdict"] = periodic_status_name(rec.periodic_status);
    entry["period"] =
        rec.periodic ? json(rec.periodic->period) : json(nullptr);
    entry["periodic_colors"] =
        rec.periodic ? json(rec.periodic->colors) : json(nullptr);
    records.push_back(std::move(entry));
  }
  return json{{"format", kFormatVersion},
              {"radius", r.radius},
              {"p_max", r.p_max},
              {"records", std::move(records)},
              {"discrepant_count", r.discrepant_indices.size()}};
}

json chi_report_to_json(const ChiSearchReport& r) {
  json records = json::array();
  for (const auto& rec : r.records) {
    json entry{{"array", array_to_json(rec.array)}};
    switch (rec.verdict) {
      case ArrayVerdict::UnsatWindow:
        entry["verdict"] = "unsat_window";
        entry["window"] = json::array({rec.window->lo, rec.window->hi});
        break;
      case ArrayVerdict::PeriodicSat:
        entry["verdict"] = "periodic_sat";
        entry["period"] = rec.periodic->period;
        entry["periodic_colors"] = rec.periodic->colors;
        break;
      case ArrayVerdict::Unresolved:
        entry["verdict"] = "unresolved";
        break;
      case ArrayVerdict::Error:
        entry["verdict"] = "error";
        entry["error"] = rec.error_message;
        break;
    }
    records.push_back(std::move(entry));
  }
  return json{{"format", kFormatVersion},
              {"entry_max", r.entry_max},
              {"radius", r.radius},
              {"p_max", r.p_max},
              {"columns", r.columns},
              {"records", std::move(records)},
              {"unsat_count", r.unsat_indices.size()},
              {"unresolved_count", r.unresolved_indices.size()}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw std::invalid_argument("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("parse error in '" + path + "': " + e.what());
  }
}

void write_json_file_atomic(const std::string& path, const json& j) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + tmp + "'");
    out << dump(j);
    if (!out) throw std::runtime_error("write failed for '" + tmp + "'");
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("rename failed for '" + path + "'");
}

}  // namespace linecolor::json_io
