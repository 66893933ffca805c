#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "fimp/duality.hpp"

namespace fimp {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolName = "fimp";
inline constexpr const char* kToolVersion = "0.1.0";

/// Reads the problem file format. Throws ParseError (bad JSON or expression
/// text) and ValidationError (shape, empty S, assumptions failing at a grid
/// corner inside S).
FimpProblem parse_problem_text(std::string_view text);
FimpProblem parse_problem(const std::string& path);
FimpProblem problem_from_json(const Json& j);

Json problem_to_json(const FimpProblem& prob);
std::string serialize_problem(const FimpProblem& prob);

/// FNV-1a 64 of the canonical serialisation, as 16 hex digits.
std::string problem_digest(const FimpProblem& prob);
std::uint64_t fnv1a64(std::string_view bytes);

Vec parse_vector(const Json& j, const char* what);
Json to_json(const Vec& v);
Json to_json(const Interval& a);
Json to_json(const IntervalVector& v);
Json to_json(const ParetoVerdict& v);
Json to_json(const GridScan& s);
Json to_json(const Certificate& c);
Json to_json(const SearchResult& r);
Json to_json(const CqResult& r);
Json to_json(const ConvexityReport& r);
Json to_json(const DualPoint& d);
Json to_json(const DualFeasibility& f);
Json to_json(const DualityFinding& f);
Json to_json(const StrongDualityResult& r);
Json to_json(const ConverseResult& r);
Json to_json(const LpProblem& lp);
Json to_json(const FarkasWitness& w);

DualPoint dual_point_from_json(const Json& j);
/// A JSON array of {"y", "lamL", "lamU", "mu"} objects.
std::vector<DualPoint> parse_dual_points(std::string_view text);

/// Envelope shared by every command: tool, version, command, digest, results.
Json make_report(const std::string& command, const FimpProblem* prob, Json results);

}  // namespace fimp
