#pragma once

// Point files, census JSON/CSV, and report formatting.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "islands/census.hpp"
#include "islands/generators.hpp"
#include "islands/report.hpp"

namespace islands {

/// One point per line, whitespace-separated integers. '#' starts a comment.
/// An optional "# dim=N" line fixes the dimension; otherwise it is the
/// column count. Comments "# e = p q" and "# f = p q" name chain edges.
struct PointFile {
  PointSet points;
  std::optional<DirectedEdge> e;
  std::optional<DirectedEdge> f;
};

PointFile parse_point_file(std::istream& in);
PointFile read_point_file(const std::string& path);

/// "# dim=N", one comment line per note, then the points.
std::string format_point_file(const PointSet& s, const std::vector<std::string>& notes = {});
std::string format_point_file(const Generated& g);

/// {n, h, dim, entries: [{k, l, count}], derived: {...}}; integers above
/// 2^53 - 1 in magnitude are written as strings.
std::string census_json(const CensusTable& table);

/// Header "k,l,count", rows sorted by (k, l).
std::string census_csv(const CensusTable& table);

/// One line per report: "PASS id: expected E, computed C".
std::string format_report(const VerificationReport& r);

}  // namespace islands
