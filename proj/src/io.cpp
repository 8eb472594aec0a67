#include "islands/io.hpp"

#include <fstream>
#include <json.hpp>
#include <regex>
#include <sstream>

#include "islands/error.hpp"
#include "islands/identities.hpp"

namespace islands {

namespace {

using Json = nlohmann::ordered_json;

const BigInt kMaxSafe = (BigInt(1) << 53) - 1;

Json exact_value(const BigInt& v) {
  if (v > kMaxSafe || v < -kMaxSafe) return to_string(v);
  return static_cast<std::int64_t>(v);
}

std::optional<DirectedEdge> parse_edge_comment(const std::string& comment, char name) {
  static const std::regex pattern(R"(^\s*([ef])\s*=\s*(\d+)\s+(\d+)\s*$)");
  std::smatch m;
  if (!std::regex_match(comment, m, pattern) || m[1].str()[0] != name) return std::nullopt;
  return DirectedEdge{std::stoi(m[2].str()), std::stoi(m[3].str())};
}

}  // namespace

PointFile parse_point_file(std::istream& in) {
  static const std::regex dim_header(R"(^\s*dim\s*=\s*(\d+)\s*$)");
  std::optional<int> dim;
  std::optional<DirectedEdge> e, f;
  std::vector<std::vector<std::int64_t>> rows;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) {
      const std::string comment = line.substr(hash + 1);
      std::smatch m;
      if (std::regex_match(comment, m, dim_header)) dim = std::stoi(m[1].str());
      if (auto edge = parse_edge_comment(comment, 'e')) e = edge;
      if (auto edge = parse_edge_comment(comment, 'f')) f = edge;
      line.resize(hash);
    }
    std::istringstream fields(line);
    std::vector<std::int64_t> row;
    std::string token;
    while (fields >> token) {
      std::size_t used = 0;
      std::int64_t v = 0;
      try {
        v = std::stoll(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size()) {
        throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": not an integer: '" + token + "'");
      }
      row.push_back(v);
    }
    if (row.empty()) continue;
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected " +
                                             std::to_string(rows.front().size()) + " coordinates, got " +
                                             std::to_string(row.size()));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw Error(ErrorCode::ParseError, "no points in input");
  const int columns = static_cast<int>(rows.front().size());
  if (dim && *dim != columns) {
    throw Error(ErrorCode::ParseError, "header says dim=" + std::to_string(*dim) + " but rows have " +
                                           std::to_string(columns) + " coordinates");
  }
  PointFile file{validate_rows(rows, columns), e, f};
  for (const auto& edge : {file.e, file.f}) {
    if (edge && (edge->p >= file.points.size() || edge->q >= file.points.size() || edge->p == edge->q)) {
      throw Error(ErrorCode::ParseError, "edge comment names invalid indices", {edge->p, edge->q});
    }
  }
  return file;
}

PointFile read_point_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  return parse_point_file(in);
}

std::string format_point_file(const PointSet& s, const std::vector<std::string>& notes) {
  std::ostringstream out;
  out << "# dim=" << s.dim() << '\n';
  for (const std::string& note : notes) out << "# " << note << '\n';
  if (s.dim() == 2) {
    for (const Point2& p : s.points2()) out << p.x << ' ' << p.y << '\n';
  } else {
    for (const Point3& p : s.points3()) out << p.x << ' ' << p.y << ' ' << p.z << '\n';
  }
  return out.str();
}

std::string format_point_file(const Generated& g) { return format_point_file(g.points, g.notes); }

std::string census_json(const CensusTable& table) {
  Json entries = Json::array();
  for (const auto& [key, count] : table.counts) {
    entries.push_back({{"k", key.k}, {"l", key.l}, {"count", exact_value(BigInt(count))}});
  }
  Json moments = {{"m0", exact_value(moment(table, 0))},
                  {"m1", exact_value(moment(table, 1))},
                  {"m2", exact_value(moment(table, 2))}};
  Json mixed = {{"f0", exact_value(mixed_moment_sum(table, 0))},
                {"f1", exact_value(mixed_moment_sum(table, 1))},
                {"f2", exact_value(mixed_moment_sum(table, 2))}};
  Json derived = {{"eq1", exact_value(alt_sum(table, 0))},
                  {"eq2", exact_value(moment(table, 1))},
                  {"a1", exact_value(alt_sum(table, 1))},
                  {"moments", moments},
                  {"mixed", mixed}};
  Json doc = {{"n", table.n}, {"h", table.h}, {"dim", table.dim}, {"entries", entries}, {"derived", derived}};
  return doc.dump(2) + "\n";
}

std::string census_csv(const CensusTable& table) {
  std::ostringstream out;
  out << "k,l,count\n";
  for (const auto& [key, count] : table.counts) out << key.k << ',' << key.l << ',' << count << '\n';
  return out.str();
}

std::string format_report(const VerificationReport& r) {
  std::ostringstream out;
  out << (r.pass ? "PASS " : "FAIL ") << r.id << ": expected " << r.expected << ", computed " << r.computed;
  if (r.context.seed) out << " (seed " << *r.context.seed << ")";
  return out.str();
}

}  // namespace islands
