#include "islands/generators.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <random>
#include <string_view>

#include "islands/error.hpp"

namespace islands {

namespace {

void require_dim(int dim) {
  if (dim != 2 && dim != 3) throw Error(ErrorCode::BadDimension, "dimension must be 2 or 3, got " + std::to_string(dim));
}

// Whether c is distinct from, and in general position with, the accepted points.
bool accepts(const std::vector<Point2>& pts, const Point2& c) {
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (pts[i] == c) return false;
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (orient2d(pts[i], pts[j], c) == Sign::Zero) return false;
    }
  }
  return true;
}

bool accepts(const std::vector<Point3>& pts, const Point3& c) {
  const std::size_t m = pts.size();
  for (std::size_t i = 0; i < m; ++i) {
    if (pts[i] == c) return false;
    for (std::size_t j = i + 1; j < m; ++j) {
      for (std::size_t k = j + 1; k < m; ++k) {
        if (orient3d(pts[i], pts[j], pts[k], c) == Sign::Zero) return false;
      }
    }
  }
  return true;
}

// y-coordinates of a Horton set on x = 0..n-1.
std::vector<std::int64_t> horton_heights(int n) {
  if (n == 1) return {0};
  const std::vector<std::int64_t> sub = horton_heights(n / 2);
  const std::int64_t range = *std::max_element(sub.begin(), sub.end()) - *std::min_element(sub.begin(), sub.end());
  const std::int64_t m = static_cast<std::int64_t>(sub.size());
  // Lines through two points of one layer stay within range * (m + 1) of it
  // across the whole x extent, so this lift puts odd points above them all.
  const std::int64_t lift = range * (m + 1) + 1;
  if (lift > kMaxCoordinate / 2) throw Error(ErrorCode::BadN, "Horton set too large for the coordinate range");
  std::vector<std::int64_t> y(n);
  for (std::int64_t i = 0; i < m; ++i) {
    y[2 * i] = sub[i];
    y[2 * i + 1] = sub[i] + lift;
  }
  return y;
}

template <typename T>
T parse_number(std::string_view key, std::string_view text) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::ParseError, "bad value for " + std::string(key) + ": '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

PointSet gen_convex(int n, int dim) {
  require_dim(dim);
  if (n < dim + 1) throw Error(ErrorCode::BadN, "convex position needs n >= " + std::to_string(dim + 1));
  if (dim == 2) {
    std::vector<Point2> pts;
    for (std::int64_t i = 1; i <= n; ++i) pts.push_back({i, i * i});
    return validate(pts);
  }
  std::vector<Point3> pts;
  for (std::int64_t i = 1; i <= n; ++i) pts.push_back({i, i * i, i * i * i});
  return validate(pts);
}

PointSet gen_random(int n, std::uint64_t seed, std::int64_t bbox, int dim) {
  require_dim(dim);
  if (n < dim + 1) throw Error(ErrorCode::BadN, "random sets need n >= " + std::to_string(dim + 1));
  if (bbox <= 0) bbox = 4 * static_cast<std::int64_t>(n) * n;
  if (bbox > kMaxCoordinate) throw Error(ErrorCode::CoordinateOutOfRange, "bbox exceeds the coordinate range");
  std::mt19937_64 rng(seed);
  const auto draw = [&] { return static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(bbox)); };
  const int budget = 1000 + 100 * n;
  int attempts = 0;
  const auto spend = [&] {
    if (++attempts > budget) {
      throw Error(ErrorCode::RetryBudgetExceeded,
                  "no general-position sample after " + std::to_string(budget) + " draws; enlarge bbox");
    }
  };
  if (dim == 2) {
    std::vector<Point2> pts;
    while (static_cast<int>(pts.size()) < n) {
      spend();
      const Point2 c{draw(), draw()};
      if (accepts(pts, c)) pts.push_back(c);
    }
    return validate(pts);
  }
  std::vector<Point3> pts;
  while (static_cast<int>(pts.size()) < n) {
    spend();
    const Point3 c{draw(), draw(), draw()};
    if (accepts(pts, c)) pts.push_back(c);
  }
  return validate(pts);
}

ChainSet gen_chain(int n) {
  if (n < 5) throw Error(ErrorCode::BadN, "chain construction needs n >= 5");
  const std::int64_t chain = n - 4;
  // Spacing and sag both grow with n so the chain stays strictly concave and
  // strictly inside the square.
  const std::int64_t step = 8 * (chain + 1);
  const std::int64_t side = step * (chain + 1);
  std::vector<Point2> pts = {{0, 0}, {side, 0}, {side, side}, {0, side}};
  for (std::int64_t i = 1; i <= chain; ++i) {
    const std::int64_t x = i * step;
    // Chain bows down toward the bottom side, just below the top side.
    pts.push_back({x, side - 1 - i * (chain + 1 - i)});
  }
  return {validate(pts), DirectedEdge{0, 1}, DirectedEdge{0, 2}};
}

PointSet gen_horton(int n) {
  if (n < 4 || (n & (n - 1)) != 0) throw Error(ErrorCode::BadN, "Horton sets need n = 2^j >= 4, got " + std::to_string(n));
  const std::vector<std::int64_t> y = horton_heights(n);
  std::vector<Point2> pts;
  for (int i = 0; i < n; ++i) pts.push_back({i, y[i]});
  return validate(pts);
}

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = {"triangle-interior", "square", "convex5", "tetra", "tetra-interior"};
  return names;
}

PointSet gen_fixture(const std::string& name) {
  if (name == "triangle-interior") return validate(std::vector<Point2>{{0, 0}, {4, 0}, {2, 4}, {2, 1}});
  if (name == "square") return validate(std::vector<Point2>{{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  if (name == "convex5") return gen_convex(5, 2);
  if (name == "tetra") return validate(std::vector<Point3>{{0, 0, 0}, {6, 0, 0}, {0, 6, 0}, {0, 0, 6}});
  if (name == "tetra-interior") {
    return validate(std::vector<Point3>{{0, 0, 0}, {6, 0, 0}, {0, 6, 0}, {0, 0, 6}, {1, 1, 1}});
  }
  throw Error(ErrorCode::BadParam, "unknown fixture '" + name + "'");
}

GenSpec parse_gen_spec(const std::string& text) {
  GenSpec spec;
  const std::size_t colon = text.find(':');
  spec.kind = text.substr(0, colon);
  static const std::vector<std::string> kinds = {"convex", "random", "chain", "horton", "fixture"};
  if (std::find(kinds.begin(), kinds.end(), spec.kind) == kinds.end()) {
    throw Error(ErrorCode::ParseError, "unknown generator kind '" + spec.kind + "'");
  }
  if (colon == std::string::npos) return spec;
  std::string_view rest(text);
  rest.remove_prefix(colon + 1);
  while (!rest.empty()) {
    const std::size_t comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) throw Error(ErrorCode::ParseError, "expected key=value, got '" + std::string(item) + "'");
    const std::string_view key = item.substr(0, eq);
    const std::string_view value = item.substr(eq + 1);
    if (key == "n") spec.n = parse_number<int>(key, value);
    else if (key == "seed") spec.seed = parse_number<std::uint64_t>(key, value);
    else if (key == "bbox") spec.bbox = parse_number<std::int64_t>(key, value);
    else if (key == "dim") spec.dim = parse_number<int>(key, value);
    else if (key == "name") spec.fixture = std::string(value);
    else throw Error(ErrorCode::ParseError, "unknown generator key '" + std::string(key) + "'");
  }
  return spec;
}

namespace {

Generated plain(PointSet points, std::vector<std::string> notes = {}) {
  return {std::move(points), std::move(notes), false, {}, {}};
}

}  // namespace

Generated generate(const GenSpec& spec, int default_dim) {
  const int dim = spec.dim != 0 ? spec.dim : default_dim;
  if (spec.kind == "convex") return plain(gen_convex(spec.n, dim));
  if (spec.kind == "random") {
    return plain(gen_random(spec.n, spec.seed, spec.bbox, dim), {"seed=" + std::to_string(spec.seed)});
  }
  if (spec.kind == "horton") return plain(gen_horton(spec.n));
  if (spec.kind == "fixture") return plain(gen_fixture(spec.fixture));
  if (spec.kind == "chain") {
    ChainSet c = gen_chain(spec.n);
    Generated g{std::move(c.points), {}, true, c.e, c.f};
    g.notes.push_back("e = " + std::to_string(c.e.p) + " " + std::to_string(c.e.q));
    g.notes.push_back("f = " + std::to_string(c.f.p) + " " + std::to_string(c.f.q));
    return g;
  }
  throw Error(ErrorCode::ParseError, "unknown generator kind '" + spec.kind + "'");
}

}  // namespace islands
