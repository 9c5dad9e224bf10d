#include "hullcoreset/instance_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <map>
#include <numbers>
#include <random>
#include <sstream>

namespace hullcoreset::io {
namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_real(const std::string& field, std::size_t line) {
  const std::string t = trim(field);
  double v = 0.0;
  const char* end = t.data() + t.size();
  const auto [ptr, ec] = std::from_chars(t.data(), end, v);
  if (t.empty() || ec != std::errc() || ptr != end) {
    throw ParseError("malformed number '" + t + "'", line);
  }
  if (!std::isfinite(v)) throw ParseError("non-finite value '" + t + "'", line);
  return v;
}

struct RawPoint {
  Point2 p;
  std::size_t line;
};

PointSet dedup(const std::vector<RawPoint>& raw) {
  PointSet out;
  std::map<std::pair<double, double>, std::size_t> first_seen;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const auto key = std::make_pair(raw[i].p.x, raw[i].p.y);
    const auto [it, inserted] = first_seen.emplace(key, i);
    if (!inserted) {
      out.warnings.push_back("duplicate point on line " + std::to_string(raw[i].line) +
                             " dropped (first seen on line " +
                             std::to_string(raw[it->second].line) + ")");
      continue;
    }
    out.points.push_back(raw[i].p);
    out.source.push_back(i);
  }
  return out;
}

std::string shortest(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace

PointFormat format_from_string(const std::string& name) {
  if (name == "csv") return PointFormat::csv;
  if (name == "json") return PointFormat::json;
  throw std::invalid_argument("unknown point format '" + name + "'");
}

PointFormat format_from_path(const std::filesystem::path& path) {
  return path.extension() == ".json" ? PointFormat::json : PointFormat::csv;
}

PointSet parse_points(const std::string& text, PointFormat format) {
  std::vector<RawPoint> raw;
  if (format == PointFormat::csv) {
    std::istringstream in(text);
    std::string line;
    for (std::size_t no = 1; std::getline(in, line); ++no) {
      const std::string t = trim(line);
      if (t.empty()) continue;
      const auto comma = t.find(',');
      if (comma == std::string::npos || t.find(',', comma + 1) != std::string::npos) {
        throw ParseError("expected 'x,y'", no);
      }
      const double x = parse_real(t.substr(0, comma), no);
      const double y = parse_real(t.substr(comma + 1), no);
      raw.push_back({Point2(x, y), no});
    }
  } else {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("invalid json: ") + e.what(), 1);
    }
    if (!doc.is_array()) throw ParseError("expected an array of [x, y] pairs", 1);
    for (std::size_t i = 0; i < doc.size(); ++i) {
      const auto& e = doc[i];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
        throw ParseError("expected [x, y] at element " + std::to_string(i + 1), i + 1);
      }
      const double x = e[0].get<double>();
      const double y = e[1].get<double>();
      if (!std::isfinite(x) || !std::isfinite(y)) throw ParseError("non-finite value", i + 1);
      raw.push_back({Point2(x, y), i + 1});
    }
  }
  return dedup(raw);
}

PointSet read_points(const std::filesystem::path& path, PointFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_points(buf.str(), format);
}

std::string emit_points(std::span<const Point2> points, PointFormat format) {
  std::string out;
  if (format == PointFormat::csv) {
    for (const Point2& p : points) out += shortest(p.x) + "," + shortest(p.y) + "\n";
    return out;
  }
  nlohmann::json doc = nlohmann::json::array();
  for (const Point2& p : points) doc.push_back({p.x, p.y});
  return doc.dump() + "\n";
}

GenKind gen_kind_from_string(const std::string& name) {
  if (name == "convex-circle") return GenKind::convex_circle;
  if (name == "convex-perturbed") return GenKind::convex_perturbed;
  if (name == "uniform-square") return GenKind::uniform_square;
  if (name == "clustered") return GenKind::clustered;
  if (name == "collinear") return GenKind::collinear;
  throw std::invalid_argument("unknown generator '" + name + "'");
}

const char* to_string(GenKind kind) {
  switch (kind) {
    case GenKind::convex_circle: return "convex-circle";
    case GenKind::convex_perturbed: return "convex-perturbed";
    case GenKind::uniform_square: return "uniform-square";
    case GenKind::clustered: return "clustered";
    case GenKind::collinear: return "collinear";
  }
  return "?";
}

std::vector<Point2> gen_instance(GenKind kind, std::size_t n, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("n must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  constexpr double kTwoPi = 2 * std::numbers::pi;
  std::vector<Point2> out;
  out.reserve(n);

  switch (kind) {
    case GenKind::convex_circle:
    case GenKind::convex_perturbed: {
      // Stratified angles keep neighbouring points apart; decreasing angles
      // list the polygon clockwise. For the perturbed radius
      // 1 + a cos(m t + phi), curvature stays positive while a (1 + m^2) < 1.
      const double offset = kTwoPi * unit(rng);
      const double phase = kTwoPi * unit(rng);
      const bool perturbed = kind == GenKind::convex_perturbed;
      for (std::size_t k = 0; k < n; ++k) {
        const double t = offset - (static_cast<double>(k) + 0.8 * unit(rng)) * kTwoPi / n;
        const double r = perturbed ? 1.0 + 0.05 * std::cos(3.0 * t + phase) : 1.0;
        out.emplace_back(r * std::cos(t), r * std::sin(t));
      }
      break;
    }
    case GenKind::uniform_square:
      for (std::size_t k = 0; k < n; ++k) {
        const double x = unit(rng);
        out.emplace_back(x, unit(rng));
      }
      break;
    case GenKind::clustered: {
      const std::size_t clusters = std::min<std::size_t>(8, 1 + n / 64);
      std::vector<Point2> centers;
      for (std::size_t c = 0; c < clusters; ++c) {
        const double x = 0.15 + 0.7 * unit(rng);
        centers.emplace_back(x, 0.15 + 0.7 * unit(rng));
      }
      std::normal_distribution<double> spread(0.0, 0.04);
      std::uniform_int_distribution<std::size_t> which(0, clusters - 1);
      for (std::size_t k = 0; k < n; ++k) {
        const Point2& c = centers[which(rng)];
        const double x = c.x + spread(rng);
        out.emplace_back(x, c.y + spread(rng));
      }
      break;
    }
    case GenKind::collinear: {
      // Integer steps keep every point exactly on one line.
      std::uniform_int_distribution<int> step(1, 5);
      std::uniform_int_distribution<int> rise(-5, 5);
      std::uniform_int_distribution<int> origin(-10, 10);
      const double dx = step(rng), dy = rise(rng);
      const double ox = origin(rng), oy = origin(rng);
      for (std::size_t k = 0; k < n; ++k) {
        const double t = static_cast<double>(k);
        out.emplace_back(ox + t * dx, oy + t * dy);
      }
      break;
    }
  }
  return out;
}

std::size_t parse_count(const std::string& text) {
  const std::string t = trim(text);
  if (t.empty()) throw std::invalid_argument("empty count");
  std::size_t scale = 1;
  std::string digits = t;
  const char suffix = static_cast<char>(std::tolower(static_cast<unsigned char>(t.back())));
  if (suffix == 'k') scale = 1000;
  if (suffix == 'm') scale = 1000000;
  if (scale != 1) digits.pop_back();
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
  if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw std::invalid_argument("malformed count '" + text + "'");
  }
  return v * scale;
}

GenSpec parse_gen_spec(const std::string& spec) {
  const auto a = spec.find(':');
  const auto b = a == std::string::npos ? a : spec.find(':', a + 1);
  if (b == std::string::npos) throw std::invalid_argument("expected kind:n:seed, got '" + spec + "'");
  GenSpec out{gen_kind_from_string(spec.substr(0, a)), parse_count(spec.substr(a + 1, b - a - 1)), 0};
  const std::string seed = spec.substr(b + 1);
  const auto [ptr, ec] = std::from_chars(seed.data(), seed.data() + seed.size(), out.seed);
  if (seed.empty() || ec != std::errc() || ptr != seed.data() + seed.size()) {
    throw std::invalid_argument("malformed seed '" + seed + "'");
  }
  if (out.n == 0) throw std::invalid_argument("n must be >= 1");
  return out;
}

std::string input_digest(std::span<const Point2> points) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&](double v) {
    std::uint64_t bits;
    std::memcpy(&bits, &v, sizeof bits);
    for (int b = 0; b < 8; ++b) {
      h ^= (bits >> (8 * b)) & 0xffU;
      h *= 0x100000001b3ULL;
    }
  };
  for (const Point2& p : points) {
    mix(p.x);
    mix(p.y);
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

double round_sig(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return std::strtod(buf, nullptr);
}

nlohmann::ordered_json to_json(const RunRecord& r) {
  nlohmann::ordered_json j;
  j["problem"] = r.problem;
  j["n"] = r.n;
  j["input_digest"] = r.input_digest;
  j["eps"] = r.eps ? nlohmann::ordered_json(round_sig(*r.eps)) : nlohmann::ordered_json(nullptr);
  j["k"] = r.k ? nlohmann::ordered_json(*r.k) : nlohmann::ordered_json(nullptr);
  nlohmann::ordered_json sol;
  sol["indices"] = r.solution.indices;
  sol["k"] = r.solution.k;
  sol["eps"] = round_sig(r.solution.eps);
  sol["solver"] = r.solution.meta.solver;
  sol["decider_calls"] = r.solution.meta.decider_calls;
  sol["sample_size"] = r.solution.meta.sample_size;
  sol["extract_size"] = r.solution.meta.extract_size;
  j["solution"] = sol;
  j["backend"] = r.backend;
  j["apsp"] = r.apsp;
  j["seed"] = r.seed ? nlohmann::ordered_json(*r.seed) : nlohmann::ordered_json(nullptr);
  j["elapsed_ms"] = r.elapsed_ms;
  j["cost0_queries"] = r.cost0_queries;
  return j;
}

}  // namespace hullcoreset::io
