#include "config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "pmfp/errors.hpp"

namespace pmfp::cli {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

[[noreturn]] void fail(const std::string& source, std::size_t line, const std::string& msg) {
  throw ConfigError(source + ":" + std::to_string(line) + ": " + msg);
}

double parse_double(const std::string& source, std::size_t line, const std::string& key,
                    const std::string& value) {
  double out = 0.0;
  const char* begin = value.data();
  const char* end = begin + value.size();
  const auto res = std::from_chars(begin, end, out);
  if (res.ec != std::errc{} || res.ptr != end) {
    fail(source, line, key + ": expected a decimal number, got '" + value + "'");
  }
  return out;
}

std::uint64_t parse_count(const std::string& source, std::size_t line, const std::string& key,
                          const std::string& value) {
  // counts accept plain integers or integral decimals like 1e12
  const double d = parse_double(source, line, key, value);
  if (d < 0.0 || d != std::floor(d) || d > 9e18) {
    fail(source, line, key + ": expected a nonnegative integer, got '" + value + "'");
  }
  return static_cast<std::uint64_t>(d);
}

std::pair<double, double> parse_pair(const std::string& source, std::size_t line,
                                     const std::string& key, const std::string& value) {
  std::istringstream is(value);
  double a = 0.0, b = 0.0;
  std::string rest;
  if (!(is >> a >> b) || (is >> rest)) {
    fail(source, line, key + ": expected two decimals separated by whitespace, got '" + value + "'");
  }
  return {a, b};
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace

ProblemConfig parse_config_text(std::string_view text, const std::string& source_name) {
  ProblemConfig cfg;
  std::set<std::string> seen;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail(source_name, lineno, "expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) fail(source_name, lineno, "empty key");
    if (value.empty()) fail(source_name, lineno, key + ": empty value");
    if (key != "start" && !seen.insert(key).second) {
      fail(source_name, lineno, "duplicate key '" + key + "'");
    }

    if (key == "space.kind") {
      if (value != "max" && value != "metric_lift" && value != "tabulated") {
        fail(source_name, lineno, "space.kind must be max, metric_lift or tabulated");
      }
      cfg.space_kind = value;
    } else if (key == "space.metric") {
      if (value != "abs_diff" && value != "discrete") {
        fail(source_name, lineno, "space.metric must be abs_diff or discrete");
      }
      cfg.space_metric = value;
    } else if (key == "space.matrix") {
      cfg.space_matrix = value;
    } else if (key == "map.expr") {
      cfg.map_expr = value;
    } else if (key == "map.family") {
      if (value != "weighted_sum" && value != "constant") {
        fail(source_name, lineno, "map.family must be weighted_sum or constant");
      }
      cfg.map_family = value;
    } else if (key == "map.a") {
      cfg.map_a = parse_double(source_name, lineno, key, value);
    } else if (key == "map.b") {
      cfg.map_b = parse_double(source_name, lineno, key, value);
    } else if (key == "map.c") {
      cfg.map_c = parse_double(source_name, lineno, key, value);
    } else if (key == "start") {
      cfg.starts.push_back(parse_pair(source_name, lineno, key, value));
    } else if (key == "spec.mode") {
      if (value != "mixed_arg" && value != "self_displacement" && value != "cross_displacement") {
        fail(source_name, lineno,
             "spec.mode must be mixed_arg, self_displacement or cross_displacement");
      }
      cfg.spec_mode = value;
    } else if (key == "spec.k") {
      cfg.spec_k = parse_double(source_name, lineno, key, value);
    } else if (key == "spec.l") {
      cfg.spec_l = parse_double(source_name, lineno, key, value);
    } else if (key == "tol") {
      cfg.tol = parse_double(source_name, lineno, key, value);
    } else if (key == "axiom_tol") {
      cfg.axiom_tol = parse_double(source_name, lineno, key, value);
    } else if (key == "max_iters") {
      cfg.max_iters = static_cast<std::size_t>(parse_count(source_name, lineno, key, value));
    } else if (key == "divergence_cap") {
      cfg.divergence_cap = parse_double(source_name, lineno, key, value);
    } else if (key == "seed") {
      cfg.seed = parse_count(source_name, lineno, key, value);
    } else if (key == "sample.points") {
      cfg.sample_points = static_cast<std::size_t>(parse_count(source_name, lineno, key, value));
    } else if (key == "sample.quadruples") {
      cfg.sample_quadruples =
          static_cast<std::size_t>(parse_count(source_name, lineno, key, value));
    } else {
      fail(source_name, lineno, "unknown key '" + key + "'");
    }
  }
  return cfg;
}

ProblemConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str(), path.string());
}

std::string effective_config_text(const ProblemConfig& cfg) {
  std::ostringstream os;
  if (cfg.space_kind) {
    os << "space.kind = " << *cfg.space_kind << "\n";
    if (*cfg.space_kind == "metric_lift") os << "space.metric = " << cfg.space_metric << "\n";
    if (cfg.space_matrix) os << "space.matrix = " << *cfg.space_matrix << "\n";
  }
  if (cfg.map_expr) os << "map.expr = " << *cfg.map_expr << "\n";
  if (cfg.map_family) {
    os << "map.family = " << *cfg.map_family << "\n";
    if (*cfg.map_family == "weighted_sum") {
      os << "map.a = " << format_double(cfg.map_a) << "\n";
      os << "map.b = " << format_double(cfg.map_b) << "\n";
    }
    os << "map.c = " << format_double(cfg.map_c) << "\n";
  }
  for (const auto& [a, b] : cfg.starts) {
    os << "start = " << format_double(a) << " " << format_double(b) << "\n";
  }
  if (cfg.spec_mode) {
    os << "spec.mode = " << *cfg.spec_mode << "\n";
    os << "spec.k = " << format_double(cfg.spec_k) << "\n";
    os << "spec.l = " << format_double(cfg.spec_l) << "\n";
  }
  os << "tol = " << format_double(cfg.tol) << "\n";
  os << "axiom_tol = " << format_double(cfg.axiom_tol) << "\n";
  os << "max_iters = " << cfg.max_iters << "\n";
  os << "divergence_cap = " << format_double(cfg.divergence_cap) << "\n";
  os << "seed = " << cfg.seed << "\n";
  os << "sample.points = " << cfg.sample_points << "\n";
  os << "sample.quadruples = " << cfg.sample_quadruples << "\n";
  return os.str();
}

PartialMetricSpace build_space(const ProblemConfig& cfg, bool validated) {
  if (!cfg.space_kind) throw ConfigError("config needs a space section (space.kind)");
  const std::string& kind = *cfg.space_kind;
  if (kind == "max") return PartialMetricSpace::max_halfline();
  if (kind == "metric_lift") {
    return PartialMetricSpace::metric_lift(base_metric_from_name(cfg.space_metric));
  }
  if (!cfg.space_matrix) throw ConfigError("tabulated space needs space.matrix = <file>");
  Matrix m = load_matrix(*cfg.space_matrix);
  return validated ? PartialMetricSpace::tabulated(std::move(m))
                   : PartialMetricSpace::tabulated_unchecked(std::move(m));
}

CoupledMap build_map(const ProblemConfig& cfg) {
  if (cfg.map_expr && cfg.map_family) {
    throw ConfigError("give either map.expr or map.family, not both");
  }
  if (cfg.map_expr) {
    try {
      return CoupledMap::from_expr(*cfg.map_expr);
    } catch (const ParseError& e) {
      throw ConfigError(std::string("map.expr: ") + e.what());
    }
  }
  if (cfg.map_family) {
    if (*cfg.map_family == "weighted_sum") {
      return CoupledMap::weighted_sum(cfg.map_a, cfg.map_b, cfg.map_c);
    }
    return CoupledMap::constant(cfg.map_c);
  }
  throw ConfigError("config needs a map section (map.expr or map.family)");
}

std::optional<ContractionSpec> build_spec(const ProblemConfig& cfg) {
  if (!cfg.spec_mode) return std::nullopt;
  ContractionSpec spec{mode_from_name(*cfg.spec_mode), cfg.spec_k, cfg.spec_l};
  try {
    validate_spec(spec);
  } catch (const SpecInvalidError& e) {
    throw ConfigError(std::string("spec: ") + e.what());
  }
  return spec;
}

}  // namespace pmfp::cli
