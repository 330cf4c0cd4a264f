#include "illposed/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "illposed/errors.hpp"

namespace illposed {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::size_t edit_distance(const std::string& a, const std::string& b) {
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t up = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diag = up;
    }
  }
  return row[b.size()];
}

[[noreturn]] void bad_value(const ConfigEntry& e, const std::string& what) {
  throw ConfigError(e.origin + ": " + e.key + " = '" + e.value + "': " + what);
}

int as_int(const ConfigEntry& e) {
  int v = 0;
  const auto* end = e.value.data() + e.value.size();
  const auto [ptr, ec] = std::from_chars(e.value.data(), end, v);
  if (ec != std::errc{} || ptr != end) bad_value(e, "expected an integer");
  return v;
}

double as_double(const ConfigEntry& e) {
  if (e.value == "inf" || e.value == "infinity") return kInf;
  try {
    std::size_t used = 0;
    const double v = std::stod(e.value, &used);
    if (used != e.value.size()) bad_value(e, "expected a number");
    return v;
  } catch (const std::logic_error&) {
    bad_value(e, "expected a number");
  }
}

}  // namespace

std::vector<ConfigEntry> parse_config_text(const std::string& text, const std::string& source) {
  std::vector<ConfigEntry> out;
  std::istringstream in(text);
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string where = source + ":" + std::to_string(lineno);
    const auto hash = line.find_first_of("#;");
    const std::string body = trim(std::string_view(line).substr(0, hash));
    if (body.empty()) continue;
    if (body.front() == '[') {
      if (body.back() != ']' || body.size() < 3) throw ConfigError(where + ": malformed section header");
      section = trim(std::string_view(body).substr(1, body.size() - 2));
      continue;
    }
    const auto eq = body.find('=');
    if (eq == std::string::npos) throw ConfigError(where + ": expected key = value");
    const std::string key = trim(std::string_view(body).substr(0, eq));
    const std::string value = trim(std::string_view(body).substr(eq + 1));
    if (key.empty()) throw ConfigError(where + ": empty key");
    out.push_back({section.empty() ? key : section + "." + key, value, where});
  }
  return out;
}

std::vector<ConfigEntry> parse_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str(), path.string());
}

ConfigEntry parse_override(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos) throw ConfigError("--set expects key=value, got '" + text + "'");
  ConfigEntry e{trim(std::string_view(text).substr(0, eq)), trim(std::string_view(text).substr(eq + 1)), "--set"};
  if (e.key.empty()) throw ConfigError("--set: empty key");
  return e;
}

const std::vector<std::string>& known_config_keys() {
  static const std::vector<std::string> keys{
      "data.s",          "data.p",         "data.j_max_1d",      "data.j_max_2d",   "grid1d.points",
      "grid1d.half_width", "grid2d.points", "grid2d.half_width", "run.n",           "run.jobs",
      "cascade.n",       "cascade.t",      "cascade.rhs",        "cascade.points",  "cascade.j_max",
      "interp.upsample_1d", "interp.stencil_1d", "interp.upsample_2d", "interp.stencil_2d"};
  return keys;
}

std::string nearest_config_key(const std::string& key) {
  const auto& keys = known_config_keys();
  return *std::min_element(keys.begin(), keys.end(), [&](const std::string& a, const std::string& b) {
    return edit_distance(key, a) < edit_distance(key, b);
  });
}

std::vector<int> parse_int_list(const std::string& text) {
  const auto fail = [&] { throw ConfigError("bad integer list '" + text + "' (use 8..12 or 6,8,10)"); };
  const auto to_int = [&](const std::string& s) {
    int v = 0;
    const std::string t = trim(s);
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size()) fail();
    return v;
  };
  std::vector<int> out;
  if (const auto dots = text.find(".."); dots != std::string::npos) {
    const int a = to_int(text.substr(0, dots));
    const int b = to_int(text.substr(dots + 2));
    if (b < a) fail();
    for (int n = a; n <= b; ++n) out.push_back(n);
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(to_int(item));
  if (out.empty()) fail();
  return out;
}

void apply_config(ScenarioConfig& cfg, const std::vector<ConfigEntry>& entries) {
  for (const auto& e : entries) {
    const std::string& k = e.key;
    if (k == "data.s") {
      cfg.s = as_double(e);
    } else if (k == "data.p") {
      cfg.p = as_double(e);
    } else if (k == "data.j_max_1d") {
      cfg.j_max_1d = as_int(e);
    } else if (k == "data.j_max_2d") {
      cfg.j_max_2d = as_int(e);
    } else if (k == "grid1d.points") {
      cfg.points_1d = as_int(e);
    } else if (k == "grid1d.half_width") {
      cfg.half_width_1d = as_double(e);
    } else if (k == "grid2d.points") {
      cfg.points_2d = as_int(e);
    } else if (k == "grid2d.half_width") {
      cfg.half_width_2d = as_double(e);
    } else if (k == "run.n") {
      try {
        cfg.n_list = parse_int_list(e.value);
      } catch (const ConfigError& err) {
        bad_value(e, err.what());
      }
    } else if (k == "run.jobs") {
      cfg.jobs = as_int(e);
    } else if (k == "cascade.n") {
      cfg.cascade_n = as_int(e);
    } else if (k == "cascade.t") {
      cfg.cascade_t = as_double(e);
    } else if (k == "cascade.rhs") {
      if (e.value != "identity" && e.value != "zero") bad_value(e, "expected identity or zero");
      cfg.cascade_rhs = e.value;
    } else if (k == "cascade.points") {
      cfg.cascade_points = as_int(e);
    } else if (k == "cascade.j_max") {
      cfg.cascade_j_max = as_int(e);
    } else if (k == "interp.upsample_1d") {
      cfg.interp_1d.upsample = as_int(e);
    } else if (k == "interp.stencil_1d") {
      cfg.interp_1d.stencil = as_int(e);
    } else if (k == "interp.upsample_2d") {
      cfg.interp_2d.upsample = as_int(e);
    } else if (k == "interp.stencil_2d") {
      cfg.interp_2d.stencil = as_int(e);
    } else {
      throw ConfigError(e.origin + ": unknown key '" + k + "' (did you mean '" + nearest_config_key(k) + "'?)");
    }
  }
}

}  // namespace illposed
