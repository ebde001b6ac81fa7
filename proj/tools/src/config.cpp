#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "e7lift/errors.hpp"
#include "e7lift_cli/commands.hpp"

namespace e7lift::cli {

namespace {

std::string trim(std::string s) {
  const auto ws = [](unsigned char c) { return std::isspace(c); };
  s.erase(s.begin(), std::find_if_not(s.begin(), s.end(), ws));
  s.erase(std::find_if_not(s.rbegin(), s.rend(), ws).base(), s.end());
  return s;
}

long parse_long(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    const long x = std::stol(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ConfigError("bad integer for " + key + ": '" + v + "'");
  }
}

}  // namespace

void RunConfig::apply(const std::string& key, const std::string& value) {
  const std::string v = trim(value);
  if (key == "newform") {
    newform = v;
  } else if (key == "siegel") {
    siegel.push_back(v);
  } else if (key == "det_bound") {
    det_bound = parse_long(key, v);
  } else if (key == "trace_bound") {
    trace_bound = parse_long(key, v);
  } else if (key == "suite") {
    suite = v;
  } else if (key == "out") {
    out = v;
  } else if (key == "seed") {
    const long s = parse_long(key, v);
    if (s < 0) throw ConfigError("seed must be non-negative");
    seed = static_cast<std::uint64_t>(s);
  } else if (key == "precision") {
    const long p = parse_long(key, v);
    if (p < 53 || p > 100000) throw ConfigError("precision must be in [53, 100000] bits");
    precision = static_cast<unsigned>(p);
  } else if (key == "trials") {
    trials = parse_long(key, v);
    if (trials < 1) throw ConfigError("trials must be positive");
  } else {
    throw ConfigError("unknown config key '" + key + "'");
  }
}

RunConfig RunConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  RunConfig cfg;
  std::string line;
  for (int n = 1; std::getline(in, line); ++n) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(path + ":" + std::to_string(n) + ": expected key=value");
    try {
      cfg.apply(trim(line.substr(0, eq)), line.substr(eq + 1));
    } catch (const ConfigError& e) {
      throw ConfigError(path + ":" + std::to_string(n) + ": " + e.what());
    }
  }
  return cfg;
}

std::string RunConfig::canonical() const {
  std::vector<std::string> lines;
  lines.push_back("newform=" + newform);
  for (const auto& s : siegel) lines.push_back("siegel=" + s);
  if (det_bound) lines.push_back("det_bound=" + std::to_string(*det_bound));
  if (trace_bound) lines.push_back("trace_bound=" + std::to_string(*trace_bound));
  lines.push_back("suite=" + suite);
  lines.push_back("seed=" + std::to_string(seed));
  lines.push_back("precision=" + std::to_string(precision));
  lines.push_back("trials=" + std::to_string(trials));
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

std::string config_hash(const RunConfig& cfg) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : cfg.canonical()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

nlohmann::json provenance(const RunConfig& cfg) {
  return {{"tool", "e7lift"}, {"version", E7LIFT_VERSION}, {"config_hash", config_hash(cfg)}, {"seed", cfg.seed}};
}

std::vector<std::string> siegel_paths(const RunConfig& cfg) {
  if (!cfg.siegel.empty()) return cfg.siegel;
  std::vector<std::string> out;
  const char* dir = std::getenv("E7LIFT_SIEGEL_DIR");
  if (!dir || !*dir) return out;
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw ConfigError(std::string("E7LIFT_SIEGEL_DIR is not a directory: ") + dir);
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().extension() == ".tbl") out.push_back(e.path().string());
  }
  std::sort(out.begin(), out.end());
  return out;
}

Prepared prepare(const RunConfig& cfg, bool need_newform) {
  Prepared p;
  if (need_newform && cfg.newform.empty()) throw ConfigError("no newform given (--newform or newform=)");
  try {
    if (!cfg.newform.empty()) p.newform = load_newform(cfg.newform);
    for (const auto& path : siegel_paths(cfg)) p.provider.load_file(path);
  } catch (const DataError& e) {
    throw ConfigError(e.what());
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed JSON: ") + e.what());
  }
  return p;
}

}  // namespace e7lift::cli
