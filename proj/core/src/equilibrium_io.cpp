#include "vplin/equilibrium_io.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace vplin {

namespace {

using nlohmann::json;

// monotone piecewise-linear table lookup; mirrored to negative r
struct Table {
  std::vector<double> r, v;
  double operator()(double x) const {
    x = std::fabs(x);
    if (r.empty()) throw DomainError("custom equilibrium: empty table");
    if (x <= r.front()) return v.front();
    if (x >= r.back()) return v.back();
    auto it = std::upper_bound(r.begin(), r.end(), x);
    const std::size_t i = it - r.begin();
    const double t = (x - r[i - 1]) / (r[i] - r[i - 1]);
    return (1.0 - t) * v[i - 1] + t * v[i];
  }
};

Table load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("custom equilibrium: cannot open " + path);
  Table tab;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ls(line);
    double r, v;
    if (ls >> r >> v) {
      tab.r.push_back(r);
      tab.v.push_back(v);
    }
  }
  if (tab.r.size() < 2)
    throw DomainError("custom equilibrium: table needs at least two rows");
  return tab;
}

}  // namespace

RadialEquilibrium parse_equilibrium(const std::string& json_text,
                                    const std::string& base_dir) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw DomainError(std::string("equilibrium file: ") + e.what());
  }
  if (!j.contains("kind"))
    throw DomainError("equilibrium file: missing \"kind\"");
  const json& kind = j["kind"];
  if (kind.is_string() && kind == "maxwellian")
    return RadialEquilibrium::maxwellian();
  if (kind.is_object() && kind.contains("generalized_poisson")) {
    const int jj = kind["generalized_poisson"].get<int>();
    return RadialEquilibrium::generalized_poisson(jj);
  }
  if (kind.is_string() && kind == "custom") {
    if (!j.contains("theta") || !j.contains("d") || !j.contains("data"))
      throw DomainError("custom equilibrium needs \"theta\", \"d\", \"data\"");
    const double theta = j["theta"].get<double>();
    const double d = j["d"].get<double>();
    std::string data = j["data"].get<std::string>();
    if (!std::filesystem::path(data).is_absolute())
      data = (std::filesystem::path(base_dir) / data).string();
    auto tab = std::make_shared<Table>(load_table(data));
    auto m0 = [tab](Complex z) -> Complex {
      if (std::fabs(z.imag()) > 0.0)
        throw DomainError("tabulated equilibrium: real-axis evaluation only");
      return Complex((*tab)(z.real()), 0.0);
    };
    return RadialEquilibrium::custom(m0, theta, d);
  }
  throw DomainError("equilibrium file: unrecognized \"kind\"");
}

RadialEquilibrium load_equilibrium(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open equilibrium file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_equilibrium(ss.str(),
                           std::filesystem::path(path).parent_path().string());
}

}  // namespace vplin
