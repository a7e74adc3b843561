#include <stdexcept>

#include <json.hpp>

#include "monodir/synth.hpp"

namespace monodir {

using nlohmann::json;

namespace {

json to_json(const MaternParams& p) {
  return {{"sigma2", p.sigma2}, {"nu_smooth", p.nu}, {"rho", p.rho}, {"lambda0", p.lambda0}};
}

MaternParams matern_from(const json& j) {
  MaternParams p;
  p.sigma2 = j.value("sigma2", p.sigma2);
  p.nu = j.value("nu_smooth", p.nu);
  p.rho = j.value("rho", p.rho);
  p.lambda0 = j.value("lambda0", p.lambda0);
  validate(p);
  return p;
}

json angle_or_random(const std::optional<double>& v) { return v ? json(*v) : json("random"); }

std::optional<double> angle_from(const json& j, const char* key) {
  if (!j.contains(key)) return std::nullopt;
  const auto& v = j.at(key);
  if (v.is_string()) {
    if (v.get<std::string>() != "random") throw std::invalid_argument(std::string(key) + ": expected number or \"random\"");
    return std::nullopt;
  }
  return v.get<double>();
}

}  // namespace

std::string spec_to_json(const PsdSpec& spec) {
  json j = std::visit(
      [](const auto& s) -> json {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, ShiftedMatern>) {
          json o = to_json(s.params);
          o["variant"] = "ShiftedMatern";
          o["D"] = {{s.D[0], s.D[1]}, {s.D[2], s.D[3]}};
          return o;
        } else if constexpr (std::is_same_v<T, Unidirectional1D>) {
          json o = to_json(s.params);
          o["variant"] = "Unidirectional1D";
          o["direction"] = angle_or_random(s.direction);
          o["band"] = {s.band_lo, s.band_hi};
          return o;
        } else if constexpr (std::is_same_v<T, PlaneWave>) {
          return {{"variant", "PlaneWave"}, {"A", s.amplitude}, {"lambda0", s.lambda0},
                  {"phase", angle_or_random(s.phase)}, {"direction", angle_or_random(s.direction)}};
        } else {
          return {{"variant", "SeparableMatern"}, {"x1", to_json(s.x1)}, {"x2", to_json(s.x2)}};
        }
      },
      spec);
  return j.dump(2);
}

PsdSpec spec_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
    const std::string variant = j.at("variant").get<std::string>();
    if (variant == "ShiftedMatern") {
      ShiftedMatern s;
      s.params = matern_from(j);
      if (j.contains("D")) {
        const auto& D = j.at("D");
        s.D = {D.at(0).at(0).get<double>(), D.at(0).at(1).get<double>(), D.at(1).at(0).get<double>(),
               D.at(1).at(1).get<double>()};
      }
      validate(s);
      return s;
    }
    if (variant == "Unidirectional1D") {
      Unidirectional1D s;
      s.params = matern_from(j);
      s.direction = angle_from(j, "direction");
      if (j.contains("band")) {
        s.band_lo = j.at("band").at(0).get<double>();
        s.band_hi = j.at("band").at(1).get<double>();
      }
      validate(s);
      return s;
    }
    if (variant == "PlaneWave") {
      PlaneWave s;
      s.amplitude = j.value("A", s.amplitude);
      s.lambda0 = j.value("lambda0", s.lambda0);
      s.phase = angle_from(j, "phase");
      s.direction = angle_from(j, "direction");
      validate(s);
      return s;
    }
    if (variant == "SeparableMatern") {
      return SeparableMatern{matern_from(j.value("x1", json::object())), matern_from(j.value("x2", json::object()))};
    }
    throw std::invalid_argument("unknown spec variant '" + variant + "'");
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed spec: ") + e.what());
  }
}

}  // namespace monodir
