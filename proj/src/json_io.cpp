#include "wavenum/json_io.hpp"

#include <cmath>

#include "wavenum/expr.hpp"

namespace wavenum {

double round_sig(double x, int digits) {
  if (x == 0.0 || !std::isfinite(x)) return x == 0.0 ? 0.0 : x;
  const double mag = std::pow(10.0, digits - 1 - static_cast<int>(std::floor(
                                                     std::log10(std::abs(x)))));
  const double r = std::round(x * mag) / mag;
  return r == 0.0 ? 0.0 : r;
}

namespace {

nlohmann::json values_to_json(const std::vector<Complex>& values) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Complex& z : values) {
    arr.push_back({round_sig(z.real()), round_sig(z.imag())});
  }
  return arr;
}

std::vector<Complex> values_from_json(const nlohmann::json& arr) {
  std::vector<Complex> out;
  out.reserve(arr.size());
  for (const auto& pair : arr) {
    out.emplace_back(pair.at(0).get<double>(), pair.at(1).get<double>());
  }
  return out;
}

}  // namespace

nlohmann::json to_json(const PeriodicSeq& s) {
  return {{"period", s.period()}, {"values", values_to_json(s.values())}};
}

PeriodicSeq seq_from_json(const nlohmann::json& j) {
  PeriodicSeq s(values_from_json(j.at("values")));
  if (j.at("period").get<std::size_t>() != s.period()) {
    throw ArgumentError("PeriodicSeq JSON: declared period does not match value count");
  }
  return s;
}

nlohmann::json to_json(const WindowedSeq& w) {
  return {{"lo", w.lo}, {"hi", w.hi}, {"values", values_to_json(w.values)}};
}

WindowedSeq window_from_json(const nlohmann::json& j) {
  return WindowedSeq(j.at("lo").get<std::int64_t>(), j.at("hi").get<std::int64_t>(),
                     values_from_json(j.at("values")));
}

nlohmann::json to_json(const PolarForm& p) {
  return {{"amplitude", to_json(p.amplitude)}, {"carrier", p.carrier.str()}};
}

PolarForm polar_from_json(const nlohmann::json& j) {
  return {seq_from_json(j.at("amplitude")), parse_wave(j.at("carrier").get<std::string>())};
}

}  // namespace wavenum
