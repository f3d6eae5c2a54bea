#pragma once

#include <json.hpp>

#include "wavenum/integral.hpp"
#include "wavenum/periodic_seq.hpp"
#include "wavenum/polar_sum.hpp"

namespace wavenum {

/// Rounds to 12 significant digits (and normalizes -0 to 0) so emitted
/// JSON and text are byte-stable.
double round_sig(double x, int digits = 12);

/// {"period": n, "values": [[re, im], ...]} with values rounded.
nlohmann::json to_json(const PeriodicSeq& s);
PeriodicSeq seq_from_json(const nlohmann::json& j);

/// {"lo": .., "hi": .., "values": [[re, im], ...]}.
nlohmann::json to_json(const WindowedSeq& w);
WindowedSeq window_from_json(const nlohmann::json& j);

/// {"amplitude": <PeriodicSeq>, "carrier": "w(f,g)"}.
nlohmann::json to_json(const PolarForm& p);
PolarForm polar_from_json(const nlohmann::json& j);

}  // namespace wavenum
