#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "tracepow/applications.hpp"
#include "tracepow/estimation.hpp"
#include "tracepow/multi_state.hpp"

namespace tracepow {

using json = nlohmann::json;

// Spectrum <-> {"eigenvalues": ["num/den", ...]}
json spectrum_to_json(const Spectrum& s);
Spectrum spectrum_from_json(const json& j);

// Series <-> {"kind": ..., "values": ["num/den", ...], "values_float": [...]}
json series_to_json(const PowerSumSeries& p);
PowerSumSeries series_from_json(const json& j);

json estimate_to_json(const EstimateSeries& e);
EstimateSeries estimate_from_json(const json& j, const Spectrum& s);

// Weights in the same envelope as their spectrum.
json weights_to_json(const Spectrum& s, const ObservableWeights& w);

// DenseHermitian <-> {"dim": d, "re": [...], "im": [...]}, row-major.
json hermitian_to_json(const DenseHermitian& m);
DenseHermitian hermitian_from_json(const json& j);

// Cross-trace grid: CSV with header "i,j,value_num,value_den,value_float".
void grid_to_csv(const CrossTraceGrid& grid, std::ostream& out);
json grid_to_json(const CrossTraceGrid& grid);

}  // namespace tracepow
