#include "tracepow/serialization.hpp"

#include <ostream>

namespace tracepow {

namespace {

json rationals_to_json(const std::vector<Rational>& values) {
    json arr = json::array();
    for (const auto& v : values) arr.push_back(fraction_string(v));
    return arr;
}

std::vector<Rational> rationals_from_json(const json& arr) {
    std::vector<Rational> out;
    out.reserve(arr.size());
    for (const auto& v : arr) out.push_back(parse_rational(v.get<std::string>()));
    return out;
}

std::string kind_name(SeriesKind kind) {
    switch (kind) {
        case SeriesKind::exact: return "exact";
        case SeriesKind::estimated: return "estimated";
        case SeriesKind::extended: return "extended";
    }
    return "exact";
}

SeriesKind kind_from_name(const std::string& name) {
    if (name == "estimated") return SeriesKind::estimated;
    if (name == "extended") return SeriesKind::extended;
    return SeriesKind::exact;
}

}  // namespace

json spectrum_to_json(const Spectrum& s) {
    return json{{"eigenvalues", rationals_to_json(s.eigenvalues())}};
}

Spectrum spectrum_from_json(const json& j) {
    return Spectrum(rationals_from_json(j.at("eigenvalues")));
}

json series_to_json(const PowerSumSeries& p) {
    json floats = json::array();
    for (const auto& v : p.values) floats.push_back(to_double(v));
    return json{{"kind", kind_name(p.kind)},
                {"values", rationals_to_json(p.values)},
                {"values_float", floats}};
}

PowerSumSeries series_from_json(const json& j) {
    PowerSumSeries p;
    p.values = rationals_from_json(j.at("values"));
    p.kind = kind_from_name(j.value("kind", "exact"));
    return p;
}

json estimate_to_json(const EstimateSeries& e) {
    json b = json::array();
    for (const auto& c : e.b.coeffs) b.push_back(fraction_string(c));
    return json{{"config",
                 {{"k", e.config.k},
                  {"epsilon", e.config.epsilon},
                  {"delta", e.config.delta},
                  {"t", e.config.t},
                  {"seed", e.config.seed},
                  {"exact_oracle", e.config.exact_oracle},
                  {"scenario_runs", e.config.scenario_runs}}},
                {"samples_per_moment", e.samples_per_moment},
                {"q", series_to_json(e.q)},
                {"b", b}};
}

EstimateSeries estimate_from_json(const json& j, const Spectrum&) {
    EstimateSeries e;
    const json& c = j.at("config");
    e.config.k = c.at("k").get<int>();
    e.config.epsilon = c.at("epsilon").get<double>();
    e.config.delta = c.at("delta").get<double>();
    e.config.t = c.at("t").get<int>();
    e.config.seed = c.at("seed").get<std::uint64_t>();
    e.config.exact_oracle = c.at("exact_oracle").get<bool>();
    e.config.scenario_runs = c.at("scenario_runs").get<bool>();
    e.samples_per_moment = j.at("samples_per_moment").get<std::uint64_t>();
    e.q = series_from_json(j.at("q"));
    e.b.coeffs = rationals_from_json(j.at("b"));
    return e;
}

json weights_to_json(const Spectrum& s, const ObservableWeights& w) {
    return json{{"spectrum", spectrum_to_json(s)},
                {"weights", rationals_to_json(w.weights)},
                {"inf_norm", fraction_string(w.inf_norm)}};
}

json hermitian_to_json(const DenseHermitian& m) {
    json re = json::array(), im = json::array();
    for (const auto& z : m.entries) {
        re.push_back(z.real());
        im.push_back(z.imag());
    }
    return json{{"dim", m.dim}, {"re", re}, {"im", im}};
}

DenseHermitian hermitian_from_json(const json& j) {
    const int d = j.at("dim").get<int>();
    const auto& re = j.at("re");
    const auto& im = j.at("im");
    if (re.size() != im.size()) {
        throw std::invalid_argument("hermitian json: re/im length mismatch");
    }
    std::vector<std::complex<double>> entries;
    entries.reserve(re.size());
    for (size_t i = 0; i < re.size(); ++i) {
        entries.emplace_back(re[i].get<double>(), im[i].get<double>());
    }
    return DenseHermitian(d, std::move(entries));
}

void grid_to_csv(const CrossTraceGrid& grid, std::ostream& out) {
    out << "i,j,value_num,value_den,value_float\n";
    char buf[64];
    for (int i = 1; i <= grid.k; ++i) {
        for (int j = 1; j <= grid.l; ++j) {
            const Rational& v = grid.at(i, j);
            std::snprintf(buf, sizeof(buf), "%.17g", to_double(v));
            out << i << ',' << j << ',' << v.get_num().get_str() << ','
                << v.get_den().get_str() << ',' << buf << '\n';
        }
    }
}

json grid_to_json(const CrossTraceGrid& grid) {
    json rows = json::array();
    for (int i = 1; i <= grid.k; ++i) {
        json row = json::array();
        for (int j = 1; j <= grid.l; ++j) row.push_back(fraction_string(grid.at(i, j)));
        rows.push_back(std::move(row));
    }
    return json{{"k", grid.k},
                {"l", grid.l},
                {"dimension", grid.dimension},
                {"values", rows},
                {"rho_marginal", series_to_json(grid.rho_marginal)},
                {"sigma_marginal", series_to_json(grid.sigma_marginal)}};
}

}  // namespace tracepow
