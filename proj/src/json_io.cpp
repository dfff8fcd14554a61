#include "scwave/json_io.hpp"

#include "scwave/errors.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>

namespace scwave {

namespace {

std::uint32_t get_u32(const Json& j, const std::string& key) {
    const Json& v = j.at(key);
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0 ||
        v.get<std::int64_t>() > std::numeric_limits<std::uint32_t>::max()) {
        throw ValidationError(key, "must be a non-negative integer");
    }
    return static_cast<std::uint32_t>(v.get<std::int64_t>());
}

double get_double(const Json& j, const std::string& key) {
    const Json& v = j.at(key);
    if (!v.is_number()) {
        throw ValidationError(key, "must be a number");
    }
    return v.get<double>();
}

std::string get_string(const Json& j, const std::string& key) {
    const Json& v = j.at(key);
    if (!v.is_string()) {
        throw ValidationError(key, "must be a string");
    }
    return v.get<std::string>();
}

} // namespace

Json spec_to_json(const WaveformSpec& spec) {
    Json j;
    j["kind"] = to_string(spec.kind);
    j["variant"] = to_string(spec.variant);
    j["n_fft"] = spec.n_fft;
    j["n_data"] = spec.n_data;
    j["g"] = spec.g;
    j["n_sub"] = spec.n_sub;
    j["k_active"] = spec.k_active;
    j["m_order"] = spec.m_order;
    j["m_a"] = spec.m_a;
    j["m_b"] = spec.m_b;
    j["delta_f"] = spec.delta_f;
    j["t_cp"] = spec.t_cp;
    j["t_sym"] = spec.t_sym;
    return j;
}

WaveformSpec spec_from_json(const Json& j) {
    if (!j.is_object()) {
        throw ValidationError("spec", "must be an object");
    }
    WaveformSpec spec;
    bool have_n_sub = false;
    bool have_g = false;

    if (j.contains("preset")) {
        const std::string preset = get_string(j, "preset");
        if (preset != "ieee80211a") {
            throw ValidationError("preset", "unknown preset '" + preset + "'");
        }
        WaveformKind kind = WaveformKind::ofdm;
        if (j.contains("kind")) {
            kind = waveform_kind_from_string(get_string(j, "kind"));
        }
        IxsVariant variant = IxsVariant::original;
        if (j.contains("variant")) {
            variant = ixs_variant_from_string(get_string(j, "variant"));
        }
        spec = ieee80211a_preset(kind, variant);
        have_n_sub = true;
        have_g = true;
    }

    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (key == "preset") {
            continue;
        } else if (key == "kind") {
            spec.kind = waveform_kind_from_string(get_string(j, key));
        } else if (key == "variant") {
            spec.variant = ixs_variant_from_string(get_string(j, key));
        } else if (key == "n_fft") {
            spec.n_fft = get_u32(j, key);
        } else if (key == "n_data") {
            spec.n_data = get_u32(j, key);
        } else if (key == "g") {
            spec.g = get_u32(j, key);
            have_g = true;
        } else if (key == "n_sub") {
            spec.n_sub = get_u32(j, key);
            have_n_sub = true;
        } else if (key == "k_active") {
            spec.k_active = get_u32(j, key);
        } else if (key == "m_order") {
            spec.m_order = get_u32(j, key);
        } else if (key == "m_a") {
            spec.m_a = get_u32(j, key);
        } else if (key == "m_b") {
            spec.m_b = get_u32(j, key);
        } else if (key == "delta_f") {
            spec.delta_f = get_double(j, key);
        } else if (key == "t_cp") {
            spec.t_cp = get_double(j, key);
        } else if (key == "t_sym") {
            spec.t_sym = get_double(j, key);
        } else {
            throw ValidationError(key, "unknown waveform spec field");
        }
    }

    // Convenience: derive whichever of g/n_sub was omitted.
    if (spec.uses_index_modulation()) {
        if (!have_n_sub && have_g && spec.g > 0 && spec.n_data % spec.g == 0) {
            spec.n_sub = spec.n_data / spec.g;
        } else if (!have_g && have_n_sub && spec.n_sub > 0 && spec.n_data % spec.n_sub == 0) {
            spec.g = spec.n_data / spec.n_sub;
        } else if (!have_g && !have_n_sub) {
            spec.g = 1;
            spec.n_sub = spec.n_data;
        }
    }

    spec.validate();
    return spec;
}

Json scenario_to_json(const ComparisonScenario& scenario) {
    Json j;
    j["mode"] = to_string(scenario.mode);
    j["pool_set"] = to_string(scenario.pool_set);
    Json waveforms = Json::array();
    for (const ScenarioEntry& entry : scenario.entries) {
        Json e;
        if (!entry.label.empty()) {
            e["label"] = entry.label;
        }
        e["spec"] = spec_to_json(entry.spec);
        if (entry.measured) {
            e["measured"] = Json{{"t_comp_tx_s", entry.measured->t_comp_tx_s},
                                 {"t_comp_rx_s", entry.measured->t_comp_rx_s}};
        }
        waveforms.push_back(std::move(e));
    }
    j["waveforms"] = std::move(waveforms);
    return j;
}

ComparisonScenario scenario_from_json(const Json& j) {
    if (!j.is_object()) {
        throw ValidationError("scenario", "must be an object");
    }
    ComparisonScenario scenario;
    if (j.contains("mode")) {
        scenario.mode = comparison_mode_from_string(get_string(j, "mode"));
    }
    if (j.contains("pool_set")) {
        scenario.pool_set = pool_set_from_string(get_string(j, "pool_set"));
    }
    if (!j.contains("waveforms") || !j.at("waveforms").is_array()) {
        throw ValidationError("waveforms", "must be an array of entries");
    }
    for (const Json& e : j.at("waveforms")) {
        if (!e.is_object() || !e.contains("spec")) {
            throw ValidationError("waveforms", "every entry needs a 'spec' object");
        }
        ScenarioEntry entry;
        if (e.contains("label")) {
            entry.label = get_string(e, "label");
        }
        entry.spec = spec_from_json(e.at("spec"));
        if (e.contains("measured")) {
            const Json& m = e.at("measured");
            if (!m.is_object()) {
                throw ValidationError("measured", "must be an object");
            }
            entry.measured = MeasuredRuntimes{get_double(m, "t_comp_tx_s"),
                                              get_double(m, "t_comp_rx_s")};
        }
        scenario.entries.push_back(std::move(entry));
    }
    return scenario;
}

ComparisonScenario load_scenario_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open scenario file '" + path + "'");
    }
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& e) {
        throw ValidationError("scenario", std::string("JSON parse error: ") + e.what());
    }
    return scenario_from_json(j);
}

Json report_to_json(const ComparisonReport& report) {
    Json j;
    j["mode"] = to_string(report.mode);
    j["pool_set"] = to_string(report.pool_set);
    j["t_sym_s"] = report.t_sym_s;
    if (report.pool_tx_ips) {
        j["pool_tx_ips"] = *report.pool_tx_ips;
    }
    if (report.pool_rx_ips) {
        j["pool_rx_ips"] = *report.pool_rx_ips;
    }
    Json rows = Json::array();
    for (const ComparisonRow& row : report.rows) {
        Json r;
        r["label"] = row.label;
        r["kind"] = to_string(row.kind);
        r["variant"] = to_string(row.variant);
        r["bits"] = row.bits;
        r["bandwidth_hz"] = row.bandwidth_hz;
        if (row.tx_complexity) {
            r["tx_complexity"] = *row.tx_complexity;
        }
        if (row.rx_complexity) {
            r["rx_complexity"] = *row.rx_complexity;
        }
        if (row.required_power_tx_ips) {
            r["required_power_tx_ips"] = *row.required_power_tx_ips;
        }
        if (row.required_power_rx_ips) {
            r["required_power_rx_ips"] = *row.required_power_rx_ips;
        }
        r["metrics"] = Json{{"t_comp_tx_s", row.metrics.t_comp_tx_s},
                            {"t_comp_rx_s", row.metrics.t_comp_rx_s},
                            {"classic_rate_bps", row.metrics.classic_rate_bps},
                            {"classic_se_bpshz", row.metrics.classic_se_bpshz},
                            {"sc_rate_bps", row.metrics.sc_rate_bps},
                            {"sc_se_bpshz", row.metrics.sc_se_bpshz}};
        r["real_time_ok"] = row.real_time_ok;
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    return j;
}

ComparisonReport report_from_json(const Json& j) {
    if (!j.is_object()) {
        throw ValidationError("report", "must be an object");
    }
    ComparisonReport report;
    report.mode = comparison_mode_from_string(get_string(j, "mode"));
    report.pool_set = pool_set_from_string(get_string(j, "pool_set"));
    report.t_sym_s = get_double(j, "t_sym_s");
    if (j.contains("pool_tx_ips")) {
        report.pool_tx_ips = get_double(j, "pool_tx_ips");
    }
    if (j.contains("pool_rx_ips")) {
        report.pool_rx_ips = get_double(j, "pool_rx_ips");
    }
    if (!j.contains("rows") || !j.at("rows").is_array()) {
        throw ValidationError("rows", "must be an array");
    }
    for (const Json& r : j.at("rows")) {
        ComparisonRow row;
        row.label = get_string(r, "label");
        row.kind = waveform_kind_from_string(get_string(r, "kind"));
        row.variant = ixs_variant_from_string(get_string(r, "variant"));
        row.bits = r.at("bits").get<std::uint64_t>();
        row.bandwidth_hz = get_double(r, "bandwidth_hz");
        if (r.contains("tx_complexity")) {
            row.tx_complexity = r.at("tx_complexity").get<std::uint64_t>();
        }
        if (r.contains("rx_complexity")) {
            row.rx_complexity = r.at("rx_complexity").get<std::uint64_t>();
        }
        if (r.contains("required_power_tx_ips")) {
            row.required_power_tx_ips = get_double(r, "required_power_tx_ips");
        }
        if (r.contains("required_power_rx_ips")) {
            row.required_power_rx_ips = get_double(r, "required_power_rx_ips");
        }
        const Json& m = r.at("metrics");
        row.metrics.t_comp_tx_s = get_double(m, "t_comp_tx_s");
        row.metrics.t_comp_rx_s = get_double(m, "t_comp_rx_s");
        row.metrics.classic_rate_bps = get_double(m, "classic_rate_bps");
        row.metrics.classic_se_bpshz = get_double(m, "classic_se_bpshz");
        row.metrics.sc_rate_bps = get_double(m, "sc_rate_bps");
        row.metrics.sc_se_bpshz = get_double(m, "sc_se_bpshz");
        row.real_time_ok = r.at("real_time_ok").get<bool>();
        report.rows.push_back(std::move(row));
    }
    return report;
}

Json sweep_to_json(const SweepResult& result) {
    Json points = Json::array();
    for (const SweepPoint& p : result.points) {
        points.push_back(Json{{"n", p.n},
                              {"label", p.label},
                              {"waveform", to_string(p.kind)},
                              {"variant", to_string(p.variant)},
                              {"sc_rate_bps", p.sc_rate_bps},
                              {"sc_se_bpshz", p.sc_se_bpshz}});
    }
    return Json{{"points", std::move(points)}};
}

Json table_to_json(const RenderedTable& table) {
    Json rows = Json::array();
    for (const auto& row : table.rows) {
        Json cells = Json::array();
        for (const RenderedCell& cell : row) {
            Json c;
            c["text"] = cell.text;
            if (!std::isnan(cell.value)) {
                c["value"] = cell.value;
            }
            cells.push_back(std::move(c));
        }
        rows.push_back(std::move(cells));
    }
    return Json{{"title", table.title}, {"headers", table.headers}, {"rows", std::move(rows)}};
}

std::string to_json_text(const Json& j) {
    return j.dump(2) + "\n";
}

} // namespace scwave
