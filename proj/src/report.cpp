#include "scwave/report.hpp"

#include "scwave/builtin_scenarios.hpp"
#include "scwave/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

namespace scwave {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

double to_us(double seconds) {
    return seconds * 1e6;
}

bool looks_integral(double v) {
    return std::abs(v - std::round(v)) <= 1e-9 * std::max(1.0, std::abs(v));
}

std::string chars_format_fixed(double v, int decimals) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, decimals);
    return std::string(buf, res.ptr);
}

RenderedCell text_cell(std::string text) {
    return RenderedCell{std::move(text), kNan};
}

/// Numeric cell: display per policy, full-precision value carried alongside.
RenderedCell value_cell(double display_value, double full_value) {
    return RenderedCell{format_display(display_value, 2), full_value};
}

RenderedCell integer_cell(std::uint64_t v) {
    return RenderedCell{std::to_string(v), static_cast<double>(v)};
}

/// The published-style recomputation: rate from runtimes truncated at two
/// decimals (microseconds), the way the reference summary tables were built.
struct DisplayRates {
    double rate_bus;
    double se_bshz;
};

DisplayRates display_rates(std::uint64_t bits, double t_tx_s, double t_sym_s, double t_rx_s,
                           double bandwidth_hz) {
    const double latency_us = display_trunc(to_us(t_tx_s), 2) + display_trunc(to_us(t_sym_s), 2) +
                              display_trunc(to_us(t_rx_s), 2);
    const double rate_bus = static_cast<double>(bits) / latency_us;
    const double se_bshz = rate_bus / (bandwidth_hz * 1e-6);
    return DisplayRates{rate_bus, se_bshz};
}

} // namespace

double display_trunc(double v, int decimals) {
    double scale = 1.0;
    for (int i = 0; i < decimals; ++i) {
        scale *= 10.0;
    }
    double scaled = v * scale;
    const double nudge = 1e-9 * std::max(1.0, std::abs(scaled));
    scaled = scaled >= 0 ? std::floor(scaled + nudge) : std::ceil(scaled - nudge);
    return scaled / scale;
}

std::string format_display(double v, int decimals) {
    const double truncated = display_trunc(v, decimals);
    if (looks_integral(truncated)) {
        return chars_format_fixed(std::round(truncated), 0);
    }
    return chars_format_fixed(truncated, decimals);
}

std::string format_full(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v); // shortest round-trip
    return std::string(buf, res.ptr);
}

RenderedTable render_model_table(const ComparisonReport& report) {
    if (report.mode != ComparisonMode::model_driven) {
        throw ValidationError("mode", "model table requires a model-driven report");
    }
    RenderedTable table;
    {
        std::ostringstream title;
        title << "model-driven comparison (pool " << to_string(report.pool_set) << ": tx "
              << format_display(*report.pool_tx_ips * 1e-6, 2) << " inst/us, rx "
              << format_display(*report.pool_rx_ips * 1e-6, 2) << " inst/us)";
        table.title = title.str();
    }
    table.headers.push_back("metric");
    for (const ComparisonRow& row : report.rows) {
        table.headers.push_back(row.label);
    }

    std::vector<RenderedCell> bits_row{text_cell("bits per symbol")};
    std::vector<RenderedCell> tx_c{text_cell("tx complexity [units]")};
    std::vector<RenderedCell> rx_c{text_cell("rx complexity [units]")};
    std::vector<RenderedCell> tx_p{text_cell("required power tx [inst/us]")};
    std::vector<RenderedCell> rx_p{text_cell("required power rx [inst/us]")};
    std::vector<RenderedCell> tx_t{text_cell("t_comp tx [us]")};
    std::vector<RenderedCell> rx_t{text_cell("t_comp rx [us]")};
    std::vector<RenderedCell> rate{text_cell("sc rate [b/us]")};
    std::vector<RenderedCell> se{text_cell("sc se [b/s/Hz]")};

    for (const ComparisonRow& row : report.rows) {
        bits_row.push_back(integer_cell(row.bits));
        tx_c.push_back(integer_cell(*row.tx_complexity));
        rx_c.push_back(integer_cell(*row.rx_complexity));
        tx_p.push_back(value_cell(*row.required_power_tx_ips * 1e-6,
                                  *row.required_power_tx_ips * 1e-6));
        rx_p.push_back(value_cell(*row.required_power_rx_ips * 1e-6,
                                  *row.required_power_rx_ips * 1e-6));
        tx_t.push_back(value_cell(to_us(row.metrics.t_comp_tx_s), to_us(row.metrics.t_comp_tx_s)));
        rx_t.push_back(value_cell(to_us(row.metrics.t_comp_rx_s), to_us(row.metrics.t_comp_rx_s)));
        const DisplayRates disp =
            display_rates(row.bits, row.metrics.t_comp_tx_s, report.t_sym_s,
                          row.metrics.t_comp_rx_s, row.bandwidth_hz);
        rate.push_back(value_cell(disp.rate_bus, row.metrics.sc_rate_bps * 1e-6));
        se.push_back(value_cell(disp.se_bshz, row.metrics.sc_se_bpshz));
    }

    table.rows = {bits_row, tx_c, rx_c, tx_p, rx_p, tx_t, rx_t, rate, se};
    return table;
}

RenderedTable render_measured_table(const ComparisonReport& report) {
    if (report.mode != ComparisonMode::measured_runtimes) {
        throw ValidationError("mode", "measured table requires a measured-runtimes report");
    }
    RenderedTable table;
    table.title = "measured-runtimes comparison";
    table.headers = {"configuration", "bits per symbol", "t_comp tx [us]", "t_comp rx [us]",
                     "t_sym [us]",    "rate [b/us]",     "se [b/s/Hz]"};
    for (const ComparisonRow& row : report.rows) {
        const DisplayRates disp =
            display_rates(row.bits, row.metrics.t_comp_tx_s, report.t_sym_s,
                          row.metrics.t_comp_rx_s, row.bandwidth_hz);
        table.rows.push_back({
            text_cell(row.label),
            integer_cell(row.bits),
            value_cell(to_us(row.metrics.t_comp_tx_s), to_us(row.metrics.t_comp_tx_s)),
            value_cell(to_us(row.metrics.t_comp_rx_s), to_us(row.metrics.t_comp_rx_s)),
            value_cell(to_us(report.t_sym_s), to_us(report.t_sym_s)),
            value_cell(disp.rate_bus, row.metrics.sc_rate_bps * 1e-6),
            value_cell(disp.se_bshz, row.metrics.sc_se_bpshz),
        });
    }
    return table;
}

RenderedTable render_comparison(const ComparisonReport& report) {
    return report.mode == ComparisonMode::model_driven ? render_model_table(report)
                                                       : render_measured_table(report);
}

RenderedTable render_table_i() {
    return render_measured_table(run(table_i_scenario()));
}

RenderedTable render_table_iii() {
    return render_model_table(run(table_iii_scenario()));
}

std::string to_text(const RenderedTable& table) {
    const std::size_t columns = table.headers.size();
    std::vector<std::size_t> widths(columns, 0);
    for (std::size_t c = 0; c < columns; ++c) {
        widths[c] = table.headers[c].size();
    }
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size() && c < columns; ++c) {
            widths[c] = std::max(widths[c], row[c].text.size());
        }
    }

    std::ostringstream out;
    out << table.title << '\n';
    auto emit_row = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (c > 0) {
                out << "  ";
            }
            out << cells[c];
            if (c + 1 < cells.size()) {
                out << std::string(widths[c] - cells[c].size(), ' ');
            }
        }
        out << '\n';
    };
    emit_row(table.headers);
    {
        std::size_t total = 0;
        for (std::size_t c = 0; c < columns; ++c) {
            total += widths[c] + (c > 0 ? 2 : 0);
        }
        out << std::string(total, '-') << '\n';
    }
    for (const auto& row : table.rows) {
        std::vector<std::string> cells;
        cells.reserve(row.size());
        for (const RenderedCell& cell : row) {
            cells.push_back(cell.text);
        }
        emit_row(cells);
    }
    return out.str();
}

std::string comparison_csv(const ComparisonReport& report) {
    std::ostringstream out;
    out << "label,kind,variant,bits,bandwidth_hz,tx_complexity,rx_complexity,"
           "required_itx_instus,required_irx_instus,pool_itx_instus,pool_irx_instus,"
           "tcomp_tx_us,tcomp_rx_us,t_sym_us,classic_rate_bus,classic_se_bshz,"
           "sc_rate_bus,sc_se_bshz,real_time_ok\n";
    for (const ComparisonRow& row : report.rows) {
        out << row.label << ',' << to_string(row.kind) << ','
            << (row.kind == WaveformKind::ofdm ? "-" : to_string(row.variant)) << ','
            << row.bits << ',' << format_full(row.bandwidth_hz) << ',';
        if (row.tx_complexity) {
            out << *row.tx_complexity;
        }
        out << ',';
        if (row.rx_complexity) {
            out << *row.rx_complexity;
        }
        out << ',';
        if (row.required_power_tx_ips) {
            out << format_full(*row.required_power_tx_ips * 1e-6);
        }
        out << ',';
        if (row.required_power_rx_ips) {
            out << format_full(*row.required_power_rx_ips * 1e-6);
        }
        out << ',';
        if (report.pool_tx_ips) {
            out << format_full(*report.pool_tx_ips * 1e-6);
        }
        out << ',';
        if (report.pool_rx_ips) {
            out << format_full(*report.pool_rx_ips * 1e-6);
        }
        out << ',' << format_full(to_us(row.metrics.t_comp_tx_s)) << ','
            << format_full(to_us(row.metrics.t_comp_rx_s)) << ','
            << format_full(to_us(report.t_sym_s)) << ','
            << format_full(row.metrics.classic_rate_bps * 1e-6) << ','
            << format_full(row.metrics.classic_se_bpshz) << ','
            << format_full(row.metrics.sc_rate_bps * 1e-6) << ','
            << format_full(row.metrics.sc_se_bpshz) << ','
            << (row.real_time_ok ? "true" : "false") << '\n';
    }
    return out.str();
}

std::string sweep_csv(const SweepResult& result) {
    std::vector<const SweepPoint*> points;
    points.reserve(result.points.size());
    for (const SweepPoint& p : result.points) {
        points.push_back(&p);
    }
    std::stable_sort(points.begin(), points.end(), [](const SweepPoint* a, const SweepPoint* b) {
        if (a->n != b->n) return a->n < b->n;
        const int kind_cmp = std::string(to_string(a->kind)).compare(to_string(b->kind));
        if (kind_cmp != 0) return kind_cmp < 0;
        return std::string(to_string(a->variant)) < to_string(b->variant);
    });

    std::ostringstream out;
    out << "n,waveform,variant,sc_rate_bus,sc_se_bshz\n";
    for (const SweepPoint* p : points) {
        out << p->n << ',' << to_string(p->kind) << ','
            << (p->kind == WaveformKind::ofdm ? "-" : to_string(p->variant)) << ','
            << format_full(p->sc_rate_bps * 1e-6) << ',' << format_full(p->sc_se_bpshz) << '\n';
    }
    return out.str();
}

void write_file(const std::string& path, const std::string& content) {
    const std::filesystem::path p(path);
    std::error_code ec;
    if (p.has_parent_path()) {
        std::filesystem::create_directories(p.parent_path(), ec);
        if (ec) {
            throw IoError("cannot create directory '" + p.parent_path().string() + "': " +
                          ec.message());
        }
    }
    std::ofstream out(p, std::ios::binary);
    if (!out) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    out << content;
    if (!out) {
        throw IoError("write to '" + path + "' failed");
    }
}

} // namespace scwave
