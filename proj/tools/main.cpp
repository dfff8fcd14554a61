// scwave: spectro-computational waveform analyzer CLI.
//
// Subcommands: analyze, compare, sweep, mapper, simulate, tables.
// All numeric output is locale-independent; JSON/CSV emission is
// deterministic (sorted keys, fixed column order, trailing newline).

#include "scwave/baseband.hpp"
#include "scwave/builtin_scenarios.hpp"
#include "scwave/comparison.hpp"
#include "scwave/cost_model.hpp"
#include "scwave/errors.hpp"
#include "scwave/ixs_mapper.hpp"
#include "scwave/json_io.hpp"
#include "scwave/report.hpp"
#include "scwave/sc_metrics.hpp"
#include "scwave/version.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace {

using namespace scwave;

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
    } else {
        write_file(out_path, content);
    }
}

// ---------------------------------------------------------------------------
// Waveform options shared by `analyze` and `simulate`.
// ---------------------------------------------------------------------------

struct SpecOptions {
    std::string kind = "ofdm";
    std::string variant = "original";
    std::string preset = "ieee80211a";
    std::uint32_t n_fft = 0;
    std::uint32_t n_data = 0;
    std::uint32_t g = 0;
    std::uint32_t n_sub = 0;
    std::uint32_t k_active = 0;
    std::uint32_t m_order = 0;
    std::uint32_t m_a = 0;
    std::uint32_t m_b = 0;
    double delta_f = 0;
    double t_cp = 0;
    double t_sym = 0;

    CLI::Option* n_fft_opt = nullptr;
    CLI::Option* n_data_opt = nullptr;
    CLI::Option* g_opt = nullptr;
    CLI::Option* n_sub_opt = nullptr;
    CLI::Option* k_opt = nullptr;
    CLI::Option* m_opt = nullptr;
    CLI::Option* m_a_opt = nullptr;
    CLI::Option* m_b_opt = nullptr;
    CLI::Option* delta_f_opt = nullptr;
    CLI::Option* t_cp_opt = nullptr;
    CLI::Option* t_sym_opt = nullptr;
};

void add_spec_options(CLI::App* cmd, SpecOptions& o) {
    cmd->add_option("--waveform", o.kind, "Waveform kind: ofdm | ofdm-im | dm-ofdm")
        ->capture_default_str();
    cmd->add_option("--variant", o.variant, "Index-selector variant: original | optimized")
        ->capture_default_str();
    cmd->add_option("--preset", o.preset,
                    "Base configuration: ieee80211a (64-FFT, 48 data carriers, 4 us "
                    "symbol) or none")
        ->capture_default_str();
    o.n_fft_opt = cmd->add_option("--n-fft", o.n_fft, "Transform length (power of two)");
    o.n_data_opt = cmd->add_option("--n-data", o.n_data,
                                   "Data subcarriers (defaults to n-fft when n-fft is given)");
    o.g_opt = cmd->add_option("--g", o.g, "Subblock count (index-modulated kinds)");
    o.n_sub_opt = cmd->add_option("--n-sub", o.n_sub,
                                  "Subcarriers per subblock (default n-data / g)");
    o.k_opt = cmd->add_option("--k", o.k_active,
                              "Active subcarriers per subblock (default n-sub / 2)");
    o.m_opt = cmd->add_option("--m", o.m_order, "Constellation order (ofdm, ofdm-im)");
    o.m_a_opt = cmd->add_option("--m-a", o.m_a, "dm-ofdm mode-A constellation order");
    o.m_b_opt = cmd->add_option("--m-b", o.m_b, "dm-ofdm mode-B constellation order");
    o.delta_f_opt = cmd->add_option("--delta-f", o.delta_f, "Subcarrier spacing [Hz]");
    o.t_cp_opt = cmd->add_option("--t-cp", o.t_cp, "Cyclic prefix duration [s]");
    o.t_sym_opt = cmd->add_option("--t-sym", o.t_sym,
                                  "Symbol duration [s] (default 1/delta-f + t-cp)");
}

WaveformSpec build_spec(const SpecOptions& o) {
    const WaveformKind kind = waveform_kind_from_string(o.kind);
    const IxsVariant variant = ixs_variant_from_string(o.variant);

    WaveformSpec spec;
    if (o.preset == "ieee80211a") {
        spec = ieee80211a_preset(kind, variant);
    } else if (o.preset == "none") {
        spec.kind = kind;
        spec.variant = variant;
    } else {
        throw ValidationError("preset", "unknown preset '" + o.preset + "'");
    }

    if (o.n_fft_opt->count() > 0) {
        spec.n_fft = o.n_fft;
        if (o.n_data_opt->count() == 0) {
            spec.n_data = o.n_fft;
        }
    }
    if (o.n_data_opt->count() > 0) spec.n_data = o.n_data;
    if (o.g_opt->count() > 0) spec.g = o.g;
    if (o.m_opt->count() > 0) spec.m_order = o.m_order;
    if (o.m_a_opt->count() > 0) spec.m_a = o.m_a;
    if (o.m_b_opt->count() > 0) spec.m_b = o.m_b;
    if (o.delta_f_opt->count() > 0) spec.delta_f = o.delta_f;
    if (o.t_cp_opt->count() > 0) spec.t_cp = o.t_cp;
    if (o.t_sym_opt->count() > 0) {
        spec.t_sym = o.t_sym;
    } else if (o.delta_f_opt->count() > 0 || o.t_cp_opt->count() > 0) {
        if (spec.delta_f <= 0) {
            throw ValidationError("delta_f", "must be positive");
        }
        spec.t_sym = 1.0 / spec.delta_f + spec.t_cp;
    }

    if (spec.uses_index_modulation()) {
        if (o.n_sub_opt->count() > 0) {
            spec.n_sub = o.n_sub;
        } else if (o.n_data_opt->count() > 0 || o.n_fft_opt->count() > 0 ||
                   o.g_opt->count() > 0 || o.preset == "none") {
            if (spec.g == 0 || spec.n_data % spec.g != 0) {
                throw ValidationError("g", "must divide the number of data subcarriers");
            }
            spec.n_sub = spec.n_data / spec.g;
        }
        if (o.k_opt->count() > 0) {
            spec.k_active = o.k_active;
        } else if (o.n_sub_opt->count() > 0 || o.n_data_opt->count() > 0 ||
                   o.n_fft_opt->count() > 0 || o.g_opt->count() > 0 || o.preset == "none") {
            spec.k_active = spec.n_sub / 2;
        }
    }

    spec.validate();
    return spec;
}

// ---------------------------------------------------------------------------
// Scenario resolution: builtin name, literal path, then the directory named
// by SCWAVE_SCENARIO_DIR.
// ---------------------------------------------------------------------------

ComparisonScenario resolve_scenario(const std::string& name) {
    if (name == "table-i") return table_i_scenario();
    if (name == "table-iii") return table_iii_scenario();
    if (name == "figures") return figures_scenario();

    namespace fs = std::filesystem;
    if (fs::exists(fs::path(name))) {
        return load_scenario_file(name);
    }
    if (const char* dir = std::getenv("SCWAVE_SCENARIO_DIR"); dir != nullptr && *dir != '\0') {
        const fs::path base(dir);
        for (const fs::path& candidate : {base / name, base / (name + ".json")}) {
            if (fs::exists(candidate)) {
                return load_scenario_file(candidate.string());
            }
        }
    }
    throw IoError("scenario '" + name +
                  "' is neither a builtin (table-i, table-iii, figures) nor a readable file");
}

Json ledger_to_json(const StageCostLedger& ledger) {
    return Json{{"ifft_units", ledger.ifft_units},
                {"fft_units", ledger.fft_units},
                {"ixs_units", ledger.ixs_units},
                {"detect_units", ledger.detect_units},
                {"total", ledger.total()}};
}

// ---------------------------------------------------------------------------
// analyze
// ---------------------------------------------------------------------------

int run_analyze(const SpecOptions& spec_opts, double power_tx_ipus, double power_rx_ipus,
                bool have_power_tx, bool have_power_rx, const std::string& out_path) {
    const WaveformSpec spec = build_spec(spec_opts);
    const std::uint64_t bits = bits_per_symbol(spec);
    const CostUnits tx = tx_complexity(spec);
    const CostUnits rx = rx_complexity(spec);
    const ProcessingPower req_tx = required_power(tx, spec.t_sym);
    const ProcessingPower req_rx = required_power(rx, spec.t_sym);

    const ProcessingPower pow_tx =
        have_power_tx ? ProcessingPower::from_inst_per_us(power_tx_ipus) : req_tx;
    const ProcessingPower pow_rx =
        have_power_rx ? ProcessingPower::from_inst_per_us(power_rx_ipus) : req_rx;

    const double t_tx = comp_time(tx, pow_tx);
    const double t_rx = comp_time(rx, pow_rx);
    const ScMetrics metrics = compute_metrics(bits, t_tx, spec.t_sym, t_rx, spec.bandwidth_hz());

    Json j;
    j["spec"] = spec_to_json(spec);
    j["bits_per_symbol"] = bits;
    j["bandwidth_hz"] = spec.bandwidth_hz();
    j["tx_complexity"] = tx.count;
    j["rx_complexity"] = rx.count;
    j["required_power_tx_ips"] = req_tx.inst_per_second();
    j["required_power_rx_ips"] = req_rx.inst_per_second();
    j["applied_power_tx_ips"] = pow_tx.inst_per_second();
    j["applied_power_rx_ips"] = pow_rx.inst_per_second();
    j["metrics"] = Json{{"t_comp_tx_s", metrics.t_comp_tx_s},
                        {"t_comp_rx_s", metrics.t_comp_rx_s},
                        {"classic_rate_bps", metrics.classic_rate_bps},
                        {"classic_se_bpshz", metrics.classic_se_bpshz},
                        {"sc_rate_bps", metrics.sc_rate_bps},
                        {"sc_se_bpshz", metrics.sc_se_bpshz}};
    j["sc_se_simplified_bpshz"] = sc_se_simplified(bits, spec.n_fft, spec.cp_len());
    emit(out_path, to_json_text(j));
    return 0;
}

// ---------------------------------------------------------------------------
// compare
// ---------------------------------------------------------------------------

int run_compare(const std::string& scenario_name, const std::string& pool_set,
                const std::string& output, const std::string& out_path) {
    ComparisonScenario scenario = resolve_scenario(scenario_name);
    if (!pool_set.empty()) {
        scenario.pool_set = pool_set_from_string(pool_set);
    }
    const ComparisonReport report = run(scenario);
    if (output == "text") {
        emit(out_path, to_text(render_comparison(report)));
    } else if (output == "json") {
        emit(out_path, to_json_text(report_to_json(report)));
    } else if (output == "csv") {
        emit(out_path, comparison_csv(report));
    } else {
        throw ValidationError("output", "must be text, json or csv");
    }
    return 0;
}

// ---------------------------------------------------------------------------
// sweep
// ---------------------------------------------------------------------------

int run_sweep(const std::string& scenario_name, std::uint32_t n_min, std::uint32_t n_max,
              const std::string& output, const std::string& out_path) {
    const ComparisonScenario scenario = resolve_scenario(scenario_name);
    const SweepResult result = sweep(scenario, n_min, n_max);
    if (output == "csv") {
        emit(out_path, sweep_csv(result));
    } else if (output == "json") {
        emit(out_path, to_json_text(sweep_to_json(result)));
    } else {
        throw ValidationError("output", "must be csv or json");
    }
    return 0;
}

// ---------------------------------------------------------------------------
// mapper
// ---------------------------------------------------------------------------

Json mapper_result_json(IxsMapper& mapper, const ActivationPattern& pattern) {
    Json j;
    j["n"] = mapper.n();
    j["k"] = mapper.k();
    j["variant"] = to_string(mapper.variant());
    j["index_bits"] = mapper.index_bits();
    j["addressable_ranks"] = mapper.addressable_ranks().str();
    j["rank"] = pattern.rank.str();
    j["positions"] = pattern.positions;
    j["steps"] = mapper.steps();
    return j;
}

int run_mapper_unrank(std::uint32_t n, std::uint32_t k, const std::string& variant,
                      const std::string& rank_text, const std::string& out_path) {
    BigUint rank;
    try {
        rank = BigUint(rank_text);
    } catch (const std::exception&) {
        throw ValidationError("rank", "not a valid non-negative integer");
    }
    IxsMapper mapper(n, k, ixs_variant_from_string(variant));
    const ActivationPattern pattern = mapper.unrank(rank);
    emit(out_path, to_json_text(mapper_result_json(mapper, pattern)));
    return 0;
}

int run_mapper_rank(std::uint32_t n, std::uint32_t k, const std::string& variant,
                    const std::vector<std::uint32_t>& positions, const std::string& out_path) {
    IxsMapper mapper(n, k, ixs_variant_from_string(variant));
    ActivationPattern pattern;
    pattern.n = n;
    pattern.k = k;
    pattern.positions = positions;
    pattern.rank = mapper.rank(positions);
    emit(out_path, to_json_text(mapper_result_json(mapper, pattern)));
    return 0;
}

// ---------------------------------------------------------------------------
// simulate
// ---------------------------------------------------------------------------

/// Deterministic bit stream: successive mt19937_64 words, LSB first.
/// (std::uniform_int_distribution is implementation-defined, so raw engine
/// output is used to keep payloads identical across toolchains.)
class BitSource {
public:
    explicit BitSource(std::uint64_t seed) : rng_(seed) {}

    std::uint8_t next() {
        if (avail_ == 0) {
            word_ = rng_();
            avail_ = 64;
        }
        const std::uint8_t bit = static_cast<std::uint8_t>(word_ & 1u);
        word_ >>= 1;
        --avail_;
        return bit;
    }

private:
    std::mt19937_64 rng_;
    std::uint64_t word_ = 0;
    int avail_ = 0;
};

int run_simulate(const SpecOptions& spec_opts, std::uint64_t frames, std::uint64_t seed,
                 double snr_db, bool have_snr, bool emit_ledger, const std::string& out_path) {
    const WaveformSpec spec = build_spec(spec_opts);
    const std::uint64_t bits_per_frame = bits_per_symbol(spec);

    BitSource source(seed);
    StageCostLedger tx_total;
    StageCostLedger rx_total;
    std::uint64_t bit_errors = 0;
    std::uint64_t frame_errors = 0;
    std::uint64_t detection_errors = 0;
    Json detail = Json::array();

    for (std::uint64_t f = 0; f < frames; ++f) {
        BitVector payload(bits_per_frame);
        for (auto& b : payload) {
            b = source.next();
        }
        const TransmitResult sent = transmit(payload, spec);
        tx_total.ifft_units += sent.ledger.ifft_units;
        tx_total.ixs_units += sent.ledger.ixs_units;

        BasebandFrame frame = sent.frame;
        if (have_snr) {
            frame = awgn_channel(frame, snr_db, seed * 0x9E3779B97F4A7C15ULL + f);
        }

        std::uint64_t frame_bit_errors = 0;
        bool detected = true;
        StageCostLedger rx_frame;
        try {
            const ReceiveResult got = receive(frame, spec);
            rx_frame = got.ledger;
            rx_total.fft_units += got.ledger.fft_units;
            rx_total.detect_units += got.ledger.detect_units;
            rx_total.ixs_units += got.ledger.ixs_units;
            for (std::size_t i = 0; i < payload.size(); ++i) {
                frame_bit_errors += payload[i] != got.bits[i] ? 1u : 0u;
            }
        } catch (const DetectionError&) {
            detected = false;
            ++detection_errors;
            frame_bit_errors = bits_per_frame; // undecodable frame
        }
        bit_errors += frame_bit_errors;
        if (frame_bit_errors > 0) {
            ++frame_errors;
        }
        if (emit_ledger) {
            Json d;
            d["frame"] = f;
            d["tx_ledger"] = ledger_to_json(sent.ledger);
            if (detected) {
                d["rx_ledger"] = ledger_to_json(rx_frame);
            }
            d["bit_errors"] = frame_bit_errors;
            d["detected"] = detected;
            detail.push_back(std::move(d));
        }
    }

    Json j;
    j["spec"] = spec_to_json(spec);
    j["frames"] = frames;
    j["seed"] = seed;
    j["noiseless"] = !have_snr;
    if (have_snr) {
        j["snr_db"] = snr_db;
    }
    j["bits_per_frame"] = bits_per_frame;
    j["total_bits"] = frames * bits_per_frame;
    j["bit_errors"] = bit_errors;
    j["frame_errors"] = frame_errors;
    j["detection_errors"] = detection_errors;
    j["tx_ledger_total"] = ledger_to_json(tx_total);
    j["rx_ledger_total"] = ledger_to_json(rx_total);
    j["model_per_frame"] = Json{{"tx_complexity", tx_complexity(spec).count},
                                {"rx_complexity", rx_complexity(spec).count},
                                {"transform_units", fft_cost_units(spec.n_fft)},
                                {"detection_units", detection_cost_units(spec)},
                                {"ixs_units", ixs_cost_units(spec)}};
    if (emit_ledger) {
        j["frames_detail"] = std::move(detail);
    }
    emit(out_path, to_json_text(j));
    return 0;
}

// ---------------------------------------------------------------------------
// tables
// ---------------------------------------------------------------------------

int run_tables(const std::string& which, const std::string& output,
               const std::string& out_path) {
    const bool is_i = which == "i";
    if (output == "text") {
        emit(out_path, to_text(is_i ? render_table_i() : render_table_iii()));
    } else if (output == "json") {
        emit(out_path, to_json_text(table_to_json(is_i ? render_table_i() : render_table_iii())));
    } else if (output == "csv") {
        const ComparisonScenario scenario = is_i ? table_i_scenario() : table_iii_scenario();
        emit(out_path, comparison_csv(run(scenario)));
    } else {
        throw ValidationError("output", "must be text, json or csv");
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"scwave: spectro-computational analysis of multicarrier waveforms"};
    app.set_version_flag("--version", std::string("scwave ") + scwave::kVersion + " [" +
                                          scwave::kCostModelRevision + "]");
    app.require_subcommand(1);

    // analyze ---------------------------------------------------------------
    auto* analyze = app.add_subcommand(
        "analyze", "Closed-form metrics for a single waveform configuration (JSON)");
    SpecOptions analyze_spec;
    add_spec_options(analyze, analyze_spec);
    double power_tx_ipus = 0;
    double power_rx_ipus = 0;
    auto* power_tx_opt = analyze->add_option(
        "--power-tx", power_tx_ipus,
        "Tx processing power [inst/us] (default: minimum required for real time)");
    auto* power_rx_opt =
        analyze->add_option("--power-rx", power_rx_ipus, "Rx processing power [inst/us]");
    std::string analyze_out;
    analyze->add_option("--out", analyze_out, "Write to file instead of stdout");

    // compare ---------------------------------------------------------------
    auto* compare = app.add_subcommand(
        "compare", "Evaluate a comparison scenario under an equitable processing pool");
    std::string compare_scenario = "table-iii";
    std::string compare_pool_set;
    std::string compare_output = "text";
    std::string compare_out;
    compare->add_option("--scenario", compare_scenario,
                        "Builtin name (table-i, table-iii, figures), a file path, or a "
                        "name resolved in $SCWAVE_SCENARIO_DIR")
        ->capture_default_str();
    compare->add_option("--pool-set", compare_pool_set,
                        "Override the scenario's pool set: all | originals | optimized");
    compare->add_option("--output", compare_output, "text | json | csv")->capture_default_str();
    compare->add_option("--out", compare_out, "Write to file instead of stdout");

    // sweep -----------------------------------------------------------------
    auto* sweep_cmd = app.add_subcommand(
        "sweep", "Rate/SE versus transform size for an ideal-setup scenario");
    std::string sweep_scenario = "figures";
    std::uint32_t n_min = 8;
    std::uint32_t n_max = 1024;
    std::string sweep_output = "csv";
    std::string sweep_out;
    sweep_cmd->add_option("--scenario", sweep_scenario, "Scenario (as in compare)")
        ->capture_default_str();
    sweep_cmd->add_option("--n-min", n_min, "Smallest transform size (power of two)")
        ->capture_default_str();
    sweep_cmd->add_option("--n-max", n_max, "Largest transform size (power of two)")
        ->capture_default_str();
    sweep_cmd->add_option("--output", sweep_output, "csv | json")->capture_default_str();
    sweep_cmd->add_option("--out", sweep_out, "Write to file instead of stdout");

    // mapper ----------------------------------------------------------------
    auto* mapper = app.add_subcommand(
        "mapper", "Index-selector rank/unrank with step instrumentation (JSON)");
    mapper->require_subcommand(1);

    auto* unrank = mapper->add_subcommand("unrank", "Rank -> activation pattern");
    std::uint32_t mapper_n = 0;
    std::uint32_t mapper_k = 0;
    std::string mapper_variant = "original";
    std::string rank_text;
    std::vector<std::uint32_t> positions;
    std::string mapper_out;
    unrank->add_option("--n", mapper_n, "Subcarriers per subblock")->required();
    unrank->add_option("--k", mapper_k, "Active subcarriers")->required();
    unrank->add_option("--variant", mapper_variant, "original | optimized")
        ->capture_default_str();
    unrank->add_option("--rank", rank_text, "Pattern rank (decimal, arbitrary precision)")
        ->required();
    unrank->add_option("--out", mapper_out, "Write to file instead of stdout");

    auto* rank_cmd = mapper->add_subcommand("rank", "Activation pattern -> rank");
    rank_cmd->add_option("--n", mapper_n, "Subcarriers per subblock")->required();
    rank_cmd->add_option("--k", mapper_k, "Active subcarriers")->required();
    rank_cmd->add_option("--variant", mapper_variant, "original | optimized")
        ->capture_default_str();
    rank_cmd->add_option("--positions", positions,
                         "Active positions, ascending, comma separated (e.g. 0,3,5)")
        ->required()
        ->delimiter(',');
    rank_cmd->add_option("--out", mapper_out, "Write to file instead of stdout");

    // simulate --------------------------------------------------------------
    auto* simulate = app.add_subcommand(
        "simulate", "Run the executing baseband path over random payloads (JSON)");
    SpecOptions sim_spec;
    add_spec_options(simulate, sim_spec);
    std::uint64_t frames = 100;
    std::uint64_t seed = 1;
    double snr_db = 0;
    bool emit_ledger = false;
    std::string sim_out;
    simulate->add_option("--frames", frames, "Number of symbols to push through")
        ->capture_default_str();
    simulate->add_option("--seed", seed, "Payload / noise RNG seed")->capture_default_str();
    auto* snr_opt = simulate->add_option(
        "--snr-db", snr_db, "Add AWGN at this per-sample SNR (omit for a noiseless channel)");
    simulate->add_flag("--emit-ledger", emit_ledger, "Include per-frame stage cost ledgers");
    simulate->add_option("--out", sim_out, "Write to file instead of stdout");

    // tables ----------------------------------------------------------------
    auto* tables = app.add_subcommand("tables", "Render a bundled reference table");
    tables->require_subcommand(1);
    std::string tables_output = "text";
    std::string tables_out;
    auto* table_i = tables->add_subcommand("i", "Measured-runtimes processor study");
    auto* table_iii = tables->add_subcommand("iii", "Model-driven three-waveform comparison");
    for (auto* t : {table_i, table_iii}) {
        t->add_option("--output", tables_output, "text | json | csv")->capture_default_str();
        t->add_option("--out", tables_out, "Write to file instead of stdout");
    }

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze) {
            return run_analyze(analyze_spec, power_tx_ipus, power_rx_ipus,
                               power_tx_opt->count() > 0, power_rx_opt->count() > 0,
                               analyze_out);
        }
        if (*compare) {
            return run_compare(compare_scenario, compare_pool_set, compare_output, compare_out);
        }
        if (*sweep_cmd) {
            return run_sweep(sweep_scenario, n_min, n_max, sweep_output, sweep_out);
        }
        if (*unrank) {
            return run_mapper_unrank(mapper_n, mapper_k, mapper_variant, rank_text, mapper_out);
        }
        if (*rank_cmd) {
            return run_mapper_rank(mapper_n, mapper_k, mapper_variant, positions, mapper_out);
        }
        if (*simulate) {
            return run_simulate(sim_spec, frames, seed, snr_db, snr_opt->count() > 0,
                                emit_ledger, sim_out);
        }
        if (*table_i) {
            return run_tables("i", tables_output, tables_out);
        }
        if (*table_iii) {
            return run_tables("iii", tables_output, tables_out);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
