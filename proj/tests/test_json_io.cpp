#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "scwave/builtin_scenarios.hpp"
#include "scwave/errors.hpp"
#include "scwave/json_io.hpp"
#include "scwave/report.hpp"

#include <cmath>
#include <filesystem>
#include <string>

using namespace scwave;

namespace {

std::string bad_spec_field(const Json& j) {
    try {
        spec_from_json(j);
    } catch (const ValidationError& e) {
        return e.field();
    }
    return "";
}

bool specs_equal(const WaveformSpec& a, const WaveformSpec& b) {
    return spec_to_json(a) == spec_to_json(b);
}

} // namespace

TEST_CASE("waveform spec JSON round-trip") {
    for (WaveformKind kind :
         {WaveformKind::ofdm, WaveformKind::ofdm_im, WaveformKind::dm_ofdm}) {
        for (IxsVariant variant : {IxsVariant::original, IxsVariant::optimized}) {
            const WaveformSpec spec = ieee80211a_preset(kind, variant);
            const WaveformSpec back = spec_from_json(spec_to_json(spec));
            CHECK(specs_equal(spec, back));
        }
    }

    WaveformSpec grouped = ieee80211a_preset(WaveformKind::ofdm_im);
    grouped.g = 4;
    grouped.n_sub = 12;
    grouped.k_active = 3;
    grouped.m_order = 4;
    CHECK(specs_equal(grouped, spec_from_json(spec_to_json(grouped))));

    const Json j = spec_to_json(grouped);
    CHECK(j.at("kind") == "ofdm-im");
    CHECK(j.at("variant") == "original");
    CHECK(j.at("n_fft") == 64);
    CHECK(j.at("g") == 4);
    CHECK(j.at("delta_f") == 312500.0);
}

TEST_CASE("spec preset expansion with overrides") {
    const WaveformSpec preset = spec_from_json(
        Json{{"preset", "ieee80211a"}, {"kind", "ofdm-im"}, {"variant", "optimized"}});
    CHECK(specs_equal(preset, ieee80211a_preset(WaveformKind::ofdm_im, IxsVariant::optimized)));

    // Overrides are applied on top of the preset.
    const WaveformSpec qam = spec_from_json(
        Json{{"preset", "ieee80211a"}, {"kind", "ofdm"}, {"m_order", 64}});
    CHECK(qam.m_order == 64);
    CHECK(qam.n_fft == 64);
    CHECK(qam.n_data == 48);
    CHECK(qam.t_sym == doctest::Approx(4e-6).epsilon(1e-12));

    CHECK(bad_spec_field(Json{{"preset", "cellular"}, {"kind", "ofdm"}}) == "preset");
}

TEST_CASE("index-modulated geometry conveniences") {
    const Json timing{{"delta_f", 1000000.0}, {"t_cp", 0.25e-6}, {"t_sym", 1.25e-6}};

    // n_sub defaults to n_data/g when only g is given...
    Json with_g{{"kind", "ofdm-im"}, {"n_fft", 64}, {"n_data", 64}, {"g", 4}, {"k_active", 8}};
    with_g.update(timing);
    const WaveformSpec from_g = spec_from_json(with_g);
    CHECK(from_g.n_sub == 16);
    CHECK(from_g.g == 4);

    // ...g defaults to n_data/n_sub when only n_sub is given...
    Json with_n_sub{
        {"kind", "ofdm-im"}, {"n_fft", 64}, {"n_data", 64}, {"n_sub", 16}, {"k_active", 8}};
    with_n_sub.update(timing);
    const WaveformSpec from_n_sub = spec_from_json(with_n_sub);
    CHECK(from_n_sub.g == 4);
    CHECK(from_n_sub.n_sub == 16);

    // ...and with neither the whole data block is one subblock.
    Json bare{{"kind", "ofdm-im"}, {"n_fft", 64}, {"n_data", 64}, {"k_active", 32}};
    bare.update(timing);
    const WaveformSpec from_bare = spec_from_json(bare);
    CHECK(from_bare.g == 1);
    CHECK(from_bare.n_sub == 64);
    CHECK(from_bare.ideal_setup());
}

TEST_CASE("spec parsing failures name the offending field") {
    CHECK(bad_spec_field(Json{{"kind", "cdma"}}) == "kind");
    CHECK(bad_spec_field(Json{{"kind", "ofdm"}, {"variant", "fast"}}) == "variant");
    CHECK(bad_spec_field(Json{{"kind", "ofdm"}, {"n_fft", -4}}) == "n_fft");
    CHECK(bad_spec_field(Json{{"kind", "ofdm"}, {"n_fft", "sixty-four"}}) == "n_fft");
    CHECK(bad_spec_field(Json{{"preset", "ieee80211a"}, {"kind", "ofdm"}, {"delta_f", "fast"}}) ==
          "delta_f");
    CHECK(bad_spec_field(Json{{"preset", "ieee80211a"}, {"kind", "ofdm"}, {"bogus", 1}}) ==
          "bogus");
    CHECK(bad_spec_field(Json::array({1, 2})) == "spec");
    // Structural validation still runs after parsing.
    CHECK(bad_spec_field(Json{{"preset", "ieee80211a"}, {"kind", "ofdm-im"}, {"k_active", 99}}) ==
          "k_active");
}

TEST_CASE("scenario JSON round-trip preserves semantics") {
    for (const ComparisonScenario& scenario :
         {table_i_scenario(), table_iii_scenario(), figures_scenario()}) {
        const ComparisonScenario back = scenario_from_json(scenario_to_json(scenario));
        CHECK(scenario_to_json(back) == scenario_to_json(scenario));
        // Equal scenarios must evaluate to byte-identical CSV.
        CHECK(comparison_csv(run(back)) == comparison_csv(run(scenario)));
    }
}

TEST_CASE("bundled scenario files match the builtins") {
    const std::filesystem::path dir(SCENARIO_DIR);
    CHECK(scenario_to_json(load_scenario_file((dir / "table_i.json").string())) ==
          scenario_to_json(table_i_scenario()));
    CHECK(scenario_to_json(load_scenario_file((dir / "table_iii.json").string())) ==
          scenario_to_json(table_iii_scenario()));
    CHECK(scenario_to_json(load_scenario_file((dir / "figures.json").string())) ==
          scenario_to_json(figures_scenario()));
}

TEST_CASE("scenario loader failure modes") {
    CHECK_THROWS_AS(load_scenario_file("/nonexistent/scenario.json"), IoError);

    const std::filesystem::path bad =
        std::filesystem::temp_directory_path() / "scwave_bad_scenario.json";
    write_file(bad.string(), "{ not json");
    try {
        load_scenario_file(bad.string());
        CHECK_MESSAGE(false, "expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(e.field() == "scenario");
        CHECK(std::string(e.what()).find("parse error") != std::string::npos);
    }
    std::filesystem::remove(bad);

    CHECK_THROWS_AS(scenario_from_json(Json{{"mode", "psychic"}, {"waveforms", Json::array()}}),
                    ValidationError);
    CHECK_THROWS_AS(scenario_from_json(Json{{"pool_set", "باطل"}, {"waveforms", Json::array()}}),
                    ValidationError);
}

TEST_CASE("report JSON round-trip preserves every figure") {
    for (const ComparisonScenario& scenario : {table_i_scenario(), table_iii_scenario()}) {
        const ComparisonReport report = run(scenario);
        const ComparisonReport back = report_from_json(report_to_json(report));
        CHECK(report_to_json(back) == report_to_json(report));
        // Rendering the round-tripped report reproduces the table exactly.
        CHECK(render_comparison(back) == render_comparison(report));
        CHECK(comparison_csv(back) == comparison_csv(report));
    }

    const Json j = report_to_json(run(table_iii_scenario()));
    CHECK(j.at("mode") == "model_driven");
    CHECK(j.at("rows").size() == 3);
    CHECK(j.at("rows")[0].at("metrics").contains("sc_rate_bps"));
    CHECK(j.at("pool_tx_ips") == 1120e6);
    CHECK(j.at("pool_rx_ips") == 1184e6);

    const Json mj = report_to_json(run(table_i_scenario()));
    CHECK(mj.at("mode") == "measured_runtimes");
    CHECK_FALSE(mj.contains("pool_tx_ips"));
    CHECK_FALSE(mj.at("rows")[0].contains("tx_complexity"));
}

TEST_CASE("sweep and table JSON shapes") {
    const Json sj = sweep_to_json(sweep(figures_scenario(), 8, 8));
    REQUIRE(sj.at("points").size() == 5);
    const Json& p0 = sj.at("points")[0];
    CHECK(p0.contains("n"));
    CHECK(p0.contains("label"));
    CHECK(p0.contains("waveform"));
    CHECK(p0.contains("variant"));
    CHECK(p0.contains("sc_rate_bps"));
    CHECK(p0.contains("sc_se_bpshz"));

    const Json tj = table_to_json(render_table_iii());
    CHECK(tj.at("headers").size() == 4);
    CHECK(tj.at("rows").size() == 9);
    // Text-only cells omit "value"; numeric cells carry it.
    CHECK_FALSE(tj.at("rows")[0][0].contains("value"));
    CHECK(tj.at("rows")[0][1].at("value") == 48.0);
    CHECK(tj.at("rows")[0][1].at("text") == "48");
}

TEST_CASE("JSON text form is deterministic") {
    const std::string text = to_json_text(report_to_json(run(table_iii_scenario())));
    CHECK(text == to_json_text(report_to_json(run(table_iii_scenario()))));
    CHECK(!text.empty());
    CHECK(text.back() == '\n');
    // Keys are emitted sorted, so "bits" precedes "kind" in the first row.
    CHECK(text.find("\"bits\"") < text.find("\"kind\""));
}
