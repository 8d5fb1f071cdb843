#include "CLI11.hpp"

#include "lteu/runners.hpp"
#include "lteu/scenario.hpp"
#include "lteu/validation.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

namespace {

struct CommonFlags {
    std::string config_path;
    std::optional<std::int64_t> seed;
    std::optional<std::int64_t> samples;
    std::string out_path;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--config", flags.config_path, "Scenario config file (key = value lines)");
    cmd->add_option("--seed", flags.seed, "Override run.seed");
    cmd->add_option("--samples", flags.samples, "Override run.n_samples");
    cmd->add_option("--out", flags.out_path, "Output path");
}

lteu::ScenarioConfig resolve_config(const CommonFlags& flags) {
    lteu::ScenarioConfig config;
    if (!flags.config_path.empty()) config = lteu::load_config(flags.config_path);
    if (flags.seed) config.seed = static_cast<std::uint64_t>(*flags.seed);
    if (flags.samples) {
        if (*flags.samples < 1) throw std::invalid_argument("--samples must be >= 1");
        config.n_samples = *flags.samples;
    }
    return config;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Coexistence model for an LTE-U small cell sharing a band with Wi-Fi"};
    app.require_subcommand(1);

    CommonFlags fig2_flags;
    CLI::App* fig2 = app.add_subcommand(
        "fig2", "Small-cell throughput sweep over served-user counts, CSV");
    add_common(fig2, fig2_flags);

    CommonFlags fig3_flags;
    CLI::App* fig3 =
        app.add_subcommand("fig3", "Wi-Fi throughput sweep over station counts, CSV");
    add_common(fig3, fig3_flags);

    CommonFlags fig4_flags;
    CLI::App* fig4 =
        app.add_subcommand("fig4", "Throughput pair sweep over the DoF split, CSV");
    add_common(fig4, fig4_flags);

    CommonFlags table3_flags;
    CLI::App* table3 =
        app.add_subcommand("table3", "DoF allocations over the weight sweep, CSV");
    add_common(table3, table3_flags);

    CommonFlags validate_flags;
    CLI::App* validate = app.add_subcommand(
        "validate", "Run every model-vs-oracle check and emit a JSON report");
    add_common(validate, validate_flags);

    CLI::App* config_cmd = app.add_subcommand("config", "Config file helpers");
    config_cmd->require_subcommand(1);
    std::string init_out;
    CLI::App* config_init =
        config_cmd->add_subcommand("init", "Print a commented default config template");
    config_init->add_option("--out", init_out, "Write the template here instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*fig2) {
            lteu::ScenarioConfig config = resolve_config(fig2_flags);
            std::string out = fig2_flags.out_path.empty() ? "fig2.csv" : fig2_flags.out_path;
            auto rows = lteu::run_fig2(config, out);
            std::printf("wrote %s (%zu rows)\n", out.c_str(), rows.size());
        } else if (*fig3) {
            lteu::ScenarioConfig config = resolve_config(fig3_flags);
            std::string out = fig3_flags.out_path.empty() ? "fig3.csv" : fig3_flags.out_path;
            auto rows = lteu::run_fig3(config, out);
            std::printf("wrote %s (%zu rows)\n", out.c_str(), rows.size());
        } else if (*fig4) {
            lteu::ScenarioConfig config = resolve_config(fig4_flags);
            std::string out = fig4_flags.out_path.empty() ? "fig4.csv" : fig4_flags.out_path;
            auto rows = lteu::run_fig4(config, out);
            std::printf("wrote %s (%zu rows)\n", out.c_str(), rows.size());
        } else if (*table3) {
            lteu::ScenarioConfig config = resolve_config(table3_flags);
            std::string out =
                table3_flags.out_path.empty() ? "table3.csv" : table3_flags.out_path;
            auto rows = lteu::run_table3(config, out);
            std::printf("wrote %s (%zu rows)\n", out.c_str(), rows.size());
        } else if (*validate) {
            lteu::ScenarioConfig config = resolve_config(validate_flags);
            return lteu::run_validate(config, validate_flags.out_path, true);
        } else if (*config_init) {
            std::string text = lteu::default_config_text();
            if (init_out.empty()) {
                std::cout << text;
            } else {
                std::ofstream out(init_out, std::ios::binary);
                if (!out) {
                    throw std::runtime_error("cannot open output file '" + init_out + "'");
                }
                out << text;
                if (!out) throw std::runtime_error("failed writing '" + init_out + "'");
                std::printf("wrote %s\n", init_out.c_str());
            }
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
