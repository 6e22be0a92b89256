// vortex-twm: dual-channel optical vortex transfer in a ladder-type medium.
//
//   vortex-twm fields  --config run.json --out out/
//   vortex-twm figure  fig4 --out out/
//   vortex-twm sweep   --param delta --values=-9,-3,0,3,9 --config run.json --out out/
//   vortex-twm profile --field d --radius auto --config run.json --out out/
//   vortex-twm verify  --level fast
//
// Exit status: 0 success, 1 invalid config, 2 I/O failure, 3 verification failure.

#include <charconv>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vortex_twm/config.hpp"
#include "vortex_twm/error.hpp"
#include "vortex_twm/figures.hpp"
#include "vortex_twm/pipeline.hpp"
#include "vortex_twm/verify.hpp"

namespace
{

constexpr int kExitInvalidConfig = 1;
constexpr int kExitIo = 2;
constexpr int kExitVerification = 3;

std::vector<double> parse_values(const std::string &text)
{
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto comma = text.find(',', pos);
        const std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
            throw vortex_twm::InvalidConfigError("values", "cannot parse '" + item + "' as a number");
        out.push_back(v);
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    return out;
}

vortex_twm::RunConfig load_with_warnings(const std::string &path)
{
    auto config = vortex_twm::load_config(path);
    for (const auto &w : config.warnings())
        std::cerr << "warning: " << w << '\n';
    return config;
}

void report(const vortex_twm::Manifest &manifest)
{
    std::cout << "wrote " << manifest.entries().size() << " files to " << manifest.out_dir().string()
              << " (manifest.json)\n";
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Dual-channel optical vortex transfer simulator"};
    app.require_subcommand(1);

    std::string config_path, out_dir, figure_id, param, values, field, radius = "auto", level = "fast";

    auto *fields = app.add_subcommand("fields", "evaluate one configuration and write its products");
    fields->add_option("--config", config_path, "run configuration (JSON)")->required();
    fields->add_option("--out", out_dir, "output directory")->required();

    auto *figure = app.add_subcommand("figure", "reproduce a figure preset");
    figure->add_option("id", figure_id, "fig3 | fig4 | fig5 | fig6")->required();
    figure->add_option("--out", out_dir, "output directory")->required();

    auto *sweep = app.add_subcommand("sweep", "sweep one parameter of a configuration");
    sweep->add_option("--param", param, "delta | lc | amp")->required();
    sweep->add_option("--values", values, "comma separated values, e.g. --values=-9,0,9")->required();
    sweep->add_option("--config", config_path, "base configuration (JSON)")->required();
    sweep->add_option("--out", out_dir, "output directory")->required();

    auto *profile = app.add_subcommand("profile", "azimuthal intensity profile of one field");
    profile->add_option("--field", field, "d | u | fp | fs | p | s")->required();
    profile->add_option("--radius", radius, "ring radius in waists, or auto");
    profile->add_option("--config", config_path, "run configuration (JSON)")->required();
    profile->add_option("--out", out_dir, "output directory")->required();

    auto *verify = app.add_subcommand("verify", "run the oracle suites");
    verify->add_option("--level", level, "fast | full");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInvalidConfig;
    }

    try {
        if (*fields) {
            report(vortex_twm::run_config(load_with_warnings(config_path), out_dir));
        } else if (*figure) {
            report(vortex_twm::reproduce_figure(figure_id, out_dir));
        } else if (*sweep) {
            const auto p = vortex_twm::parse_sweep_param(param);
            report(vortex_twm::run_sweep(load_with_warnings(config_path), p, parse_values(values), out_dir));
        } else if (*profile) {
            const auto id = vortex_twm::parse_field_id(field);
            std::optional<double> r;
            if (radius != "auto") {
                const auto parsed = parse_values(radius);
                if (parsed.size() != 1)
                    throw vortex_twm::InvalidConfigError("radius", "expected auto or one number");
                r = parsed.front();
            }
            report(vortex_twm::run_profile(load_with_warnings(config_path), id, r, out_dir));
        } else if (*verify) {
            const auto result = vortex_twm::verify(vortex_twm::parse_verify_level(level));
            std::cout << result.format();
            return result.passed() ? 0 : kExitVerification;
        }
    } catch (const vortex_twm::InvalidConfigError &e) {
        std::cerr << "invalid config: " << e.what() << '\n';
        return kExitInvalidConfig;
    } catch (const vortex_twm::IoError &e) {
        std::cerr << "I/O error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalidConfig;
    }
    return 0;
}
