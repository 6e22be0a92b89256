#include "vortex_twm/figures.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "vortex_twm/error.hpp"
#include "vortex_twm/pipeline.hpp"
#include "vortex_twm/render.hpp"

namespace vortex_twm
{

namespace
{

const double kDetuningSweep[] = {-9, -6, -3, 0, 3, 6, 9};

std::vector<FigureCell> charge_sweep(std::initializer_list<int> charges, int probe_tc)
{
    std::vector<FigureCell> cells;
    for (int lc : charges) {
        RunConfig c;
        c.control.tc = lc;
        c.probe_p.tc = probe_tc;
        c.probe_s.tc = probe_tc;
        cells.push_back({"lc_" + value_label(lc), c});
    }
    return cells;
}

std::vector<FigureCell> detuning_sweep()
{
    std::vector<FigureCell> cells;
    for (double delta : kDetuningSweep) {
        RunConfig c;
        c.medium.delta = delta;
        c.control.tc = c.probe_p.tc = c.probe_s.tc = 1;
        cells.push_back({"delta_" + value_label(delta), c});
    }
    return cells;
}

void write_panel(Manifest &manifest, const std::string &base, const ComplexField &field)
{
    write_intensity_pgm(field, ImageSpec{}, manifest.prepare(base + "_intensity.pgm"));
    manifest.add(base + "_intensity.pgm");
    write_phase_ppm(field, manifest.prepare(base + "_phase.ppm"));
    manifest.add(base + "_phase.ppm");
}

double max_intensity(const ComplexField &f)
{
    double m = 0.0;
    for (const auto &v : f.values)
        m = std::max(m, std::norm(v));
    return m;
}

} // namespace

std::string value_label(double v)
{
    std::string s = format_double(std::abs(v));
    return v < 0 ? "m" + s : s;
}

FigurePreset figure_preset(const std::string &id)
{
    if (id == "fig3")
        return {id, "TC transfer from the control to the generated fields; l_s = l_p = 0, l_c swept",
                charge_sweep({1, 2, 3}, 0)};
    if (id == "fig4")
        return {id, "resultant outputs for l_c = l_s = l_p = 1, detuning swept from -9 to 9",
                detuning_sweep()};
    if (id == "fig5")
        return {id, "azimuthal intensity profiles of the resultant outputs, detuning swept",
                detuning_sweep()};
    if (id == "fig6")
        return {id, "petal structures of the resultant outputs; l_s = l_p = 1, delta = 0, l_c swept",
                charge_sweep({2, 3, 4}, 1)};
    throw InvalidConfigError("figure", "unknown figure id '" + id + "' (expected fig3|fig4|fig5|fig6)");
}

Manifest reproduce_figure(const std::string &id, const std::filesystem::path &out_dir, int threads)
{
    const FigurePreset preset = figure_preset(id);
    Manifest manifest(out_dir);

    std::vector<Scene> scenes;
    std::vector<OutputFields> fields;
    for (const auto &cell : preset.cells) {
        scenes.emplace_back(cell.config);
        fields.push_back(scenes.back().evaluate(threads));
    }

    // Shared intensity scale so panels of one sweep are directly comparable.
    double common_scale = 0.0;
    for (const auto &f : fields)
        common_scale = std::max({common_scale, max_intensity(f.omega_d), max_intensity(f.omega_u)});

    std::ostringstream metrics;
    metrics << "cell,l_c,l_p,l_s,delta," << metrics_csv_header() << '\n';
    nlohmann::json cells = nlohmann::json::array();

    for (std::size_t i = 0; i < preset.cells.size(); ++i) {
        const auto &cell = preset.cells[i];
        const auto &f = fields[i];
        const std::string dir = id + "/" + cell.label + "/";

        if (id == "fig3") {
            write_panel(manifest, dir + "fp_z0", f.fp);
            write_panel(manifest, dir + "fs_zL", f.fs);
        } else if (id == "fig4" || id == "fig6") {
            write_panel(manifest, dir + "omega_d_z0", f.omega_d);
            write_panel(manifest, dir + "omega_u_zL", f.omega_u);
            if (id == "fig4" && common_scale > 0.0) {
                const auto spec = ImageSpec::fixed(common_scale);
                write_intensity_pgm(f.omega_d, spec, manifest.prepare(dir + "omega_d_z0_intensity_common.pgm"));
                manifest.add(dir + "omega_d_z0_intensity_common.pgm");
                write_intensity_pgm(f.omega_u, spec, manifest.prepare(dir + "omega_u_zL_intensity_common.pgm"));
                manifest.add(dir + "omega_u_zL_intensity_common.pgm");
            }
        }

        const SceneMetrics m = compute_metrics(scenes[i], f);
        if (id == "fig5") {
            for (auto fid : {FieldId::d, FieldId::u}) {
                const std::string rel = dir + "profile_omega_" + to_string(fid) + ".csv";
                write_profile_csv(azimuthal_profile(scenes[i].sampler(fid), m.analysis_radius,
                                                    cell.config.analysis.m),
                                  manifest.prepare(rel));
                manifest.add(rel);
            }
        }

        const auto &c = cell.config;
        metrics << cell.label << ',' << c.control.tc << ',' << c.probe_p.tc << ',' << c.probe_s.tc
                << ',' << format_double(c.medium.delta) << ',' << metrics_csv_row(m) << '\n';
        cells.push_back({{"label", cell.label}, {"config", to_json(c)}});
    }
    manifest.add_text(id + "/metrics.csv", metrics.str());

    nlohmann::json header;
    header["kind"] = "figure";
    header["figure"] = id;
    header["description"] = preset.description;
    header["cells"] = cells;
    header["notes"] = "swept charge and detuning values are preset choices; profiles and peak "
                      "angles are evaluated in closed form on the analysis ring";
    if (id == "fig4")
        header["common_intensity_scale"] = common_scale;
    manifest.write(header);
    return manifest;
}

} // namespace vortex_twm
