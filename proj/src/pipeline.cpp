#include "vortex_twm/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "vortex_twm/error.hpp"
#include "vortex_twm/figures.hpp"
#include "vortex_twm/render.hpp"

namespace vortex_twm
{

FieldId parse_field_id(const std::string &name)
{
    for (auto id : {FieldId::d, FieldId::u, FieldId::fp, FieldId::fs, FieldId::p, FieldId::s,
                    FieldId::control})
        if (to_string(id) == name)
            return id;
    throw InvalidConfigError("field", "unknown field '" + name + "' (expected d|u|fp|fs|p|s)");
}

std::string to_string(FieldId id)
{
    switch (id) {
    case FieldId::d: return "d";
    case FieldId::u: return "u";
    case FieldId::fp: return "fp";
    case FieldId::fs: return "fs";
    case FieldId::p: return "p";
    case FieldId::s: return "s";
    case FieldId::control: return "control";
    }
    return "d";
}

const ComplexField &select_field(const OutputFields &f, FieldId id)
{
    switch (id) {
    case FieldId::d: return f.omega_d;
    case FieldId::u: return f.omega_u;
    case FieldId::fp: return f.fp;
    case FieldId::fs: return f.fs;
    case FieldId::p: return f.p_out;
    case FieldId::s: return f.s_out;
    case FieldId::control: break;
    }
    throw InvalidConfigError("field", "the control field is not part of the propagated outputs");
}

complex select_value(const PixelOutputs &px, FieldId id)
{
    switch (id) {
    case FieldId::d: return px.omega_d;
    case FieldId::u: return px.omega_u;
    case FieldId::fp: return px.fp;
    case FieldId::fs: return px.fs;
    case FieldId::p: return px.p_out;
    case FieldId::s: return px.s_out;
    case FieldId::control: return px.control;
    }
    return {};
}

Scene::Scene(RunConfig config) : config_(std::move(config))
{
    config_.validate();
}

Grid2D Scene::grid() const
{
    return make_grid(config_.grid.n, config_.grid.extent);
}

PixelOutputs Scene::at(double x, double y) const
{
    return solve_pixel(config_.medium, lg_value(config_.control, x, y),
                       lg_value(config_.probe_p, x, y), lg_value(config_.probe_s, x, y));
}

FieldSampler Scene::sampler(FieldId id) const
{
    return [this, id](double x, double y) { return select_value(at(x, y), id); };
}

OutputFields Scene::evaluate(int threads) const
{
    const Grid2D g = grid();
    return output_fields(config_.medium, sample_lg(config_.control, g),
                         sample_lg(config_.probe_p, g), sample_lg(config_.probe_s, g), threads);
}

double output_analysis_radius(const RunConfig &config, const OutputFields &fields)
{
    if (config.analysis.radius)
        return *config.analysis.radius;
    // The azimuthal structure of both outputs is the probe/generated interference
    // term, so analyse it where the generated fields are brightest.
    ComplexField generated(fields.fp.grid);
    for (std::size_t i = 0; i < generated.values.size(); ++i)
        generated[i] = std::sqrt(std::norm(fields.fp[i]) + std::norm(fields.fs[i]));
    if (generated.max_abs() == 0.0)
        return ring_radius(fields.omega_d);
    return ring_radius(generated);
}

SceneMetrics compute_metrics(const Scene &scene, const OutputFields &fields)
{
    SceneMetrics m;
    auto ring_and_winding = [](const ComplexField &f, std::optional<double> &ring,
                               std::optional<int> &winding) {
        try {
            ring = ring_radius(f);
            winding = winding_number(f, *ring);
        } catch (const Error &) {
            // Left empty: zero field or phase undefined on the ring.
        }
    };
    ring_and_winding(fields.fp, m.ring_fp, m.winding_fp);
    ring_and_winding(fields.fs, m.ring_fs, m.winding_fs);

    m.analysis_radius = output_analysis_radius(scene.config(), fields);
    const int samples = scene.config().analysis.m;
    const auto pd = azimuthal_profile(scene.sampler(FieldId::d), m.analysis_radius, samples);
    const auto pu = azimuthal_profile(scene.sampler(FieldId::u), m.analysis_radius, samples);
    m.petals_d = petal_count(pd);
    m.petals_u = petal_count(pu);
    if (m.petals_d > 0)
        m.peak_d = peak_angle(pd);
    if (m.petals_u > 0)
        m.peak_u = peak_angle(pu);
    m.spread_d = peak_to_valley(pd);
    m.spread_u = peak_to_valley(pu);
    for (double v : pd.intensities)
        m.mean_d += v / pd.size();
    for (double v : pu.intensities)
        m.mean_u += v / pu.size();
    return m;
}

std::string metrics_csv_header()
{
    return "radius,winding_fp,winding_fs,ring_fp,ring_fs,petals_d,petals_u,peak_d,peak_u,"
           "spread_d,spread_u,mean_d,mean_u";
}

std::string metrics_csv_row(const SceneMetrics &m)
{
    auto opt = [](const auto &v) -> std::string {
        if (!v)
            return "NA";
        if constexpr (std::is_same_v<std::decay_t<decltype(*v)>, int>)
            return std::to_string(*v);
        else
            return format_double(*v);
    };
    std::ostringstream row;
    row << format_double(m.analysis_radius) << ',' << opt(m.winding_fp) << ',' << opt(m.winding_fs)
        << ',' << opt(m.ring_fp) << ',' << opt(m.ring_fs) << ',' << m.petals_d << ','
        << m.petals_u << ',' << opt(m.peak_d) << ',' << opt(m.peak_u) << ','
        << format_double(m.spread_d) << ',' << format_double(m.spread_u) << ','
        << format_double(m.mean_d) << ',' << format_double(m.mean_u);
    return row.str();
}

void write_products(const Scene &scene, const OutputFields &fields, Manifest &manifest,
                    const std::string &prefix, std::optional<SceneMetrics> &metrics)
{
    const RunConfig &config = scene.config();
    if (config.wants(Product::fields)) {
        const auto control = sample_lg(config.control, scene.grid());
        const std::pair<const char *, const ComplexField *> dumps[] = {
            {"control", &control},         {"p_z0", &fields.p_in},     {"s_zL", &fields.s_in},
            {"p_zL", &fields.p_out},       {"s_z0", &fields.s_out},    {"fp_z0", &fields.fp},
            {"fs_zL", &fields.fs},         {"omega_d_z0", &fields.omega_d},
            {"omega_u_zL", &fields.omega_u}};
        for (const auto &[name, field] : dumps) {
            const std::string rel = prefix + "fields/" + name + ".csv";
            write_field_csv(*field, manifest.prepare(rel));
            manifest.add(rel);
        }
    }

    if (config.wants(Product::images)) {
        const std::pair<const char *, const ComplexField *> panels[] = {
            {"fp_z0", &fields.fp},
            {"fs_zL", &fields.fs},
            {"omega_d_z0", &fields.omega_d},
            {"omega_u_zL", &fields.omega_u}};
        for (const auto &[name, field] : panels) {
            const std::string base = prefix + "images/" + name;
            write_intensity_pgm(*field, ImageSpec{}, manifest.prepare(base + "_intensity.pgm"));
            manifest.add(base + "_intensity.pgm");
            write_phase_ppm(*field, manifest.prepare(base + "_phase.ppm"));
            manifest.add(base + "_phase.ppm");
        }
    }

    if (config.wants(Product::profiles) || config.wants(Product::metrics))
        metrics = compute_metrics(scene, fields);

    if (config.wants(Product::profiles)) {
        for (auto id : {FieldId::d, FieldId::u}) {
            const std::string rel = prefix + "profiles/omega_" + to_string(id) + ".csv";
            write_profile_csv(
                azimuthal_profile(scene.sampler(id), metrics->analysis_radius, config.analysis.m),
                manifest.prepare(rel));
            manifest.add(rel);
        }
    }

    if (config.wants(Product::metrics))
        manifest.add_text(prefix + "metrics.csv",
                          metrics_csv_header() + "\n" + metrics_csv_row(*metrics) + "\n");
}

namespace
{

nlohmann::json run_header(const std::string &kind, const RunConfig &config)
{
    nlohmann::json header;
    header["kind"] = kind;
    header["config"] = to_json(config);
    header["warnings"] = config.warnings();
    return header;
}

} // namespace

Manifest run_config(const RunConfig &config, const std::filesystem::path &out_dir, int threads)
{
    const Scene scene(config);
    const auto fields = scene.evaluate(threads);
    Manifest manifest(out_dir);
    std::optional<SceneMetrics> metrics;
    write_products(scene, fields, manifest, "", metrics);

    auto header = run_header("fields", config);
    if (metrics)
        header["analysis"] = {{"radius", metrics->analysis_radius},
                              {"ring_sampling", "closed-form evaluation on the ring"}};
    manifest.write(header);
    return manifest;
}

SweepParam parse_sweep_param(const std::string &name)
{
    if (name == "delta")
        return SweepParam::delta;
    if (name == "lc")
        return SweepParam::lc;
    if (name == "amp")
        return SweepParam::amp;
    throw InvalidConfigError("param", "expected delta|lc|amp, got '" + name + "'");
}

std::string to_string(SweepParam p)
{
    switch (p) {
    case SweepParam::delta: return "delta";
    case SweepParam::lc: return "lc";
    case SweepParam::amp: return "amp";
    }
    return "delta";
}

RunConfig apply_sweep_value(RunConfig config, SweepParam param, double value)
{
    switch (param) {
    case SweepParam::delta:
        config.medium.delta = value;
        break;
    case SweepParam::lc:
        if (value != std::round(value))
            throw InvalidConfigError("values", "topological charge must be an integer");
        config.control.tc = static_cast<int>(value);
        break;
    case SweepParam::amp:
        config.control.epsilon = value;
        break;
    }
    config.validate();
    return config;
}

Manifest run_sweep(const RunConfig &base, SweepParam param, const std::vector<double> &values,
                   const std::filesystem::path &out_dir, int threads)
{
    if (values.empty())
        throw InvalidConfigError("values", "sweep needs at least one value");
    std::vector<RunConfig> configs;
    for (double v : values)
        configs.push_back(apply_sweep_value(base, param, v));

    Manifest manifest(out_dir);
    std::ostringstream table;
    table << to_string(param) << ',' << metrics_csv_header() << '\n';
    nlohmann::json cells = nlohmann::json::array();
    for (std::size_t i = 0; i < configs.size(); ++i) {
        RunConfig cfg = configs[i];
        if (std::find(cfg.outputs.begin(), cfg.outputs.end(), Product::metrics) == cfg.outputs.end())
            cfg.outputs.push_back(Product::metrics);
        const std::string label = to_string(param) + "_" + value_label(values[i]);
        const Scene scene(cfg);
        const auto fields = scene.evaluate(threads);
        std::optional<SceneMetrics> metrics;
        write_products(scene, fields, manifest, label + "/", metrics);
        table << format_double(values[i]) << ',' << metrics_csv_row(*metrics) << '\n';
        cells.push_back({{"label", label}, {"config", to_json(configs[i])}});
    }
    manifest.add_text("sweep_metrics.csv", table.str());

    auto header = run_header("sweep", base);
    header["param"] = to_string(param);
    header["values"] = values;
    header["cells"] = cells;
    manifest.write(header);
    return manifest;
}

Manifest run_profile(const RunConfig &config, FieldId field, std::optional<double> radius,
                     const std::filesystem::path &out_dir, int threads)
{
    const Scene scene(config);
    const auto fields = scene.evaluate(threads);
    const double r = radius ? *radius : ring_radius(select_field(fields, field));
    if (!(r >= 0.0) || r > config.grid.extent)
        throw InvalidConfigError("radius", "must lie within [0, grid.extent]");
    const auto profile = azimuthal_profile(scene.sampler(field), r, config.analysis.m);

    Manifest manifest(out_dir);
    const std::string rel = "profile_" + to_string(field) + ".csv";
    write_profile_csv(profile, manifest.prepare(rel));
    manifest.add(rel);

    auto header = run_header("profile", config);
    const int petals = petal_count(profile);
    header["profile"] = {{"field", to_string(field)},
                         {"radius", r},
                         {"petals", petals},
                         {"peak_to_valley", peak_to_valley(profile)}};
    if (petals > 0)
        header["profile"]["peak_angle"] = peak_angle(profile);
    manifest.write(header);
    return manifest;
}

} // namespace vortex_twm
