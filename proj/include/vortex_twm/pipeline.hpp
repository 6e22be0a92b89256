// pipeline.hpp - evaluating a configured scene and writing its products.

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "vortex_twm/analysis.hpp"
#include "vortex_twm/config.hpp"
#include "vortex_twm/manifest.hpp"
#include "vortex_twm/propagation.hpp"

namespace vortex_twm
{

enum class FieldId
{
    d,
    u,
    fp,
    fs,
    p,
    s,
    control
};

// "d", "u", "fp", "fs", "p", "s", "control"
FieldId parse_field_id(const std::string &name);
std::string to_string(FieldId id);

// p and s select the transmitted probes (Wp at z = L, Ws at z = 0).
const ComplexField &select_field(const OutputFields &fields, FieldId id);
complex select_value(const PixelOutputs &px, FieldId id);

class Scene
{
public:
    explicit Scene(RunConfig config);

    const RunConfig &config() const noexcept { return config_; }
    Grid2D grid() const;

    PixelOutputs at(double x, double y) const;
    FieldSampler sampler(FieldId id) const;
    OutputFields evaluate(int threads = 0) const;

private:
    RunConfig config_;
};

struct SceneMetrics
{
    std::optional<int> winding_fp;
    std::optional<int> winding_fs;
    std::optional<double> ring_fp;
    std::optional<double> ring_fs;
    double analysis_radius = 0.0;
    int petals_d = 0;
    int petals_u = 0;
    std::optional<double> peak_d;
    std::optional<double> peak_u;
    double spread_d = 0.0;
    double spread_u = 0.0;
    double mean_d = 0.0;
    double mean_u = 0.0;
};

// Shared ring for both outputs: the configured radius, else the ring of maximum
// |Wfp|^2 + |Wfs|^2 (ring_radius(omega_d) when no field is generated).
double output_analysis_radius(const RunConfig &config, const OutputFields &fields);

// Winding and ring radius come from the sampled grid fields; the output profiles
// are evaluated exactly on the ring through the scene.
SceneMetrics compute_metrics(const Scene &scene, const OutputFields &fields);

std::string metrics_csv_header();
std::string metrics_csv_row(const SceneMetrics &m);

// Writes the products requested by the scene's config under `prefix`.
void write_products(const Scene &scene, const OutputFields &fields, Manifest &manifest,
                    const std::string &prefix, std::optional<SceneMetrics> &metrics);

// Computes every field and writes the requested products plus manifest.json.
Manifest run_config(const RunConfig &config, const std::filesystem::path &out_dir,
                    int threads = 0);

enum class SweepParam
{
    delta,   // medium.delta
    lc,      // control.tc
    amp      // control.epsilon
};

SweepParam parse_sweep_param(const std::string &name);
std::string to_string(SweepParam p);
RunConfig apply_sweep_value(RunConfig config, SweepParam param, double value);

// One sub-directory per value plus sweep_metrics.csv.
Manifest run_sweep(const RunConfig &base, SweepParam param, const std::vector<double> &values,
                   const std::filesystem::path &out_dir, int threads = 0);

// Azimuthal profile of one field; radius nullopt = that field's ring radius.
Manifest run_profile(const RunConfig &config, FieldId field, std::optional<double> radius,
                     const std::filesystem::path &out_dir, int threads = 0);

} // namespace vortex_twm
