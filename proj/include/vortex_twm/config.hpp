// config.hpp - JSON run configuration.

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "vortex_twm/beams.hpp"
#include "vortex_twm/medium.hpp"

namespace vortex_twm
{

enum class Product
{
    fields,
    images,
    profiles,
    metrics
};

std::string to_string(Product p);
Product parse_product(const std::string &name);

struct GridConfig
{
    int n = 256;
    double extent = 3.0;
};

struct AnalysisConfig
{
    std::optional<double> radius;   // nullopt = "auto"
    int m = 720;
};

struct RunConfig
{
    MediumParams medium;
    LGBeamSpec control{4.0, 1, 1.0};
    LGBeamSpec probe_p{0.005, 0, 1.0};
    LGBeamSpec probe_s{0.005, 0, 1.0};
    GridConfig grid;
    std::vector<Product> outputs{Product::fields, Product::images, Product::profiles,
                                 Product::metrics};
    AnalysisConfig analysis;

    bool wants(Product p) const;
    int max_abs_charge() const;

    // Throws InvalidConfigError naming the offending key.
    void validate() const;

    // Weak-probe validity warnings; empty when the model applies.
    std::vector<std::string> warnings() const;
};

nlohmann::json to_json(const RunConfig &config);

// Missing keys fall back to the defaults above; wrong types or values throw
// InvalidConfigError.
RunConfig config_from_json(const nlohmann::json &doc);

RunConfig load_config(const std::filesystem::path &path);

} // namespace vortex_twm
