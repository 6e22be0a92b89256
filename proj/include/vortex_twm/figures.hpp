// figures.hpp - preset parameter matrices for the fig3..fig6 reproductions.

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "vortex_twm/config.hpp"
#include "vortex_twm/manifest.hpp"

namespace vortex_twm
{

struct FigureCell
{
    std::string label;   // e.g. "lc_2" or "delta_m3"
    RunConfig config;
};

struct FigurePreset
{
    std::string id;
    std::string description;
    std::vector<FigureCell> cells;
};

// Throws InvalidConfigError("figure") for ids other than fig3..fig6.
FigurePreset figure_preset(const std::string &id);

Manifest reproduce_figure(const std::string &id, const std::filesystem::path &out_dir,
                          int threads = 0);

// Label-safe rendering of a signed number: -3 -> "m3", 0.5 -> "0.5".
std::string value_label(double v);

} // namespace vortex_twm
