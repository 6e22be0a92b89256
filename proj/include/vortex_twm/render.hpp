// render.hpp - byte-deterministic image and CSV serialisation.

#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "vortex_twm/analysis.hpp"
#include "vortex_twm/beams.hpp"

namespace vortex_twm
{

struct ImageSpec
{
    enum class Normalization
    {
        per_image_max,
        fixed_scale
    };

    Normalization normalization = Normalization::per_image_max;
    double scale = 1.0;   // reference intensity for fixed_scale
    double gamma = 1.0;

    static ImageSpec fixed(double value, double gamma = 1.0);
    void validate() const;
};

// Grayscale pixels, top row first (decreasing y). Exposed for tests.
std::vector<std::uint8_t> intensity_pixels(const ComplexField &field, const ImageSpec &spec);

// Hue wheel at full saturation and brightness; hue in [0, 1].
std::array<std::uint8_t, 3> hue_to_rgb(double hue);

std::vector<std::uint8_t> phase_pixels(const ComplexField &field);

void write_intensity_pgm(const ComplexField &field, const ImageSpec &spec,
                         const std::filesystem::path &path);
void write_phase_ppm(const ComplexField &field, const std::filesystem::path &path);
void write_field_csv(const ComplexField &field, const std::filesystem::path &path);
ComplexField read_field_csv(const std::filesystem::path &path);
void write_profile_csv(const AzimuthalProfile &profile, const std::filesystem::path &path);

// Shortest text that is locale independent and round-trips (17 significant digits).
std::string format_double(double v);

} // namespace vortex_twm
