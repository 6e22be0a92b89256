#include "vortex_twm/render.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "vortex_twm/error.hpp"

namespace vortex_twm
{

namespace
{

std::uint8_t quantize(double unit)
{
    const double v = std::floor(255.0 * unit + 0.5);
    return static_cast<std::uint8_t>(std::clamp(v, 0.0, 255.0));
}

std::ofstream open_output(const std::filesystem::path &path)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot open " + path.string() + " for writing");
    return out;
}

void finish(std::ofstream &out, const std::filesystem::path &path)
{
    out.flush();
    if (!out)
        throw IoError("write failed for " + path.string());
}

void write_binary_image(const std::filesystem::path &path, const char *magic, int n,
                        const std::vector<std::uint8_t> &pixels)
{
    auto out = open_output(path);
    out << magic << '\n' << n << ' ' << n << '\n' << 255 << '\n';
    out.write(reinterpret_cast<const char *>(pixels.data()),
              static_cast<std::streamsize>(pixels.size()));
    finish(out, path);
}

double parse_double(std::string_view text, const std::filesystem::path &path)
{
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw IoError("malformed number '" + std::string(text) + "' in " + path.string());
    return v;
}

} // namespace

ImageSpec ImageSpec::fixed(double value, double gamma)
{
    ImageSpec spec;
    spec.normalization = Normalization::fixed_scale;
    spec.scale = value;
    spec.gamma = gamma;
    spec.validate();
    return spec;
}

void ImageSpec::validate() const
{
    if (!(gamma > 0.0))
        throw InvalidConfigError("image.gamma", "must be positive");
    if (normalization == Normalization::fixed_scale && !(scale > 0.0))
        throw InvalidConfigError("image.scale", "fixed scale must be positive");
}

std::string format_double(double v)
{
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, ptr);
}

std::vector<std::uint8_t> intensity_pixels(const ComplexField &field, const ImageSpec &spec)
{
    spec.validate();
    const int n = field.grid.n;
    double reference = spec.scale;
    if (spec.normalization == ImageSpec::Normalization::per_image_max) {
        reference = 0.0;
        for (const auto &v : field.values)
            reference = std::max(reference, std::norm(v));
    }
    std::vector<std::uint8_t> pixels(field.values.size(), 0);
    if (reference == 0.0)
        return pixels;
    std::size_t out = 0;
    for (int iy = n - 1; iy >= 0; --iy)
        for (int ix = 0; ix < n; ++ix)
            pixels[out++] = quantize(std::pow(std::norm(field.at(ix, iy)) / reference, spec.gamma));
    return pixels;
}

std::array<std::uint8_t, 3> hue_to_rgb(double hue)
{
    double h6 = 6.0 * (hue - std::floor(hue));
    if (h6 >= 6.0)
        h6 = 0.0;
    const int sector = static_cast<int>(h6);
    const double f = h6 - sector;
    double r = 0, g = 0, b = 0;
    switch (sector) {
    case 0: r = 1; g = f; b = 0; break;
    case 1: r = 1 - f; g = 1; b = 0; break;
    case 2: r = 0; g = 1; b = f; break;
    case 3: r = 0; g = 1 - f; b = 1; break;
    case 4: r = f; g = 0; b = 1; break;
    default: r = 1; g = 0; b = 1 - f; break;
    }
    return {quantize(r), quantize(g), quantize(b)};
}

std::vector<std::uint8_t> phase_pixels(const ComplexField &field)
{
    const int n = field.grid.n;
    const double floor = 1e-12 * field.max_abs();
    std::vector<std::uint8_t> pixels(3 * field.values.size(), 0);
    std::size_t out = 0;
    for (int iy = n - 1; iy >= 0; --iy) {
        for (int ix = 0; ix < n; ++ix, out += 3) {
            const complex v = field.at(ix, iy);
            if (!(std::abs(v) >= floor) || std::abs(v) == 0.0)
                continue;
            const double hue = (std::arg(v) + std::numbers::pi) / (2.0 * std::numbers::pi);
            const auto rgb = hue_to_rgb(hue);
            std::copy(rgb.begin(), rgb.end(), pixels.begin() + static_cast<std::ptrdiff_t>(out));
        }
    }
    return pixels;
}

void write_intensity_pgm(const ComplexField &field, const ImageSpec &spec,
                         const std::filesystem::path &path)
{
    write_binary_image(path, "P5", field.grid.n, intensity_pixels(field, spec));
}

void write_phase_ppm(const ComplexField &field, const std::filesystem::path &path)
{
    write_binary_image(path, "P6", field.grid.n, phase_pixels(field));
}

void write_field_csv(const ComplexField &field, const std::filesystem::path &path)
{
    auto out = open_output(path);
    std::string line;
    out << "x,y,re,im\n";
    for (std::size_t i = 0; i < field.values.size(); ++i) {
        line.clear();
        line += format_double(field.grid.x(i));
        line += ',';
        line += format_double(field.grid.y(i));
        line += ',';
        line += format_double(field[i].real());
        line += ',';
        line += format_double(field[i].imag());
        line += '\n';
        out << line;
    }
    finish(out, path);
}

ComplexField read_field_csv(const std::filesystem::path &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open " + path.string());
    std::string line;
    if (!std::getline(in, line) || line != "x,y,re,im")
        throw IoError("missing 'x,y,re,im' header in " + path.string());

    std::vector<complex> values;
    double extent = 0.0;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        double cols[4];
        std::string_view rest(line);
        for (int c = 0; c < 4; ++c) {
            const auto comma = rest.find(',');
            if ((c < 3) != (comma != std::string_view::npos))
                throw IoError("expected 4 columns in " + path.string());
            cols[c] = parse_double(rest.substr(0, comma), path);
            rest = c < 3 ? rest.substr(comma + 1) : std::string_view{};
        }
        extent = std::max(extent, std::abs(cols[0]));
        values.emplace_back(cols[2], cols[3]);
    }
    const auto n = static_cast<int>(std::llround(std::sqrt(static_cast<double>(values.size()))));
    if (static_cast<std::size_t>(n) * n != values.size() || n == 0)
        throw IoError(path.string() + " does not hold a square grid");
    return ComplexField(Grid2D{n, extent}, std::move(values));
}

void write_profile_csv(const AzimuthalProfile &profile, const std::filesystem::path &path)
{
    auto out = open_output(path);
    out << "theta,intensity\n";
    for (std::size_t k = 0; k < profile.size(); ++k)
        out << format_double(profile.thetas[k]) << ',' << format_double(profile.intensities[k])
            << '\n';
    finish(out, path);
}

} // namespace vortex_twm
