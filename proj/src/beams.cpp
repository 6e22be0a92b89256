#include "vortex_twm/beams.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "vortex_twm/error.hpp"

namespace vortex_twm
{

double Grid2D::coord(int i) const noexcept
{
    if (n < 2)
        return 0.0;
    // Mirror the upper half so the axis is exactly symmetric about 0.
    if (2 * i > n - 1)
        return -coord(n - 1 - i);
    return -extent + spacing() * i;
}

double Grid2D::r(std::size_t index) const noexcept
{
    return std::hypot(x(index), y(index));
}

double Grid2D::theta(std::size_t index) const noexcept
{
    return azimuth(x(index), y(index));
}

double azimuth(double x, double y) noexcept
{
    double t = std::atan2(y, x);
    if (t <= -std::numbers::pi)
        t = std::numbers::pi;
    return t;
}

Grid2D make_grid(int n, double extent)
{
    if (n < 2)
        throw InvalidConfigError("grid.n", "need at least 2 samples per axis, got " + std::to_string(n));
    if (!(extent > 0.0) || !std::isfinite(extent))
        throw InvalidConfigError("grid.extent", "must be positive and finite");
    return Grid2D{n, extent};
}

void check_azimuthal_resolution(const Grid2D &grid, int max_abs_charge)
{
    const int need = 8 * (max_abs_charge + 1);
    if (grid.n < need)
        throw InvalidConfigError("grid.n", "topological charge " + std::to_string(max_abs_charge) +
                                               " needs n >= " + std::to_string(need));
}

void LGBeamSpec::validate(const char *name) const
{
    const std::string prefix(name);
    if (!(waist > 0.0) || !std::isfinite(waist))
        throw InvalidConfigError(prefix + ".waist", "must be positive");
    if (!(epsilon >= 0.0) || !std::isfinite(epsilon))
        throw InvalidConfigError(prefix + ".epsilon", "must be non-negative");
}

ComplexField::ComplexField(Grid2D g, std::vector<complex> v) : grid(g), values(std::move(v))
{
    if (values.size() != grid.size())
        throw GridMismatchError("field has " + std::to_string(values.size()) + " values for a " +
                                std::to_string(grid.n) + "x" + std::to_string(grid.n) + " grid");
}

double ComplexField::max_abs() const noexcept
{
    double m = 0.0;
    for (const auto &v : values)
        m = std::max(m, std::abs(v));
    return m;
}

complex lg_value(const LGBeamSpec &spec, double x, double y)
{
    const double rho = std::hypot(x, y) / spec.waist;
    const int l = std::abs(spec.tc);
    const double amp = spec.epsilon * std::pow(rho, l) * std::exp(-rho * rho);
    if (spec.tc == 0)
        return {amp, 0.0};
    return std::polar(amp, spec.tc * azimuth(x, y));
}

ComplexField sample_lg(const LGBeamSpec &spec, const Grid2D &grid)
{
    ComplexField field(grid);
    for (std::size_t i = 0; i < grid.size(); ++i)
        field[i] = lg_value(spec, grid.x(i), grid.y(i));
    return field;
}

} // namespace vortex_twm
