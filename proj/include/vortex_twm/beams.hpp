// beams.hpp - transverse sampling grid and Laguerre-Gaussian input beams.
//
// All transverse lengths are in units of the beam waist. Samples are stored
// row-major with row 0 at y = -extent (y increases with the row index).

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace vortex_twm
{

using complex = std::complex<double>;

struct Grid2D
{
    int n = 256;
    double extent = 3.0;

    double spacing() const noexcept { return n > 1 ? 2.0 * extent / (n - 1) : 0.0; }
    double coord(int i) const noexcept;
    double x(std::size_t index) const noexcept { return coord(static_cast<int>(index % n)); }
    double y(std::size_t index) const noexcept { return coord(static_cast<int>(index / n)); }
    double r(std::size_t index) const noexcept;
    // atan2 convention folded onto (-pi, pi].
    double theta(std::size_t index) const noexcept;
    std::size_t size() const noexcept { return static_cast<std::size_t>(n) * n; }

    bool operator==(const Grid2D &) const = default;
};

// Rejects n < 2 or extent <= 0 with InvalidConfigError.
Grid2D make_grid(int n, double extent);

// Throws InvalidConfigError("grid.n") unless n >= 8 * (max_abs_charge + 1).
void check_azimuthal_resolution(const Grid2D &grid, int max_abs_charge);

// Folds atan2(y, x) onto (-pi, pi].
double azimuth(double x, double y) noexcept;

struct LGBeamSpec
{
    double epsilon = 0.0;
    int tc = 0;
    double waist = 1.0;

    void validate(const char *name) const;
};

struct ComplexField
{
    Grid2D grid;
    std::vector<complex> values;

    ComplexField() = default;
    explicit ComplexField(Grid2D g) : grid(g), values(g.size()) {}
    ComplexField(Grid2D g, std::vector<complex> v);

    complex &operator[](std::size_t i) { return values[i]; }
    const complex &operator[](std::size_t i) const { return values[i]; }
    complex &at(int ix, int iy) { return values[static_cast<std::size_t>(iy) * grid.n + ix]; }
    const complex &at(int ix, int iy) const { return values[static_cast<std::size_t>(iy) * grid.n + ix]; }

    double max_abs() const noexcept;
    std::span<const complex> view() const noexcept { return values; }
};

// epsilon * (r/w)^|l| * exp(-(r/w)^2) * exp(i l theta)
complex lg_value(const LGBeamSpec &spec, double x, double y);

ComplexField sample_lg(const LGBeamSpec &spec, const Grid2D &grid);

} // namespace vortex_twm
