#include "vortex_twm/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "vortex_twm/error.hpp"

namespace vortex_twm
{

namespace
{

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_samples(int m)
{
    if (m < 16)
        throw InvalidConfigError("analysis.m", "need at least 16 azimuthal samples, got " +
                                                   std::to_string(m));
}

void check_radius(const Grid2D &grid, double radius)
{
    if (!(radius >= 0.0) || radius > grid.extent * (1.0 + 1e-12))
        throw OutOfGridError("ring radius " + std::to_string(radius) + " outside grid extent " +
                             std::to_string(grid.extent));
}

// DFT coefficient of the profile at harmonic k, angles reduced mod m for accuracy.
complex harmonic(const std::vector<double> &values, int k)
{
    const auto m = static_cast<long>(values.size());
    complex sum{};
    for (long j = 0; j < m; ++j) {
        const double phase = -kTwoPi * static_cast<double>((j * k) % m) / static_cast<double>(m);
        sum += values[j] * std::polar(1.0, phase);
    }
    return sum;
}

} // namespace

double wrap_angle(double a) noexcept
{
    a = std::remainder(a, kTwoPi);
    if (a <= -std::numbers::pi)
        a += kTwoPi;
    return a;
}

complex bilinear(const ComplexField &field, double x, double y)
{
    const Grid2D &g = field.grid;
    const double tol = 1e-12 * g.extent;
    if (std::abs(x) > g.extent + tol || std::abs(y) > g.extent + tol)
        throw OutOfGridError("point outside the sampled grid");
    if (g.n < 2)
        return field[0];
    const double h = g.spacing();
    const double fx = std::clamp((x + g.extent) / h, 0.0, g.n - 1.0);
    const double fy = std::clamp((y + g.extent) / h, 0.0, g.n - 1.0);
    const int ix = std::min(static_cast<int>(fx), g.n - 2);
    const int iy = std::min(static_cast<int>(fy), g.n - 2);
    const double tx = fx - ix;
    const double ty = fy - iy;
    return (1.0 - ty) * ((1.0 - tx) * field.at(ix, iy) + tx * field.at(ix + 1, iy)) +
           ty * ((1.0 - tx) * field.at(ix, iy + 1) + tx * field.at(ix + 1, iy + 1));
}

FieldSampler grid_sampler(const ComplexField &field)
{
    return [&field](double x, double y) { return bilinear(field, x, y); };
}

AzimuthalProfile azimuthal_profile(const FieldSampler &sampler, double radius, int m)
{
    check_samples(m);
    AzimuthalProfile profile;
    profile.radius = radius;
    profile.thetas.resize(m);
    profile.intensities.resize(m);
    for (int k = 0; k < m; ++k) {
        const double theta = kTwoPi * k / m;
        profile.thetas[k] = theta;
        profile.intensities[k] =
            std::norm(sampler(radius * std::cos(theta), radius * std::sin(theta)));
    }
    return profile;
}

AzimuthalProfile azimuthal_profile(const ComplexField &field, double radius, int m)
{
    check_radius(field.grid, radius);
    return azimuthal_profile(grid_sampler(field), radius, m);
}

int winding_number(const ComplexField &field, double radius, int m)
{
    check_radius(field.grid, radius);
    check_samples(m);
    const double floor = 1e-12 * field.max_abs();
    std::vector<complex> ring(m);
    for (int k = 0; k < m; ++k) {
        const double theta = kTwoPi * k / m;
        ring[k] = bilinear(field, radius * std::cos(theta), radius * std::sin(theta));
        if (!(std::abs(ring[k]) > floor))
            throw AmplitudeFloorError("field amplitude below floor on ring r = " +
                                      std::to_string(radius));
    }
    double total = 0.0;
    for (int k = 0; k < m; ++k)
        total += std::arg(ring[(k + 1) % m] * std::conj(ring[k]));
    const double turns = total / kTwoPi;
    const double rounded = std::round(turns);
    if (std::abs(turns - rounded) > 0.05)
        throw NonIntegerWindingError("winding " + std::to_string(turns) + " is not an integer");
    return static_cast<int>(rounded);
}

int winding_number(const ComplexField &field)
{
    return winding_number(field, ring_radius(field));
}

double harmonic_ratio(const AzimuthalProfile &profile, int k)
{
    const double f0 = std::abs(harmonic(profile.intensities, 0));
    if (f0 == 0.0)
        return 0.0;
    return std::abs(harmonic(profile.intensities, k)) / f0;
}

int petal_count(const AzimuthalProfile &profile)
{
    const int m = static_cast<int>(profile.size());
    const double f0 = std::abs(harmonic(profile.intensities, 0));
    int best = 0;
    double best_mag = 0.0;
    for (int k = 1; 2 * k < m; ++k) {
        const double mag = std::abs(harmonic(profile.intensities, k));
        if (mag > best_mag) {
            best_mag = mag;
            best = k;
        }
    }
    if (best_mag < kStructureFloor * f0 || best_mag == 0.0)
        return 0;
    return best;
}

double peak_angle(const AzimuthalProfile &profile)
{
    if (petal_count(profile) == 0)
        throw StructurelessProfileError("profile has no azimuthal structure");
    const auto &v = profile.intensities;
    const int m = static_cast<int>(v.size());
    const int i = static_cast<int>(std::max_element(v.begin(), v.end()) - v.begin());
    const double prev = v[(i + m - 1) % m];
    const double next = v[(i + 1) % m];
    const double curvature = prev - 2.0 * v[i] + next;
    double offset = 0.0;
    if (curvature < 0.0)
        offset = std::clamp(0.5 * (prev - next) / curvature, -0.5, 0.5);
    double theta = (i + offset) * kTwoPi / m;
    theta = std::fmod(theta, kTwoPi);
    if (theta < 0.0)
        theta += kTwoPi;
    return theta;
}

double peak_to_valley(const AzimuthalProfile &profile)
{
    const auto [lo, hi] = std::minmax_element(profile.intensities.begin(), profile.intensities.end());
    return *hi - *lo;
}

double ring_radius(const ComplexField &field)
{
    if (field.max_abs() == 0.0)
        throw ZeroFieldError("ring radius of an all-zero field");
    const Grid2D &g = field.grid;
    const double step = 0.5 * g.spacing();
    const int count = static_cast<int>(std::floor(g.extent / step + 1e-9));
    double best_r = 0.0;
    double best_mean = -1.0;
    for (int k = 0; k <= count; ++k) {
        const double r = std::min(k * step, g.extent);
        const auto profile = azimuthal_profile(field, r, kDefaultAzimuthalSamples);
        double mean = 0.0;
        for (double v : profile.intensities)
            mean += v;
        mean /= static_cast<double>(profile.size());
        if (mean > best_mean) {
            best_mean = mean;
            best_r = r;
        }
    }
    return best_r;
}

} // namespace vortex_twm
