// analysis.hpp - observables extracted from complex fields: winding number,
// azimuthal intensity profiles, petal counts, peak angles and ring radii.
//
// Ring samples are taken at theta_k = 2 pi k / m, counterclockwise from +x.

#pragma once

#include <functional>
#include <vector>

#include "vortex_twm/beams.hpp"

namespace vortex_twm
{

inline constexpr int kDefaultAzimuthalSamples = 720;

// Fourier harmonics weaker than this fraction of the mean are treated as
// roundoff rather than azimuthal structure.
inline constexpr double kStructureFloor = 1e-12;

// Field value at an arbitrary transverse point (x, y).
using FieldSampler = std::function<complex(double, double)>;

struct AzimuthalProfile
{
    double radius = 0.0;
    std::vector<double> thetas;
    std::vector<double> intensities;

    std::size_t size() const noexcept { return intensities.size(); }
};

// Bilinear interpolation; throws OutOfGridError outside the sampled square.
complex bilinear(const ComplexField &field, double x, double y);

// Sampler reading `field` through bilinear interpolation.
FieldSampler grid_sampler(const ComplexField &field);

AzimuthalProfile azimuthal_profile(const ComplexField &field, double radius,
                                   int m = kDefaultAzimuthalSamples);

// Same ring sampling, but evaluating a closed-form field exactly at each point.
AzimuthalProfile azimuthal_profile(const FieldSampler &sampler, double radius,
                                   int m = kDefaultAzimuthalSamples);

int winding_number(const ComplexField &field, double radius, int m = kDefaultAzimuthalSamples);

// Winding on the ring of maximum azimuthally averaged intensity.
int winding_number(const ComplexField &field);

// Dominant Fourier harmonic k in [1, m/2); 0 when nothing rises above the floor.
int petal_count(const AzimuthalProfile &profile);

// |F_k| / |F_0| of the intensity profile.
double harmonic_ratio(const AzimuthalProfile &profile, int k);

// Global maximum refined by a three-point parabola, wrapped to [0, 2 pi).
double peak_angle(const AzimuthalProfile &profile);

double peak_to_valley(const AzimuthalProfile &profile);

// Radius of maximum azimuthally averaged intensity, scanned at half-pixel spacing.
double ring_radius(const ComplexField &field);

// Wraps an angle onto (-pi, pi].
double wrap_angle(double a) noexcept;

} // namespace vortex_twm
