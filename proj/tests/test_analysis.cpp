#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "vortex_twm/analysis.hpp"
#include "vortex_twm/error.hpp"
#include "vortex_twm/propagation.hpp"

using namespace vortex_twm;

namespace
{

constexpr double kTwoPi = 2.0 * std::numbers::pi;

ComplexField paint(const Grid2D &g, auto fn)
{
    ComplexField f(g);
    for (std::size_t i = 0; i < g.size(); ++i)
        f[i] = fn(g.x(i), g.y(i));
    return f;
}

ComplexField vortex(const Grid2D &g, int l)
{
    return paint(g, [l](double x, double y) {
        return std::exp(-(x * x + y * y)) * std::polar(1.0, l * std::atan2(y, x));
    });
}

AzimuthalProfile synthetic(int m, auto fn)
{
    AzimuthalProfile p;
    p.radius = 1.0;
    for (int k = 0; k < m; ++k) {
        const double t = kTwoPi * k / m;
        p.thetas.push_back(t);
        p.intensities.push_back(fn(t));
    }
    return p;
}

double angular_distance(double a, double b)
{
    return std::abs(wrap_angle(a - b));
}

} // namespace

TEST_CASE("winding examples")
{
    const Grid2D g = make_grid(128, 3.0);
    CHECK(winding_number(vortex(g, 1), 1.0) == 1);
    CHECK(winding_number(vortex(g, -3), 1.0) == -3);
    CHECK(winding_number(vortex(g, 2)) == 2);
    CHECK(winding_number(vortex(g, 0), 1.0) == 0);
}

TEST_CASE("winding invariants")
{
    const Grid2D g = make_grid(128, 3.0);
    for (int l : {-2, 1, 4}) {
        const auto f = vortex(g, l);
        ComplexField conj(g), scaled(g);
        for (std::size_t i = 0; i < g.size(); ++i) {
            conj[i] = std::conj(f[i]);
            scaled[i] = complex(-3.0, 0.7) * f[i];
        }
        CHECK(winding_number(conj, 1.0) == -winding_number(f, 1.0));
        CHECK(winding_number(scaled, 1.0) == winding_number(f, 1.0));
    }
}

TEST_CASE("winding on a dark ring")
{
    const Grid2D g = make_grid(64, 3.0);
    auto f = vortex(g, 1);
    for (std::size_t i = 0; i < g.size(); ++i)
        if (g.r(i) > 0.8 && g.r(i) < 1.2)
            f[i] = 0.0;
    CHECK_THROWS_AS(winding_number(f, 1.0), AmplitudeFloorError);
}

TEST_CASE("transfer of charge to the sum-frequency field")
{
    const Grid2D g = make_grid(96, 3.0);
    MediumParams p;
    const auto out = output_fields(p, sample_lg({4.0, 2, 1.0}, g), sample_lg({0.005, 0, 1.0}, g),
                                   sample_lg({0.005, 0, 1.0}, g));
    CHECK(winding_number(out.fs) == 2);
}

TEST_CASE("profile sampling")
{
    const Grid2D g = make_grid(256, 3.0);

    SUBCASE("uniform field")
    {
        const auto prof = azimuthal_profile(paint(g, [](double, double) { return complex(2.0, 1.0); }), 1.5);
        for (double v : prof.intensities)
            CHECK(v == doctest::Approx(5.0).epsilon(1e-14));
        CHECK(petal_count(prof) == 0);
        CHECK_THROWS_AS(peak_angle(prof), StructurelessProfileError);
    }

    SUBCASE("painted 1 + cos 3 theta")
    {
        // |1 + e^{3 i theta}|^2 / 2 = 1 + cos 3 theta
        const auto f = paint(g, [](double x, double y) {
            const complex z(x, y);
            return (1.0 + std::pow(z / std::abs(z), 3)) / std::sqrt(2.0);
        });
        const auto prof = azimuthal_profile(f, 1.5);
        CHECK(prof.size() == 720);
        double worst = 0.0;
        for (std::size_t k = 0; k < prof.size(); ++k)
            worst = std::max(worst, std::abs(prof.intensities[k] - (1.0 + std::cos(3.0 * prof.thetas[k]))));
        CHECK(worst <= 1e-3);
        CHECK(petal_count(prof) == 3);
    }

    SUBCASE("argument checks")
    {
        const auto f = vortex(g, 1);
        CHECK_THROWS_AS(azimuthal_profile(f, 3.5), OutOfGridError);
        CHECK_THROWS_AS(azimuthal_profile(f, 1.0, 15), InvalidConfigError);
        CHECK_THROWS_AS(bilinear(f, 3.01, 0.0), OutOfGridError);
    }
}

TEST_CASE("petal count")
{
    const auto three = synthetic(720, [](double t) { return 1.0 + std::cos(3.0 * t); });
    CHECK(petal_count(three) == 3);
    CHECK(petal_count(synthetic(720, [](double) { return 4.0; })) == 0);
    CHECK(harmonic_ratio(three, 3) == doctest::Approx(0.5));

    auto shifted = three;
    for (int s : {1, 17, 250}) {
        std::rotate(shifted.intensities.begin(), shifted.intensities.begin() + s, shifted.intensities.end());
        CHECK(petal_count(shifted) == 3);
    }
}

TEST_CASE("peak angle")
{
    const int m = 720;
    const auto prof = synthetic(m, [](double t) { return 1.0 + std::cos(t - 1.0); });
    CHECK(std::abs(peak_angle(prof) - 1.0) <= kTwoPi / m);

    // Circular shift by s samples rotates the profile by 2 pi s / m.
    for (int s : {5, 200, 600}) {
        auto shifted = prof;
        std::rotate(shifted.intensities.rbegin(), shifted.intensities.rbegin() + s, shifted.intensities.rend());
        const double want = std::fmod(1.0 + kTwoPi * s / m, kTwoPi);
        CHECK(angular_distance(peak_angle(shifted), want) <= kTwoPi / m);
    }

    const auto near_zero = synthetic(m, [](double t) { return 1.0 + std::cos(t + 0.001); });
    const double a = peak_angle(near_zero);
    CHECK(a >= 0.0);
    CHECK(a < kTwoPi);
    CHECK(angular_distance(a, -0.001) <= kTwoPi / m);
}

TEST_CASE("peak to valley")
{
    CHECK(peak_to_valley(synthetic(360, [](double t) { return 2.0 + std::sin(t); })) ==
          doctest::Approx(2.0).epsilon(1e-4));
}

TEST_CASE("ring radius")
{
    const Grid2D g = make_grid(256, 3.0);
    CHECK(ring_radius(sample_lg({1.0, 0, 1.0}, g)) == 0.0);
    for (int l : {1, 2, 3, 4})
        CHECK(std::abs(ring_radius(sample_lg({1.0, l, 1.0}, g)) - std::sqrt(l / 2.0)) <= 0.5 * g.spacing());
    CHECK_THROWS_AS(ring_radius(ComplexField(g)), ZeroFieldError);
}

TEST_CASE("crescent of the combined output")
{
    MediumParams p;
    const LGBeamSpec c{4.0, 1, 1.0}, pr{0.005, 1, 1.0};
    auto output = [&](bool d) {
        return FieldSampler([=](double x, double y) {
            const auto px = solve_pixel(p, lg_value(c, x, y), lg_value(pr, x, y), lg_value(pr, x, y));
            return d ? px.omega_d : px.omega_u;
        });
    };
    const auto pd = azimuthal_profile(output(true), 0.7);
    const auto pu = azimuthal_profile(output(false), 0.7);
    CHECK(petal_count(pd) == 1);
    CHECK(petal_count(pu) == 1);
    CHECK(angular_distance(peak_angle(pd) - peak_angle(pu), std::numbers::pi) <= kTwoPi / 720);
}

TEST_CASE("wrap angle")
{
    CHECK(wrap_angle(3.0 * std::numbers::pi) == doctest::Approx(std::numbers::pi));
    CHECK(wrap_angle(-std::numbers::pi) == doctest::Approx(std::numbers::pi));
    CHECK(wrap_angle(0.25) == doctest::Approx(0.25));
}
