#include <doctest.h>

#include <cmath>
#include <numbers>

#include "vortex_twm/beams.hpp"
#include "vortex_twm/error.hpp"

using namespace vortex_twm;

TEST_CASE("make_grid axes")
{
    const Grid2D g = make_grid(3, 1.0);
    CHECK(g.coord(0) == -1.0);
    CHECK(g.coord(1) == 0.0);
    CHECK(g.coord(2) == 1.0);

    const Grid2D d = make_grid(256, 3.0);
    CHECK(d.coord(0) == -3.0);
    CHECK(d.coord(255) == 3.0);
    for (int i = 0; i < 256; ++i)
        CHECK(d.coord(i) == -d.coord(255 - i));
}

TEST_CASE("make_grid rejects bad input")
{
    try {
        make_grid(1, 3.0);
        FAIL("expected InvalidConfigError");
    } catch (const InvalidConfigError &e) {
        CHECK(e.field() == "grid.n");
    }
    CHECK_THROWS_AS(make_grid(8, 0.0), InvalidConfigError);
    CHECK_THROWS_AS(make_grid(8, -1.0), InvalidConfigError);
}

TEST_CASE("azimuthal resolution guard")
{
    CHECK_NOTHROW(check_azimuthal_resolution(make_grid(32, 3.0), 3));
    CHECK_THROWS_AS(check_azimuthal_resolution(make_grid(31, 3.0), 3), InvalidConfigError);
}

TEST_CASE("azimuth range")
{
    CHECK(azimuth(-1.0, 0.0) == doctest::Approx(std::numbers::pi));
    CHECK(azimuth(-1.0, -0.0) == doctest::Approx(std::numbers::pi));
    CHECK(azimuth(0.0, -1.0) == doctest::Approx(-std::numbers::pi / 2));
}

TEST_CASE("lg values")
{
    CHECK(lg_value({1.0, 0, 1.0}, 0.0, 0.0) == complex(1.0, 0.0));
    CHECK(lg_value({1.0, 1, 1.0}, 0.0, 0.0) == complex(0.0, 0.0));
    const complex v = lg_value({1.0, 2, 1.0}, 0.0, 1.0);
    CHECK(v.real() == doctest::Approx(-0.36787944117144233).epsilon(1e-12));
    CHECK(std::abs(v.imag()) < 1e-12);
}

TEST_CASE("lg field properties")
{
    const Grid2D g = make_grid(64, 3.0);
    for (int l : {1, 2, 3}) {
        const auto plus = sample_lg({0.7, l, 1.0}, g);
        const auto minus = sample_lg({0.7, -l, 1.0}, g);
        const auto scaled = sample_lg({2.1, l, 1.0}, g);
        for (std::size_t i = 0; i < g.size(); ++i) {
            CHECK(std::abs(minus[i] - std::conj(plus[i])) <= 1e-15);
            CHECK(std::abs(scaled[i] - 3.0 * plus[i]) <= 1e-14 * std::abs(scaled[i]) + 1e-300);
        }
        // Equal-radius samples related by the grid's 90-degree symmetry.
        for (int iy = 0; iy < g.n; ++iy)
            for (int ix = 0; ix < g.n; ++ix)
                CHECK(std::abs(std::abs(plus.at(ix, iy)) - std::abs(plus.at(g.n - 1 - iy, ix))) <=
                      1e-15 * std::abs(plus.at(ix, iy)));
    }
}

TEST_CASE("lg peak ring")
{
    const Grid2D g = make_grid(256, 3.0);
    for (int l : {1, 2, 3, 4}) {
        const auto f = sample_lg({1.0, l, 1.0}, g);
        double best = 0.0, best_r = 0.0;
        for (std::size_t i = 0; i < g.size(); ++i)
            if (std::abs(f[i]) > best) {
                best = std::abs(f[i]);
                best_r = g.r(i);
            }
        CHECK(std::abs(best_r - std::sqrt(l / 2.0)) <= g.spacing());
    }
}

TEST_CASE("field size mismatch")
{
    CHECK_THROWS_AS(ComplexField(make_grid(4, 1.0), std::vector<complex>(15)), GridMismatchError);
}
