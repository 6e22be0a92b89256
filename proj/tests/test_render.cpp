#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "test_util.hpp"
#include "vortex_twm/error.hpp"
#include "vortex_twm/render.hpp"

using namespace vortex_twm;
using testutil::TempDir;
using testutil::slurp;

namespace
{

std::size_t count_lines(const std::string &text)
{
    std::size_t n = 0;
    for (char c : text)
        n += c == '\n';
    return n;
}

} // namespace

TEST_CASE("intensity quantization")
{
    // Row 0 sits at y = -extent; images are written top row first.
    ComplexField f(Grid2D{2, 1.0});
    f.at(0, 1) = 0.0;
    f.at(1, 1) = 1.0;
    f.at(0, 0) = std::sqrt(0.5);
    f.at(1, 0) = complex(0.0, 0.5);
    const auto px = intensity_pixels(f, {});
    REQUIRE(px.size() == 4);
    CHECK(px[0] == 0);
    CHECK(px[1] == 255);
    CHECK(px[2] == 128);
    CHECK(px[3] == 64);

    const auto fixed = intensity_pixels(f, ImageSpec::fixed(2.0));
    CHECK(fixed[1] == 128);
    CHECK_THROWS_AS(ImageSpec::fixed(0.0), InvalidConfigError);
}

TEST_CASE("zero field renders black")
{
    const auto px = intensity_pixels(ComplexField(Grid2D{4, 1.0}), {});
    for (auto v : px)
        CHECK(v == 0);
}

TEST_CASE("pgm layout")
{
    TempDir dir("pgm");
    ComplexField f(Grid2D{2, 1.0});
    f.at(1, 1) = 1.0;
    write_intensity_pgm(f, {}, dir / "a.pgm");
    const std::string bytes = slurp(dir / "a.pgm");
    CHECK(bytes == std::string("P5\n2 2\n255\n\0\xff\0\0", 15));
}

TEST_CASE("phase colours")
{
    const auto cyan = hue_to_rgb(0.5);
    CHECK(cyan == std::array<std::uint8_t, 3>{0, 255, 255});
    CHECK(hue_to_rgb(0.0) == std::array<std::uint8_t, 3>{255, 0, 0});
    CHECK(hue_to_rgb(1.0) == std::array<std::uint8_t, 3>{255, 0, 0});
    CHECK(hue_to_rgb(1.0 / 3.0) == std::array<std::uint8_t, 3>{0, 255, 0});

    ComplexField f(Grid2D{3, 1.0});
    for (auto &v : f.values)
        v = 2.5;
    const auto px = phase_pixels(f);
    for (std::size_t i = 0; i < px.size(); i += 3) {
        CHECK(px[i] == 0);
        CHECK(px[i + 1] == 255);
        CHECK(px[i + 2] == 255);
    }

    f.at(1, 1) = 1e-13;
    const auto dark = phase_pixels(f);
    CHECK(dark[12] == 0);
    CHECK(dark[13] == 0);
    CHECK(dark[14] == 0);
}

TEST_CASE("phase of a vortex winds once")
{
    const Grid2D g = make_grid(32, 1.0);
    const auto f = sample_lg({1.0, 1, 1.0}, g);
    const auto px = phase_pixels(f);
    // Walk the border counterclockwise from (+x, 0) and count red-channel
    // wraps of the decoded hue.
    auto hue_at = [&](int ix, int iy) {
        const int row = g.n - 1 - iy;
        const std::size_t i = 3 * (static_cast<std::size_t>(row) * g.n + ix);
        const double r = px[i], gr = px[i + 1], b = px[i + 2];
        const double mx = std::max({r, gr, b}), mn = std::min({r, gr, b});
        double h = 0.0;
        if (mx == r)
            h = std::fmod((gr - b) / (mx - mn) + 6.0, 6.0);
        else if (mx == gr)
            h = (b - r) / (mx - mn) + 2.0;
        else
            h = (r - gr) / (mx - mn) + 4.0;
        return h / 6.0;
    };
    double total = 0.0, prev = hue_at(g.n - 1, g.n / 2);
    std::vector<std::pair<int, int>> path;
    for (int iy = g.n / 2; iy < g.n; ++iy) path.push_back({g.n - 1, iy});
    for (int ix = g.n - 1; ix >= 0; --ix) path.push_back({ix, g.n - 1});
    for (int iy = g.n - 1; iy >= 0; --iy) path.push_back({0, iy});
    for (int ix = 0; ix < g.n; ++ix) path.push_back({ix, 0});
    for (int iy = 0; iy <= g.n / 2; ++iy) path.push_back({g.n - 1, iy});
    for (auto [ix, iy] : path) {
        const double h = hue_at(ix, iy);
        double step = h - prev;
        step -= std::round(step);
        total += step;
        prev = h;
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("field csv")
{
    TempDir dir("csv");

    SUBCASE("single sample")
    {
        ComplexField f(Grid2D{1, 1.0});
        f[0] = complex(1.0, 2.0);
        write_field_csv(f, dir / "one.csv");
        CHECK(slurp(dir / "one.csv") == "x,y,re,im\n0,0,1,2\n");
    }

    SUBCASE("lossless round trip")
    {
        const Grid2D g = make_grid(16, 2.5);
        ComplexField f(g);
        for (std::size_t i = 0; i < g.size(); ++i)
            f[i] = complex(std::sin(1.1 * i) * 1e-7 / 3.0, std::numbers::pi * i);
        write_field_csv(f, dir / "rt.csv");
        const auto back = read_field_csv(dir / "rt.csv");
        CHECK(back.grid == g);
        CHECK(back.values == f.values);
    }

    SUBCASE("line count of the default grid")
    {
        write_field_csv(sample_lg({1.0, 1, 1.0}, make_grid(256, 3.0)), dir / "big.csv");
        CHECK(count_lines(slurp(dir / "big.csv")) == 65537);
    }

    SUBCASE("malformed input")
    {
        testutil::spit(dir / "bad.csv", "x,y,re,im\n0,0,1\n");
        CHECK_THROWS_AS(read_field_csv(dir / "bad.csv"), IoError);
        CHECK_THROWS_AS(read_field_csv(dir / "missing.csv"), IoError);
    }
}

TEST_CASE("byte determinism")
{
    TempDir dir("det");
    const auto f = sample_lg({1.0, 2, 1.0}, make_grid(64, 3.0));
    for (const char *name : {"a", "b"}) {
        const std::string base = name;
        write_intensity_pgm(f, {}, dir / (base + ".pgm"));
        write_phase_ppm(f, dir / (base + ".ppm"));
        write_field_csv(f, dir / (base + ".csv"));
    }
    CHECK(slurp(dir / "a.pgm") == slurp(dir / "b.pgm"));
    CHECK(slurp(dir / "a.ppm") == slurp(dir / "b.ppm"));
    CHECK(slurp(dir / "a.csv") == slurp(dir / "b.csv"));
    CHECK(slurp(dir / "a.ppm").substr(0, 3) == "P6\n");
}

TEST_CASE("unwritable path")
{
    const auto f = sample_lg({1.0, 0, 1.0}, make_grid(4, 1.0));
    CHECK_THROWS_AS(write_field_csv(f, "/nonexistent_dir_vortex/x.csv"), IoError);
}

TEST_CASE("number formatting")
{
    CHECK(format_double(0.0) == "0");
    CHECK(format_double(-0.5) == "-0.5");
    CHECK(std::stod(format_double(0.1 + 0.2)) == 0.1 + 0.2);
}
