#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "vortex_twm/error.hpp"
#include "vortex_twm/medium.hpp"

using namespace vortex_twm;

namespace
{

constexpr complex I{0.0, 1.0};

double rel(complex got, complex want)
{
    return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

// Coherence equations as an affine system u' = a u + b, u = (rho31, rho21).
oracle::Vec2 exact_coherences(const MediumParams &p, complex c, complex pp, complex ps,
                              const CoherencePair &init, double t)
{
    const oracle::Mat2 a{-complex(p.gamma31, p.delta), 0.5 * I * c, 0.5 * I * std::conj(c),
                         complex(-p.gamma21)};
    const oracle::Vec2 b{0.5 * I * ps, 0.5 * I * pp};
    return oracle::affine_flow(a, b, {init.rho31, init.rho21}, t);
}

} // namespace

TEST_CASE("y_factor examples")
{
    MediumParams p;
    CHECK(y_factor(p, 0.0) == complex(0.05, 0.0));
    CHECK(std::abs(y_factor(p, 4.0) - complex(4.05, 0.0)) < 1e-15);
    p.delta = 9.0;
    CHECK(std::abs(y_factor(p, 4.0) - complex(4.05, 0.45)) < 1e-15);
}

TEST_CASE("beta_factor examples")
{
    MediumParams p;
    CHECK(std::abs(beta_factor(p, 0.0) - complex(0.0, 0.95)) < 1e-15);
    CHECK(std::abs(beta_factor(p, 4.0) - complex(3.8855501540965856, 0.0)) < 1e-14);
    p.gamma21 = 1.0;
    CHECK(std::abs(beta_factor(p, 4.0) - complex(4.0, 0.0)) < 1e-15);
}

TEST_CASE("y phase symmetry")
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 2.0 * 3.141592653589793);
    MediumParams p;
    p.delta = 2.5;
    const complex c(1.3, -2.2);
    for (int k = 0; k < 50; ++k)
        CHECK(rel(y_factor(p, c * std::polar(1.0, u(rng))), y_factor(p, c)) < 1e-15);
}

TEST_CASE("steady state examples")
{
    MediumParams p;
    p.delta = 1.5;
    const auto zero = steady_coherences(p, complex(2.0, 1.0), 0.0, 0.0);
    CHECK(zero.rho31 == complex{});
    CHECK(zero.rho21 == complex{});

    const complex pp(0.01, 0.002), ps(-0.003, 0.02);
    const auto dec = steady_coherences(p, 0.0, pp, ps);
    CHECK(rel(dec.rho31, I * ps / (2.0 * complex(p.gamma31, p.delta))) < 1e-14);
    CHECK(rel(dec.rho21, I * pp / (2.0 * p.gamma21)) < 1e-14);
}

TEST_CASE("steady state is the kernel of the coherence equations")
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int k = 0; k < 200; ++k) {
        MediumParams p;
        p.gamma21 = 0.01 + 0.99 * std::abs(u(rng));
        p.delta = 9.0 * u(rng);
        const complex c(6.0 * u(rng), 6.0 * u(rng));
        const complex pp(0.01 * u(rng), 0.01 * u(rng)), ps(0.01 * u(rng), 0.01 * u(rng));
        const auto s = steady_coherences(p, c, pp, ps);
        const auto r = coherence_rates(p, c, pp, ps, s);
        const double scale = std::abs(0.5 * I * ps) + std::abs(0.5 * I * pp);
        CHECK(std::abs(r.rho31) / scale <= 1e-12);
        CHECK(std::abs(r.rho21) / scale <= 1e-12);
    }
}

TEST_CASE("steady state against evolution")
{
    MediumParams p;
    p.delta = 3.0;
    const complex c(2.0, 1.0), pp(0.01, 0.0), ps(0.0, 0.02);
    const auto s = steady_coherences(p, c, pp, ps);
    const auto e = evolve_coherences(p, c, pp, ps, {}, 50.0 / p.gamma21, 0.01);
    CHECK(std::abs(e.rho31 - s.rho31) <= 1e-8);
    CHECK(std::abs(e.rho21 - s.rho21) <= 1e-8);
}

TEST_CASE("pure decay")
{
    MediumParams p;
    const auto e = evolve_coherences(p, 0.0, 0.0, 0.0, {1.0, 1.0}, 1000.0, 0.05);
    CHECK(std::abs(e.rho31) < 1e-10);
    CHECK(std::abs(e.rho21) < 1e-10);
}

TEST_CASE("evolution step guard")
{
    MediumParams p;
    CHECK_THROWS_AS(evolve_coherences(p, 4.0, 0.0, 0.0, {}, 1.0, 0.03), StepSizeError);
    CHECK_NOTHROW(evolve_coherences(p, 4.0, 0.0, 0.0, {}, 1.0, 0.025));
}

TEST_CASE("evolution matches exact flow with fourth-order convergence")
{
    MediumParams p;
    p.delta = 1.0;
    const complex c(2.0, -0.5), pp(0.01, 0.003), ps(-0.004, 0.01);
    const CoherencePair init{complex(0.002, 0.0), complex(0.0, -0.001)};
    const double t = 2.0;
    const auto exact = exact_coherences(p, c, pp, ps, init, t);
    auto err = [&](double dt) {
        const auto e = evolve_coherences(p, c, pp, ps, init, t, dt);
        return std::abs(e.rho31 - exact[0]) + std::abs(e.rho21 - exact[1]);
    };
    const double e1 = err(0.02), e2 = err(0.01);
    CHECK(e2 < 1e-9);
    CHECK(e1 / e2 == doctest::Approx(16.0).epsilon(0.1));
}

TEST_CASE("steady state linearity")
{
    MediumParams p;
    p.delta = -2.0;
    const complex c(3.0, 1.0);
    const complex p1(0.01, 0.0), s1(0.0, 0.003), p2(-0.002, 0.004), s2(0.007, 0.001);
    const complex a(1.5, -0.5), b(-0.3, 2.0);
    const auto x = steady_coherences(p, c, p1, s1);
    const auto y = steady_coherences(p, c, p2, s2);
    const auto z = steady_coherences(p, c, a * p1 + b * p2, a * s1 + b * s2);
    CHECK(rel(z.rho31, a * x.rho31 + b * y.rho31) < 1e-12);
    CHECK(rel(z.rho21, a * x.rho21 + b * y.rho21) < 1e-12);
}

TEST_CASE("mixing terms pair the control with the opposite-frequency probes")
{
    // The pairing where both mixing terms carry the s-frequency total does not
    // solve the coherence equations; the implemented one does.
    MediumParams p;
    const complex c(4.0, 0.0), pp(0.01, 0.0), ps(0.0, 0.0);
    const auto d = steady_decomposition(p, c, pp, ps);
    CHECK(std::abs(d.rho31_mixing) > 0.0);
    CHECK(d.rho21_mixing == complex{});
    const complex y = y_factor(p, c);
    const CoherencePair as_printed{d.rho31_linear - ps * c / (4.0 * y), d.rho21_linear - ps * std::conj(c) / (4.0 * y)};
    const auto r = coherence_rates(p, c, pp, ps, as_printed);
    CHECK(std::abs(r.rho31) > 1e-4);
    CHECK(std::abs(coherence_rates(p, c, pp, ps, d.total()).rho31) < 1e-16);
}

TEST_CASE("degenerate medium")
{
    MediumParams p;
    p.gamma31 = 0.0;
    p.gamma21 = 0.0;
    CHECK_THROWS_AS(steady_coherences(p, 0.0, 0.01, 0.01), DegenerateMediumError);
}
