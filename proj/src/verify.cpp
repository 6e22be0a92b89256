#include "vortex_twm/verify.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <random>
#include <sstream>

#include "vortex_twm/error.hpp"
#include "vortex_twm/parallel.hpp"
#include "vortex_twm/render.hpp"

namespace vortex_twm
{

namespace
{

struct LevelSettings
{
    int grid_n;
    int steps;
    int random_draws;
    int steady_draws;
};

LevelSettings settings_for(VerifyLevel level)
{
    if (level == VerifyLevel::full)
        return {256, 10000, 1000, 100};
    return {64, 1000, 200, 20};
}

MediumParams fig3_medium()
{
    return MediumParams{1.0, 0.05, 0.0, 100.0, 1.0};
}

class Draws
{
public:
    explicit Draws(std::uint64_t seed) : rng_(seed) {}
    double uniform(double lo, double hi) { return std::uniform_real_distribution<>(lo, hi)(rng_); }
    complex polar(double lo, double hi)
    {
        return std::polar(uniform(lo, hi), uniform(-std::numbers::pi, std::numbers::pi));
    }

private:
    std::mt19937_64 rng_;
};

SuiteResult finish(std::string name, double err, double tol, std::string detail = {})
{
    return {std::move(name), err, tol, err <= tol, std::move(detail)};
}

double channel_error(const ChannelState &a, const ChannelState &b, complex boundary)
{
    const double scale = std::abs(boundary);
    if (scale == 0.0)
        return std::max(std::abs(a.primary - b.primary), std::abs(a.generated - b.generated));
    return std::max(std::abs(a.primary - b.primary), std::abs(a.generated - b.generated)) / scale;
}

SuiteResult channel_equivalence_grid(const AnalyticSolvers &solvers, const LevelSettings &s,
                                     int threads)
{
    const Grid2D grid = make_grid(s.grid_n, 3.0);
    const MediumParams p = fig3_medium();
    double worst = 0.0;
    std::mutex m;
    for (int lc : {1, 2}) {
        const LGBeamSpec control{4.0, lc, 1.0};
        const LGBeamSpec probe{0.005, 1, 1.0};
        parallel_for(
            grid.size(),
            [&](std::size_t i) {
                const double x = grid.x(i), y = grid.y(i);
                const complex c = lg_value(control, x, y);
                const complex b = lg_value(probe, x, y);
                const double es = channel_error(solvers.s(p, c, b, p.length),
                                                integrate_channel_numeric(p, c, b, Channel::s, s.steps), b);
                const double ep = channel_error(solvers.p(p, c, b, p.length),
                                                integrate_channel_numeric(p, c, b, Channel::p, s.steps), b);
                std::lock_guard lock(m);
                worst = std::max({worst, es, ep});
            },
            threads);
    }
    const double tol = s.steps >= 10000 ? 1e-7 : 1e-5;
    std::ostringstream detail;
    detail << s.grid_n << "x" << s.grid_n << " grid, " << s.steps << " steps, l_c in {1, 2}";
    return finish("channel_equivalence", worst, tol, detail.str());
}

SuiteResult channel_equivalence_random(const AnalyticSolvers &solvers, const LevelSettings &s)
{
    Draws draws(0x5eed01);
    double worst = 0.0;
    for (int k = 0; k < s.random_draws; ++k) {
        MediumParams p{1.0, draws.uniform(0.01, 1.0), draws.uniform(-9.0, 9.0),
                       draws.uniform(1.0, 200.0), 1.0};
        const complex c = draws.polar(0.0, 6.0);
        const complex b = draws.polar(0.001, 0.01);
        worst = std::max(worst, channel_error(solvers.s(p, c, b, 1.0),
                                              integrate_channel_numeric(p, c, b, Channel::s, 20000), b));
        worst = std::max(worst, channel_error(solvers.p(p, c, b, 1.0),
                                              integrate_channel_numeric(p, c, b, Channel::p, 20000), b));
    }
    return finish("channel_equivalence_random", worst, 1e-7,
                  std::to_string(s.random_draws) + " random parameter draws, 20000 steps");
}

std::vector<SuiteResult> steady_state_kernel(const LevelSettings &s)
{
    Draws draws(0x5eed02);
    double residual = 0.0;
    double convergence = 0.0;
    for (int k = 0; k < s.steady_draws; ++k) {
        MediumParams p{draws.uniform(0.5, 2.0), draws.uniform(0.01, 1.0), draws.uniform(-9.0, 9.0),
                       100.0, 1.0};
        const complex c = draws.polar(0.0, 6.0);
        const complex pp = draws.polar(0.0, 0.01);
        const complex ps = draws.polar(0.0, 0.01);
        const auto st = steady_coherences(p, c, pp, ps);
        const auto rate = coherence_rates(p, c, pp, ps, st);
        // Residual relative to the largest term on each right-hand side.
        const double scale31 = std::abs(complex(p.gamma31, p.delta) * st.rho31) +
                               0.5 * std::abs(ps) + 0.5 * std::abs(c * st.rho21);
        const double scale21 = p.gamma21 * std::abs(st.rho21) + 0.5 * std::abs(pp) +
                               0.5 * std::abs(c * st.rho31);
        if (scale31 > 0.0)
            residual = std::max(residual, std::abs(rate.rho31) / scale31);
        if (scale21 > 0.0)
            residual = std::max(residual, std::abs(rate.rho21) / scale21);

        const double fastest = std::max({p.gamma31, p.gamma21, std::abs(p.delta), std::abs(c)});
        const auto evolved =
            evolve_coherences(p, c, pp, ps, {}, 50.0 / p.gamma21, 0.09 / fastest);
        convergence = std::max({convergence, std::abs(evolved.rho31 - st.rho31),
                                std::abs(evolved.rho21 - st.rho21)});
    }
    const std::string draws_note = std::to_string(s.steady_draws) + " random draws";
    return {finish("steady_state_residual", residual, 1e-12, draws_note),
            finish("steady_state_evolution", convergence, 1e-8, draws_note + ", t = 50 / gamma21")};
}

SuiteResult beta_branch(const LevelSettings &s)
{
    Draws draws(0x5eed03);
    double worst = 0.0;
    for (int k = 0; k < s.random_draws; ++k) {
        MediumParams p{1.0, draws.uniform(0.01, 1.0), draws.uniform(-9.0, 9.0),
                       draws.uniform(1.0, 200.0), 1.0};
        const complex c = draws.polar(0.0, 6.0);
        const complex b = draws.polar(0.001, 0.01);
        const double z = draws.uniform(0.0, 1.0);
        const complex beta = beta_factor(p, c);
        for (auto ch : {Channel::s, Channel::p}) {
            const auto plus = solve_channel_with_beta(p, ch, c, b, z, beta);
            const auto minus = solve_channel_with_beta(p, ch, c, b, z, -beta);
            const double scale = std::max(std::abs(plus.primary), std::abs(plus.generated));
            if (scale > 0.0)
                worst = std::max(worst, channel_error(plus, minus, scale));
        }
    }
    return finish("beta_branch_invariance", worst, 1e-12);
}

SuiteResult lossless_conservation(const AnalyticSolvers &solvers, const LevelSettings &s)
{
    Draws draws(0x5eed04);
    double worst = 0.0;
    for (int k = 0; k < s.random_draws; ++k) {
        MediumParams p{0.0, 0.0, 0.0, draws.uniform(1.0, 200.0), 1.0};
        const complex c = draws.polar(0.5, 6.0);
        const complex b = draws.polar(0.001, 0.01);
        for (int j = 0; j <= 10; ++j) {
            const double z = j / 10.0;
            for (const auto &st : {solvers.s(p, c, b, z), solvers.p(p, c, b, z)}) {
                const double power = std::norm(st.primary) + std::norm(st.generated);
                worst = std::max(worst, std::abs(power - std::norm(b)) / std::norm(b));
            }
        }
    }
    return finish("lossless_conservation", worst, 1e-10);
}

SuiteResult probe_linearity(const AnalyticSolvers &solvers, const LevelSettings &s)
{
    Draws draws(0x5eed05);
    double worst = 0.0;
    for (int k = 0; k < s.random_draws; ++k) {
        MediumParams p{1.0, draws.uniform(0.01, 1.0), draws.uniform(-9.0, 9.0),
                       draws.uniform(1.0, 200.0), 1.0};
        const complex c = draws.polar(0.0, 6.0);
        const complex p0 = draws.polar(0.001, 0.01);
        const complex s0 = draws.polar(0.001, 0.01);
        const complex scale = draws.polar(0.1, 10.0);
        const complex d1 = p0 + solvers.s(p, c, s0, 1.0).generated;
        const complex u1 = s0 + solvers.p(p, c, p0, 1.0).generated;
        const complex d2 = scale * p0 + solvers.s(p, c, scale * s0, 1.0).generated;
        const complex u2 = scale * s0 + solvers.p(p, c, scale * p0, 1.0).generated;
        worst = std::max(worst, std::abs(d2 - scale * d1) / std::abs(scale * d1));
        worst = std::max(worst, std::abs(u2 - scale * u1) / std::abs(scale * u1));
    }
    return finish("probe_linearity", worst, 1e-12);
}

SuiteResult decoupled_limits(const AnalyticSolvers &solvers, const LevelSettings &s)
{
    Draws draws(0x5eed06);
    double worst = 0.0;
    for (int k = 0; k < s.random_draws; ++k) {
        MediumParams p{1.0, draws.uniform(0.01, 1.0), draws.uniform(-9.0, 9.0),
                       draws.uniform(1.0, 200.0), 1.0};
        const complex b = draws.polar(0.001, 0.01);
        const double z = draws.uniform(0.0, 1.0);
        const complex es = b * std::exp(-p.d * z / (4.0 * p.length * complex(p.gamma31, p.delta)));
        const complex ep = b * std::exp(-p.d * z / (4.0 * p.length * p.gamma21));
        const auto sc = solvers.s(p, 0.0, b, z);
        const auto pc = solvers.p(p, 0.0, b, z);
        auto rel = [](complex got, complex want) {
            return want == complex{} ? std::abs(got) : std::abs(got - want) / std::abs(want);
        };
        worst = std::max({worst, rel(sc.primary, es), rel(pc.primary, ep),
                          std::abs(sc.generated) / std::abs(b), std::abs(pc.generated) / std::abs(b)});
    }
    return finish("decoupled_limits", worst, 1e-12);
}

// delta = 0 and l_c = l_p = l_s = 1 with equal probes: the two interference terms
// are exactly opposite, so |W_d|^2 + |W_u|^2 carries no azimuthal ripple.
SuiteResult anti_phase_identity(const AnalyticSolvers &solvers, const LevelSettings &s,
                                bool numeric)
{
    const MediumParams p = fig3_medium();
    const LGBeamSpec control{4.0, 1, 1.0};
    const LGBeamSpec probe{0.005, 1, 1.0};
    const int rings = numeric ? 6 : 60;
    const int m = numeric ? 90 : 360;
    double worst = 0.0;
    for (int k = 1; k <= rings; ++k) {
        const double r = 2.5 * k / rings;
        double lo = INFINITY, hi = 0.0;
        for (int j = 0; j < m; ++j) {
            const double th = 2.0 * std::numbers::pi * j / m;
            const double x = r * std::cos(th), y = r * std::sin(th);
            const complex c = lg_value(control, x, y);
            const complex b = lg_value(probe, x, y);
            complex fp, fs;
            if (numeric) {
                fp = integrate_channel_numeric(p, c, b, Channel::s, s.steps).generated;
                fs = integrate_channel_numeric(p, c, b, Channel::p, s.steps).generated;
            } else {
                fp = solvers.s(p, c, b, 1.0).generated;
                fs = solvers.p(p, c, b, 1.0).generated;
            }
            const double total = std::norm(b + fp) + std::norm(b + fs);
            lo = std::min(lo, total);
            hi = std::max(hi, total);
        }
        if (hi > 0.0)
            worst = std::max(worst, (hi - lo) / hi);
    }
    return finish(numeric ? "anti_phase_identity_numeric" : "anti_phase_identity", worst,
                  numeric ? 1e-8 : 1e-10);
}

} // namespace

VerifyLevel parse_verify_level(const std::string &name)
{
    if (name == "fast")
        return VerifyLevel::fast;
    if (name == "full")
        return VerifyLevel::full;
    throw InvalidConfigError("level", "expected fast or full, got '" + name + "'");
}

bool VerifyReport::passed() const
{
    return std::all_of(suites.begin(), suites.end(), [](const SuiteResult &r) { return r.passed; });
}

std::string VerifyReport::format() const
{
    std::ostringstream out;
    for (const auto &r : suites) {
        out << (r.passed ? "PASS " : "FAIL ") << r.name << "  max_error=" << format_double(r.max_error)
            << "  tolerance=" << format_double(r.tolerance);
        if (!r.detail.empty())
            out << "  (" << r.detail << ")";
        out << '\n';
    }
    out << (passed() ? "all suites passed" : "verification FAILED") << '\n';
    return out.str();
}

VerifyReport verify(VerifyLevel level, const AnalyticSolvers &solvers, int threads)
{
    const LevelSettings s = settings_for(level);
    VerifyReport report;
    report.suites.push_back(channel_equivalence_grid(solvers, s, threads));
    report.suites.push_back(channel_equivalence_random(solvers, s));
    for (auto &r : steady_state_kernel(s))
        report.suites.push_back(std::move(r));
    report.suites.push_back(beta_branch(s));
    report.suites.push_back(lossless_conservation(solvers, s));
    report.suites.push_back(probe_linearity(solvers, s));
    report.suites.push_back(decoupled_limits(solvers, s));
    report.suites.push_back(anti_phase_identity(solvers, s, false));
    report.suites.push_back(anti_phase_identity(solvers, s, true));
    return report;
}

} // namespace vortex_twm
