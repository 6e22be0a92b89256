// verify.hpp - oracle suites: analytic channels against direct integration,
// steady-state kernel residuals and the algebraic identities of the model.

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "vortex_twm/propagation.hpp"

namespace vortex_twm
{

enum class VerifyLevel
{
    fast,
    full
};

VerifyLevel parse_verify_level(const std::string &name);

struct SuiteResult
{
    std::string name;
    double max_error = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    std::string detail;
};

struct VerifyReport
{
    std::vector<SuiteResult> suites;
    bool passed() const;
    std::string format() const;
};

using ChannelSolverFn = std::function<ChannelState(const MediumParams &, complex, complex, double)>;

// The closed-form solvers under test. Replaceable so the suites can be shown to
// reject a corrupted solver.
struct AnalyticSolvers
{
    ChannelSolverFn s = solve_channel_s;
    ChannelSolverFn p = solve_channel_p;
};

VerifyReport verify(VerifyLevel level, const AnalyticSolvers &solvers = {}, int threads = 0);

} // namespace vortex_twm
