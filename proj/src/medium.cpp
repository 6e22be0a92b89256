#include "vortex_twm/medium.hpp"

#include <algorithm>
#include <cmath>

#include "vortex_twm/error.hpp"

namespace vortex_twm
{

namespace
{
constexpr complex I{0.0, 1.0};
}

void MediumParams::validate() const
{
    if (!(gamma31 > 0.0) || !std::isfinite(gamma31))
        throw InvalidConfigError("medium.gamma31", "must be positive");
    if (!(gamma21 > 0.0) || !std::isfinite(gamma21))
        throw InvalidConfigError("medium.gamma21", "must be positive");
    if (!std::isfinite(delta))
        throw InvalidConfigError("medium.delta", "must be finite");
    if (!(d > 0.0) || !std::isfinite(d))
        throw InvalidConfigError("medium.d", "must be positive");
    if (length != 1.0)
        throw InvalidConfigError("medium.length", "the medium length is normalised to 1");
}

complex y_factor(const MediumParams &p, complex control)
{
    return p.gamma21 * complex(p.gamma31, p.delta) + std::norm(control) / 4.0;
}

complex beta_factor(const MediumParams &p, complex control)
{
    const complex shift(p.gamma31 - p.gamma21, p.delta);
    complex arg = std::norm(control) - shift * shift;
    // A -0 imaginary part would select the lower side of the branch cut.
    if (arg.imag() == 0.0)
        arg.imag(0.0);
    return std::sqrt(arg);
}

CoherenceDecomposition steady_decomposition(const MediumParams &p, complex control,
                                            complex probe_p_total, complex probe_s_total)
{
    const complex y = y_factor(p, control);
    if (y == complex{})
        throw DegenerateMediumError("Y = 0: zero decay rates with zero control field");
    CoherenceDecomposition out;
    out.rho31_linear = I * probe_s_total * p.gamma21 / (2.0 * y);
    out.rho21_linear = I * probe_p_total * complex(p.gamma31, p.delta) / (2.0 * y);
    // rho31 mixes through Wc with the p-frequency total, rho21 through conj(Wc)
    // with the s-frequency total.
    out.rho31_mixing = -probe_p_total * control / (4.0 * y);
    out.rho21_mixing = -probe_s_total * std::conj(control) / (4.0 * y);
    return out;
}

CoherencePair steady_coherences(const MediumParams &p, complex control, complex probe_p_total,
                                complex probe_s_total)
{
    return steady_decomposition(p, control, probe_p_total, probe_s_total).total();
}

CoherencePair coherence_rates(const MediumParams &p, complex control, complex probe_p_total,
                              complex probe_s_total, const CoherencePair &state)
{
    CoherencePair rate;
    rate.rho31 = -complex(p.gamma31, p.delta) * state.rho31 + 0.5 * I * probe_s_total +
                 0.5 * I * control * state.rho21;
    rate.rho21 = -p.gamma21 * state.rho21 + 0.5 * I * probe_p_total +
                 0.5 * I * std::conj(control) * state.rho31;
    return rate;
}

CoherencePair evolve_coherences(const MediumParams &p, complex control, complex probe_p_total,
                                complex probe_s_total, const CoherencePair &initial, double t_end,
                                double dt)
{
    if (!(dt > 0.0))
        throw StepSizeError("dt must be positive");
    if (!(t_end >= 0.0))
        throw StepSizeError("t_end must be non-negative");
    const double fastest =
        std::max({p.gamma31, p.gamma21, std::abs(p.delta), std::abs(control)});
    if (dt * fastest > 0.1)
        throw StepSizeError("dt * max rate = " + std::to_string(dt * fastest) + " exceeds 0.1");

    const auto steps = static_cast<long>(std::ceil(t_end / dt));
    if (steps == 0)
        return initial;
    const double h = t_end / static_cast<double>(steps);

    auto rates = [&](const CoherencePair &s) {
        return coherence_rates(p, control, probe_p_total, probe_s_total, s);
    };
    auto axpy = [](const CoherencePair &s, double a, const CoherencePair &k) {
        return CoherencePair{s.rho31 + a * k.rho31, s.rho21 + a * k.rho21};
    };

    CoherencePair s = initial;
    for (long n = 0; n < steps; ++n) {
        const auto k1 = rates(s);
        const auto k2 = rates(axpy(s, 0.5 * h, k1));
        const auto k3 = rates(axpy(s, 0.5 * h, k2));
        const auto k4 = rates(axpy(s, h, k3));
        s.rho31 += h / 6.0 * (k1.rho31 + 2.0 * k2.rho31 + 2.0 * k3.rho31 + k4.rho31);
        s.rho21 += h / 6.0 * (k1.rho21 + 2.0 * k2.rho21 + 2.0 * k3.rho21 + k4.rho21);
    }
    return s;
}

} // namespace vortex_twm
