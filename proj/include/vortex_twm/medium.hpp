// medium.hpp - steady-state response of the ladder-type medium.
//
// Rates, detunings and Rabi frequencies are in units of gamma = gamma31.
// The coherences obey
//   d rho31/dt = -(g31 + i delta) rho31 + i/2 S + i/2 Wc rho21
//   d rho21/dt = -g21 rho21            + i/2 P + i/2 conj(Wc) rho31
// with S = Ws + Wfs and P = Wp + Wfp the summed same-frequency probe amplitudes.

#pragma once

#include <complex>

namespace vortex_twm
{

using complex = std::complex<double>;

struct MediumParams
{
    double gamma31 = 1.0;
    double gamma21 = 0.05;
    double delta = 0.0;
    double d = 100.0;
    double length = 1.0;

    // Strict check used by configs: positive decays and d, unit length.
    void validate() const;
};

struct CoherencePair
{
    complex rho31{};
    complex rho21{};
};

// Linear (absorption/dispersion) and three-wave-mixing parts of the steady state.
// rho31 = rho31_linear + rho31_mixing, same for rho21.
struct CoherenceDecomposition
{
    complex rho31_linear{};
    complex rho21_linear{};
    complex rho31_mixing{};
    complex rho21_mixing{};

    CoherencePair total() const { return {rho31_linear + rho31_mixing, rho21_linear + rho21_mixing}; }
};

complex y_factor(const MediumParams &p, complex control);

// Principal root of |Wc|^2 - (i delta + g31 - g21)^2. Only ever consumed through
// cos(beta x) and sin(beta x)/beta, both even in beta.
complex beta_factor(const MediumParams &p, complex control);

CoherenceDecomposition steady_decomposition(const MediumParams &p, complex control,
                                            complex probe_p_total, complex probe_s_total);

CoherencePair steady_coherences(const MediumParams &p, complex control,
                                complex probe_p_total, complex probe_s_total);

// Right-hand side of the coherence equations at `state`.
CoherencePair coherence_rates(const MediumParams &p, complex control, complex probe_p_total,
                              complex probe_s_total, const CoherencePair &state);

// Classical RK4 with constant drives. The step is t_end / ceil(t_end / dt), never
// larger than dt. Throws StepSizeError when dt * max(g31, g21, |delta|, |Wc|) > 0.1.
CoherencePair evolve_coherences(const MediumParams &p, complex control, complex probe_p_total,
                                complex probe_s_total, const CoherencePair &initial, double t_end,
                                double dt);

} // namespace vortex_twm
