// propagation.hpp - closed-form channel solutions and their numeric oracle.
//
// Each channel is parameterised by the distance z travelled inside the medium:
// the p-channel enters at the z = 0 face, the s-channel at the z = L face.
//   s-channel: primary Ws, generated Wfp (difference frequency, carries conj(Wc))
//   p-channel: primary Wp, generated Wfs (sum frequency, carries Wc)

#pragma once

#include "vortex_twm/beams.hpp"
#include "vortex_twm/medium.hpp"

namespace vortex_twm
{

enum class Channel
{
    s,
    p
};

struct ChannelState
{
    complex primary{};
    complex generated{};
    double z = 0.0;
};

// sin(beta x) / beta, switching to the odd series when |beta x| < 1e-4.
complex sin_over_beta(complex beta, complex x);

ChannelState solve_channel_s(const MediumParams &p, complex control, complex s0, double z);
ChannelState solve_channel_p(const MediumParams &p, complex control, complex p0, double z);
ChannelState solve_channel(const MediumParams &p, Channel channel, complex control,
                           complex boundary, double z);

// Same closed form with an explicitly chosen square-root branch for beta.
ChannelState solve_channel_with_beta(const MediumParams &p, Channel channel, complex control,
                                     complex boundary, double z, complex beta);

// RK4 on the 2x2 propagation system, both prefactors i d / (2L). Returns the
// state at z = L. Throws StepSizeError when steps < 100.
ChannelState integrate_channel_numeric(const MediumParams &p, complex control, complex boundary,
                                       Channel channel, int steps);

// Every field of one transverse pixel at both faces.
struct PixelOutputs
{
    complex control{};
    complex p0{};        // Wp entering at z = 0
    complex s0{};        // Ws entering at z = L
    complex p_out{};     // Wp at z = L
    complex s_out{};     // Ws at z = 0
    complex fs{};        // Wfs at z = L
    complex fp{};        // Wfp at z = 0
    complex omega_d{};   // Wp + Wfp at z = 0
    complex omega_u{};   // Ws + Wfs at z = L
};

PixelOutputs solve_pixel(const MediumParams &p, complex control, complex p0, complex s0);

struct OutputFields
{
    ComplexField omega_d;   // z = 0 face
    ComplexField omega_u;   // z = L face
    ComplexField p_in;      // Wp at z = 0
    ComplexField p_out;     // Wp at z = L
    ComplexField s_in;      // Ws at z = L
    ComplexField s_out;     // Ws at z = 0
    ComplexField fp;        // Wfp at z = 0 (zero at z = L)
    ComplexField fs;        // Wfs at z = L (zero at z = 0)
};

// Pixels are independent; evaluated with up to `threads` workers (0 = default).
OutputFields output_fields(const MediumParams &p, const ComplexField &control_field,
                           const ComplexField &probe_p, const ComplexField &probe_s,
                           int threads = 0);

} // namespace vortex_twm
