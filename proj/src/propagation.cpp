#include "vortex_twm/propagation.hpp"

#include <array>
#include <cmath>
#include <string>

#include "vortex_twm/error.hpp"
#include "vortex_twm/parallel.hpp"

namespace vortex_twm
{

namespace
{

constexpr complex I{0.0, 1.0};

// Beyond this |beta x| the two eigenmodes e^{(+-i beta - c) x} are evaluated
// separately; their weights are formed without cancellation so a strongly
// damped surviving mode is not swamped by roundoff from the weak one.
constexpr double kModalThreshold = 1.0;

complex checked_y(const MediumParams &p, complex control)
{
    const complex y = y_factor(p, control);
    if (y == complex{})
        throw DegenerateMediumError("Y = 0: zero decay rates with zero control field");
    return y;
}

// Primary and generated amplitude per unit boundary amplitude for
//   primary   = [cos(beta x) - coef sin(beta x)/beta] exp(-c x)
//   generated = -i coupling sin(beta x)/beta exp(-c x)
// with (i beta)^2 - coef^2 = -|coupling|^2.
ChannelState channel_closed_form(complex beta, complex x, complex c, complex coef, complex coupling)
{
    const complex bx = beta * x;
    if (std::abs(bx) <= kModalThreshold) {
        const complex damp = std::exp(-x * c);
        const complex cos_damped = std::cos(bx) * damp;
        const complex sin_damped = sin_over_beta(beta, x) * damp;
        return {cos_damped - coef * sin_damped, -I * coupling * sin_damped, 0.0};
    }
    const complex q = I * beta;
    const complex up = std::exp((q - c) * x);
    const complex down = std::exp((-q - c) * x);
    // (q - coef)(q + coef) = -|coupling|^2; take the larger factor directly.
    complex w_up = q - coef;
    complex w_down = q + coef;
    if (std::abs(w_up) >= std::abs(w_down))
        w_down = -std::norm(coupling) / w_up;
    else
        w_up = -std::norm(coupling) / w_down;
    return {(w_up * up + w_down * down) / (2.0 * q), -I * coupling * (up - down) / (2.0 * q), 0.0};
}

} // namespace

complex sin_over_beta(complex beta, complex x)
{
    const complex bx = beta * x;
    if (std::abs(bx) < 1e-4) {
        const complex b2 = bx * bx;
        return x * (1.0 - b2 / 6.0 + b2 * b2 / 120.0);
    }
    return std::sin(bx) / beta;
}

ChannelState solve_channel_with_beta(const MediumParams &p, Channel channel, complex control,
                                     complex boundary, double z, complex beta)
{
    const complex y = checked_y(p, control);
    const complex x = p.d * z / (8.0 * y * p.length);
    const complex c(p.gamma31 + p.gamma21, p.delta);

    ChannelState out;
    if (channel == Channel::s) {
        const complex coef(p.gamma21 - p.gamma31, -p.delta);   // g21 - g31 - i delta
        out = channel_closed_form(beta, x, c, coef, std::conj(control));
    } else {
        const complex coef(p.gamma31 - p.gamma21, p.delta);    // g31 + i delta - g21
        out = channel_closed_form(beta, x, c, coef, control);
    }
    out.primary *= boundary;
    out.generated *= boundary;
    out.z = z;
    return out;
}

ChannelState solve_channel(const MediumParams &p, Channel channel, complex control,
                           complex boundary, double z)
{
    return solve_channel_with_beta(p, channel, control, boundary, z, beta_factor(p, control));
}

ChannelState solve_channel_s(const MediumParams &p, complex control, complex s0, double z)
{
    return solve_channel(p, Channel::s, control, s0, z);
}

ChannelState solve_channel_p(const MediumParams &p, complex control, complex p0, double z)
{
    return solve_channel(p, Channel::p, control, p0, z);
}

ChannelState integrate_channel_numeric(const MediumParams &p, complex control, complex boundary,
                                       Channel channel, int steps)
{
    if (steps < 100)
        throw StepSizeError("integrate_channel_numeric needs at least 100 steps, got " +
                            std::to_string(steps));
    const complex y = checked_y(p, control);
    const complex pre = I * p.d / (2.0 * p.length);
    const complex g31d(p.gamma31, p.delta);

    // d/dz (primary, generated) = a * (primary, generated)
    std::array<complex, 4> a;
    if (channel == Channel::s) {
        a[0] = pre * (I * p.gamma21 / (2.0 * y));
        a[1] = pre * (I * I * control / (4.0 * y));
        a[2] = pre * (I * I * std::conj(control) / (4.0 * y));
        a[3] = pre * (I * g31d / (2.0 * y));
    } else {
        a[0] = pre * (I * g31d / (2.0 * y));
        a[1] = pre * (I * I * std::conj(control) / (4.0 * y));
        a[2] = pre * (I * I * control / (4.0 * y));
        a[3] = pre * (I * p.gamma21 / (2.0 * y));
    }

    const double h = p.length / steps;
    complex u = boundary;
    complex v{};
    for (int n = 0; n < steps; ++n) {
        const complex k1u = a[0] * u + a[1] * v;
        const complex k1v = a[2] * u + a[3] * v;
        const complex u2 = u + 0.5 * h * k1u, v2 = v + 0.5 * h * k1v;
        const complex k2u = a[0] * u2 + a[1] * v2;
        const complex k2v = a[2] * u2 + a[3] * v2;
        const complex u3 = u + 0.5 * h * k2u, v3 = v + 0.5 * h * k2v;
        const complex k3u = a[0] * u3 + a[1] * v3;
        const complex k3v = a[2] * u3 + a[3] * v3;
        const complex u4 = u + h * k3u, v4 = v + h * k3v;
        const complex k4u = a[0] * u4 + a[1] * v4;
        const complex k4v = a[2] * u4 + a[3] * v4;
        u += h / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
        v += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
    }
    return {u, v, p.length};
}

PixelOutputs solve_pixel(const MediumParams &p, complex control, complex p0, complex s0)
{
    PixelOutputs px;
    px.control = control;
    px.p0 = p0;
    px.s0 = s0;
    const auto s_channel = solve_channel_s(p, control, s0, p.length);
    const auto p_channel = solve_channel_p(p, control, p0, p.length);
    px.s_out = s_channel.primary;
    px.fp = s_channel.generated;
    px.p_out = p_channel.primary;
    px.fs = p_channel.generated;
    px.omega_d = p0 + px.fp;
    px.omega_u = s0 + px.fs;
    return px;
}

OutputFields output_fields(const MediumParams &p, const ComplexField &control_field,
                           const ComplexField &probe_p, const ComplexField &probe_s, int threads)
{
    if (!(control_field.grid == probe_p.grid) || !(control_field.grid == probe_s.grid))
        throw GridMismatchError("control and probe fields must share one grid");
    const Grid2D grid = control_field.grid;

    OutputFields out{ComplexField(grid), ComplexField(grid), probe_p, ComplexField(grid),
                     probe_s, ComplexField(grid), ComplexField(grid), ComplexField(grid)};
    parallel_for(
        grid.size(),
        [&](std::size_t i) {
            const auto px = solve_pixel(p, control_field[i], probe_p[i], probe_s[i]);
            out.omega_d[i] = px.omega_d;
            out.omega_u[i] = px.omega_u;
            out.p_out[i] = px.p_out;
            out.s_out[i] = px.s_out;
            out.fp[i] = px.fp;
            out.fs[i] = px.fs;
        },
        threads);
    return out;
}

} // namespace vortex_twm
