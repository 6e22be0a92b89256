// error.hpp - exception types shared by the simulator modules.

#pragma once

#include <stdexcept>
#include <string>

namespace vortex_twm
{

struct Error : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

// Rejected user input. `field` names the offending config key, e.g. "grid.n".
struct InvalidConfigError : Error
{
    InvalidConfigError(std::string field, const std::string &message)
        : Error(field + ": " + message), field_(std::move(field))
    {
    }
    const std::string &field() const noexcept { return field_; }

private:
    std::string field_;
};

// Y = 0: only reachable with zero decays and zero control at a pixel.
struct DegenerateMediumError : Error
{
    using Error::Error;
};

struct StepSizeError : Error
{
    using Error::Error;
};

struct GridMismatchError : Error
{
    using Error::Error;
};

struct AmplitudeFloorError : Error
{
    using Error::Error;
};

struct NonIntegerWindingError : Error
{
    using Error::Error;
};

struct StructurelessProfileError : Error
{
    using Error::Error;
};

struct OutOfGridError : Error
{
    using Error::Error;
};

struct ZeroFieldError : Error
{
    using Error::Error;
};

struct IoError : Error
{
    using Error::Error;
};

} // namespace vortex_twm
