#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace extremal {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// All components of a disc vanish at some point of the closed unit disc.
struct CommonZeroOnDisc : Error { using Error::Error; };

/// f0 vanishes on (or too close to) the unit circle, so the boundary of the
/// disc would meet the hyperplane at infinity.
struct CircleCrossesInfinity : Error { using Error::Error; };

struct RootFindingFailure : Error { using Error::Error; };

/// The disc centre f(0) lies on the hyperplane at infinity.
struct CenterAtInfinity : Error { using Error::Error; };

struct DomainViolation : Error { using Error::Error; };

struct PointNotInDomain : Error { using Error::Error; };

struct SamplingFailure : Error { using Error::Error; };

struct ConstraintViolation : Error { using Error::Error; };

struct ParseError : Error {
    std::size_t position;
    std::vector<std::string> expected;

    ParseError(const std::string& msg, std::size_t pos, std::vector<std::string> exp)
        : Error(msg + " at position " + std::to_string(pos)),
          position(pos),
          expected(std::move(exp)) {}
};

}  // namespace extremal
