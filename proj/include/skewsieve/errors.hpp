#pragma once

#include <stdexcept>
#include <string>

namespace skewsieve {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The d-cores of outer and inner shape differ; the skew d-quotient is
// undefined and BST(lambda/mu, d) is empty.
struct CoreMismatch : Error {
    using Error::Error;
};

// Equal cores, but on some runner the inner bead positions are not
// dominated by the outer ones; again BST(lambda/mu, d) is empty.
struct RunnerNotNested : Error {
    using Error::Error;
};

struct InvalidFlip : Error {
    using Error::Error;
};

// A polynomial evaluated at a root of unity did not reduce to an integer.
struct NonIntegerValue : Error {
    using Error::Error;
};

struct SizeMismatch : Error {
    using Error::Error;
};

struct MatchingInfeasible : Error {
    using Error::Error;
};

}  // namespace skewsieve
