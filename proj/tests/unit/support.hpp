#ifndef CQNC_TEST_SUPPORT_HPP
#define CQNC_TEST_SUPPORT_HPP

#include "cqnc/error.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>

namespace cqnc::test {

inline double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

inline double rel(std::complex<double> a, std::complex<double> b)
{
    return std::abs(a - b) / std::abs(b);
}

/// Runs fn and returns the ErrorCode it throws; fails the test if it does not throw.
template <class Fn>
ErrorCode error_of(Fn&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected cqnc::Error");
    return ErrorCode::InvalidArgument;
}

} // namespace cqnc::test

#endif
