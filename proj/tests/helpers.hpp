#pragma once

#include <cmath>

namespace rfp::test {

inline double rel_err(double actual, double expected) {
    return std::abs(actual - expected) / std::abs(expected);
}

}  // namespace rfp::test
