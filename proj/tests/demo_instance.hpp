#pragma once

#include "geolp/problem.hpp"

// The 3-variable, 8-row showcase instance used across the test suites and
// shipped as fixtures/demo3x8.lp. Five inward-style rows, two non-negativity
// bounds, one slanted lower bound.
inline geolp::Problem demo3x8() {
    geolp::Problem p;
    p.objective = {0.5, 1.0, 2.0};
    p.constraints = {
        {{2.1, 3.0, 1.0}, geolp::Sense::LE, 5.2},
        {{1.7, 2.8, 2.1}, geolp::Sense::LE, 5.0},
        {{3.0, 1.0, 2.0}, geolp::Sense::LE, 5.5},
        {{1.1, 2.3, -1.0}, geolp::Sense::LE, 5.3},
        {{2.1, 3.0, 1.1}, geolp::Sense::LE, 5.8},
        {{1.0, 0.0, 0.0}, geolp::Sense::GE, 0.0},
        {{0.0, 1.0, 0.0}, geolp::Sense::GE, 0.0},
        {{0.0, 0.2, 1.0}, geolp::Sense::GE, -1.0},
    };
    return p;
}
