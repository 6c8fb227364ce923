#pragma once

#include <vector>

#include "fmr/ring.hpp"

namespace fmr {

struct ShapeMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Dense square matrix of ring-element values. Indices are 1-based to
/// match the subscript conventions used throughout the library.
struct Mat {
    int n = 0;
    std::vector<Int> a;  // row-major

    Mat() = default;
    explicit Mat(int order, Int fill = 0) : n(order), a(std::size_t(order) * order, fill) {}

    Int& at(int i, int j) { return a[std::size_t(i - 1) * n + (j - 1)]; }
    Int at(int i, int j) const { return a[std::size_t(i - 1) * n + (j - 1)]; }

    bool operator==(const Mat&) const = default;
};

}  // namespace fmr
