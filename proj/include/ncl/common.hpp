// common.hpp - error types and the small dense matrix used throughout.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ncl {

// Bad argument to a library operation (dimension mismatch, non-finite
// input, out-of-range index, invalid configuration value).
struct invalid_input : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A file could not be parsed. `line` is 1-based, 0 if unknown.
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& msg, long line_no = 0)
        : std::runtime_error(msg), line(line_no) {}
    long line;
};

// File format version differs from what this build understands.
struct version_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Training produced a non-finite loss or gradient.
struct divergence_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Stored artifacts (checkpoints, datasets) do not fit together.
struct artifact_mismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Row-major dense matrix of doubles. Deliberately minimal: the models in
// this project are small enough that plain loops beat any BLAS setup cost.
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> a;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0.0) {}

    double& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    double operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    bool operator==(const Matrix&) const = default;
};

}  // namespace ncl
