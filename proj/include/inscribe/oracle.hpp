#pragma once

#include <vector>

#include "inscribe/geometry.hpp"

namespace inscribe {

/// Radius values over a uniform grid on the contour's bounding box,
/// resolution points per axis (inclusive endpoints). The best grid value
/// underestimates the true optimum by at most L * cell_diagonal / 2.
struct OracleGrid {
    Box bbox;
    int resolution = 0;
    std::vector<double> values;  // index = iy * resolution + ix
    double value = 0.0;
    Point point;

    Point grid_point(int ix, int iy) const;
    double spacing_x() const;
    double spacing_y() const;
    double cell_diagonal() const;
    /// Worst-case gap between the grid maximum and the true optimum.
    double error_bound(double lipschitz) const;
};

OracleGrid brute_force_oracle(const Polygon& contour, const StarPattern& pattern, int resolution,
                              int threads = 1);

}  // namespace inscribe
