#include "inscribe/oracle.hpp"

#include <cmath>

#include "inscribe/error.hpp"

namespace inscribe {

Point OracleGrid::grid_point(int ix, int iy) const {
    return {bbox.lo[0] + ix * spacing_x(), bbox.lo[1] + iy * spacing_y()};
}

double OracleGrid::spacing_x() const {
    return resolution > 1 ? (bbox.hi[0] - bbox.lo[0]) / (resolution - 1) : 0.0;
}

double OracleGrid::spacing_y() const {
    return resolution > 1 ? (bbox.hi[1] - bbox.lo[1]) / (resolution - 1) : 0.0;
}

double OracleGrid::cell_diagonal() const { return std::hypot(spacing_x(), spacing_y()); }

double OracleGrid::error_bound(double lipschitz) const {
    return lipschitz * cell_diagonal() * 0.5;
}

OracleGrid brute_force_oracle(const Polygon& contour, const StarPattern& pattern, int resolution,
                              int threads) {
    if (resolution < 2) throw Error("oracle grid resolution must be at least 2");
    OracleGrid g;
    g.bbox = contour.bounding_box();
    g.resolution = resolution;
    g.values.assign(static_cast<std::size_t>(resolution) * resolution, kInfeasibleRadius);

    const double hx = g.spacing_x();
    const double hy = g.spacing_y();
    const double x0 = g.bbox.lo[0];
    const double y0 = g.bbox.lo[1];

#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(threads > 0 ? threads : 1)
#endif
    for (int iy = 0; iy < resolution; ++iy) {
        for (int ix = 0; ix < resolution; ++ix) {
            const Point p{x0 + ix * hx, y0 + iy * hy};
            g.values[static_cast<std::size_t>(iy) * resolution + ix] =
                radius_value(contour, pattern, p);
        }
    }

    g.value = kInfeasibleRadius;
    g.point = {x0, y0};
    for (int iy = 0; iy < resolution; ++iy) {
        for (int ix = 0; ix < resolution; ++ix) {
            const double v = g.values[static_cast<std::size_t>(iy) * resolution + ix];
            if (v > g.value) {
                g.value = v;
                g.point = g.grid_point(ix, iy);
            }
        }
    }
    return g;
}

}  // namespace inscribe
