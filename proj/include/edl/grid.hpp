#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace edl {

/// Uniform 1-D grid on [x0, x0 + n*h], cell centers at x0 + (i+1/2)h.
struct Grid1D {
    double x0 = 0.0;
    double h = 0.0;
    int n = 0;
    double center(int i) const { return x0 + (i + 0.5) * h; }
    double xmax() const { return x0 + n * h; }
};

/// Radial grid on [0, n*h], cell centers offset h/2 from the axis.
struct RadialGrid {
    double h = 0.0;
    int n = 0;
    double center(int i) const { return (i + 0.5) * h; }
    double rmax() const { return n * h; }
};

/// Uniform square 2-D grid; cell (i,j) centered at (x0+(i+1/2)h, y0+(j+1/2)h).
struct Grid2D {
    double x0 = 0.0;
    double y0 = 0.0;
    double h = 0.0;
    int nx = 0;
    int ny = 0;
    std::size_t size() const { return static_cast<std::size_t>(nx) * ny; }
    std::size_t idx(int i, int j) const { return static_cast<std::size_t>(j) * nx + i; }
    double xc(int i) const { return x0 + (i + 0.5) * h; }
    double yc(int j) const { return y0 + (j + 0.5) * h; }

    /// Centered square grid covering [-L, L]^2 with spacing as close to h_want as fits.
    static Grid2D centered(double L, double h_want) {
        Grid2D g;
        g.nx = g.ny = static_cast<int>(std::ceil(2.0 * L / h_want));
        if (g.nx % 2 != 0) ++g.nx, ++g.ny;
        g.h = 2.0 * L / g.nx;
        g.x0 = -L;
        g.y0 = -L;
        return g;
    }
};

using Field = std::vector<double>;

} // namespace edl
