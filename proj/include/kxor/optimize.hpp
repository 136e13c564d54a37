#pragma once

#include <cmath>
#include <functional>
#include <vector>

namespace kxor {

// Golden-section search for the maximum of a unimodal function on [a, b].
// Returns the abscissa; tol is the final bracket width.
double golden_section_max(const std::function<double(double)>& f, double a, double b,
                          double tol = 1e-12);

// Scan `points` samples of f on [a, b], then golden-refine around the best.
struct ScanMax {
    double x = 0.0;
    double value = 0.0;
};
ScanMax scan_then_refine_max(const std::function<double(double)>& f, double a, double b,
                             int points, double tol = 1e-12);

// Derivative-free Nelder-Mead MINIMIZATION in R^dim.
struct NelderMeadResult {
    std::vector<double> x;
    double value = 0.0;
    int iterations = 0;
    bool converged = false;
};
NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             const std::vector<double>& start, double step = 0.3,
                             int max_iter = 500, double tol = 1e-10);

}  // namespace kxor
