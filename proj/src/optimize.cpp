#include "kxor/optimize.hpp"

#include <algorithm>

namespace kxor {

double golden_section_max(const std::function<double(double)>& f, double a, double b,
                          double tol) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

ScanMax scan_then_refine_max(const std::function<double(double)>& f, double a, double b,
                             int points, double tol) {
    double best_x = a, best_v = f(a);
    for (int i = 1; i < points; ++i) {
        double x = a + (b - a) * i / (points - 1);
        double v = f(x);
        if (v > best_v) {
            best_v = v;
            best_x = x;
        }
    }
    double h = (b - a) / (points - 1);
    double lo = std::max(a, best_x - h);
    double hi = std::min(b, best_x + h);
    double x = golden_section_max(f, lo, hi, tol);
    double v = f(x);
    if (v >= best_v) return {x, v};
    return {best_x, best_v};
}

NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             const std::vector<double>& start, double step, int max_iter,
                             double tol) {
    const std::size_t dim = start.size();
    std::vector<std::vector<double>> pts(dim + 1, start);
    for (std::size_t i = 0; i < dim; ++i) pts[i + 1][i] += step;
    std::vector<double> vals(dim + 1);
    for (std::size_t i = 0; i <= dim; ++i) vals[i] = f(pts[i]);

    auto order = [&]() {
        std::vector<std::size_t> idx(dim + 1);
        for (std::size_t i = 0; i <= dim; ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
            return vals[a] < vals[b];
        });
        std::vector<std::vector<double>> p2;
        std::vector<double> v2;
        for (std::size_t i : idx) {
            p2.push_back(pts[i]);
            v2.push_back(vals[i]);
        }
        pts.swap(p2);
        vals.swap(v2);
    };

    NelderMeadResult res;
    int iter = 0;
    for (; iter < max_iter; ++iter) {
        order();
        if (std::abs(vals.back() - vals.front()) < tol) {
            res.converged = true;
            break;
        }
        std::vector<double> centroid(dim, 0.0);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) centroid[j] += pts[i][j] / dim;

        auto affine = [&](double coef) {
            std::vector<double> p(dim);
            for (std::size_t j = 0; j < dim; ++j)
                p[j] = centroid[j] + coef * (pts[dim][j] - centroid[j]);
            return p;
        };

        std::vector<double> refl = affine(-1.0);
        double frefl = f(refl);
        if (frefl < vals[0]) {
            std::vector<double> exp_p = affine(-2.0);
            double fexp = f(exp_p);
            if (fexp < frefl) {
                pts[dim] = exp_p;
                vals[dim] = fexp;
            } else {
                pts[dim] = refl;
                vals[dim] = frefl;
            }
        } else if (frefl < vals[dim - 1]) {
            pts[dim] = refl;
            vals[dim] = frefl;
        } else {
            std::vector<double> contr = affine(frefl < vals[dim] ? -0.5 : 0.5);
            double fcontr = f(contr);
            if (fcontr < std::min(frefl, vals[dim])) {
                pts[dim] = contr;
                vals[dim] = fcontr;
            } else {
                for (std::size_t i = 1; i <= dim; ++i) {
                    for (std::size_t j = 0; j < dim; ++j)
                        pts[i][j] = pts[0][j] + 0.5 * (pts[i][j] - pts[0][j]);
                    vals[i] = f(pts[i]);
                }
            }
        }
    }
    order();
    res.x = pts[0];
    res.value = vals[0];
    res.iterations = iter;
    return res;
}

}  // namespace kxor
