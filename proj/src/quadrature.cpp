#include "levymap/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace levymap {

namespace {

// Gauss-Kronrod 15(7) nodes and weights on [-1, 1].
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

template <typename T>
struct Panel {
    double a, b;
    T value;
    double err;
};

template <typename T, typename F>
Panel<T> gk15(const F& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    T fc = f(c);
    T resk = kWgk[7] * fc;
    T resg = kWg[3] * fc;
    double resabs = kWgk[7] * std::abs(fc);
    for (int j = 0; j < 7; ++j) {
        const double x = h * kXgk[j];
        T f1 = f(c - x);
        T f2 = f(c + x);
        resk += kWgk[j] * (f1 + f2);
        resabs += kWgk[j] * (std::abs(f1) + std::abs(f2));
        if (j % 2 == 1)  // Kronrod nodes 1,3,5 are the Gauss-7 nodes
            resg += kWg[j / 2] * (f1 + f2);
    }
    T value = resk * h;
    double err = std::abs(resk - resg) * std::abs(h);
    // QUADPACK-style rescaling keeps the estimate honest near roundoff.
    resabs *= std::abs(h);
    if (resabs > 0.0 && err > 0.0)
        err = std::min(err, resabs);
    return {a, b, value, err};
}

template <typename T, typename F>
T adaptive(const F& f, double a, double b, double tol, int max_levels) {
    if (a == b) return T(0);
    auto cmp = [](const std::pair<double, size_t>& x, const std::pair<double, size_t>& y) {
        return x.first < y.first;
    };
    std::vector<Panel<T>> panels;
    panels.push_back(gk15<T>(f, a, b));
    std::priority_queue<std::pair<double, size_t>, std::vector<std::pair<double, size_t>>,
                        decltype(cmp)> worst(cmp);
    worst.push({panels[0].err, 0});
    double total_err = panels[0].err;
    // 2^60 panels is unreachable; bound the panel count instead so the level
    // limit translates to work actually done.
    const size_t max_panels = static_cast<size_t>(64) * static_cast<size_t>(max_levels);
    while (total_err > tol) {
        if (panels.size() >= max_panels || worst.empty())
            throw quadrature_nonconvergence(
                "refinement stalled, error " + std::to_string(total_err) +
                " above tolerance " + std::to_string(tol));
        auto [err, idx] = worst.top();
        worst.pop();
        if (err != panels[idx].err) continue;  // stale entry
        Panel<T> p = panels[idx];
        if (p.b - p.a <= std::abs(p.a) * 1e-15 + 1e-300) {
            // cannot subdivide further in double precision; accept this panel
            panels[idx].err = 0.0;
            total_err -= err;
            continue;
        }
        const double mid = 0.5 * (p.a + p.b);
        Panel<T> left = gk15<T>(f, p.a, mid);
        Panel<T> right = gk15<T>(f, mid, p.b);
        total_err += left.err + right.err - p.err;
        panels[idx] = left;
        worst.push({left.err, idx});
        panels.push_back(right);
        worst.push({right.err, panels.size() - 1});
    }
    // Fixed summation order keeps results reproducible.
    std::sort(panels.begin(), panels.end(),
              [](const Panel<T>& x, const Panel<T>& y) { return x.a < y.a; });
    T sum(0);
    for (const auto& p : panels) sum += p.value;
    return sum;
}

} // namespace

double integrate(const RealFn& f, double a, double b, double tol, int max_levels) {
    return adaptive<double>(f, a, b, tol, max_levels);
}

std::complex<double> integrate_complex(const ComplexFn& f, double a, double b,
                                       double tol, int max_levels) {
    return adaptive<std::complex<double>>(f, a, b, tol, max_levels);
}

double integrate_log(const RealFn& f, double a, double b, double tol) {
    if (!(a > 0.0)) throw std::invalid_argument("integrate_log: a must be > 0");
    auto g = [&f](double u) {
        const double r = std::exp(u);
        return f(r) * r;
    };
    if (std::isfinite(b)) {
        if (b <= a) return 0.0;
        double split_tol = 0.5 * tol;
        if (a < 1.0 && b > 1.0)
            return integrate(g, std::log(a), 0.0, split_tol) +
                   integrate(g, 0.0, std::log(b), split_tol);
        return integrate(g, std::log(a), std::log(b), tol);
    }
    // improper upper limit: march in log steps of width 4
    double lo = std::log(a);
    double total = 0.0;
    if (lo < 0.0) {
        total += integrate(g, lo, 0.0, 0.25 * tol);
        lo = 0.0;
    }
    int consecutive_small = 0;
    double step = 4.0;
    for (int k = 0; k < 600; ++k) {
        double hi = lo + step;
        double piece = integrate(g, lo, hi, 0.125 * tol);
        total += piece;
        lo = hi;
        if (std::abs(piece) < 0.125 * tol) {
            if (++consecutive_small >= 2) return total;
        } else {
            consecutive_small = 0;
        }
    }
    throw quadrature_nonconvergence("improper upper tail did not decay");
}

double integrate_log_to_zero(const RealFn& f, double b, double tol) {
    if (!(b > 0.0)) return 0.0;
    auto g = [&f](double u) {
        const double r = std::exp(u);
        return f(r) * r;
    };
    double hi = std::log(b);
    double total = 0.0;
    int consecutive_small = 0;
    double step = 4.0;
    for (int k = 0; k < 600; ++k) {
        double lo = hi - step;
        double piece = integrate(g, lo, hi, 0.125 * tol);
        total += piece;
        hi = lo;
        if (std::abs(piece) < 0.125 * tol) {
            if (++consecutive_small >= 2) return total;
        } else {
            consecutive_small = 0;
        }
    }
    throw quadrature_nonconvergence("integrand did not decay towards zero");
}

} // namespace levymap
