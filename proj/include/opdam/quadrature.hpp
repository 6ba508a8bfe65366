#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <queue>
#include <vector>

#include "opdam/errors.hpp"
#include "opdam/parameters.hpp"

namespace opdam {

/// How an infinite integration domain is cut to a finite one.
enum class Truncation { Fixed, Auto };

/// Tolerances and panel limits for every integral in the library.
struct QuadratureSpec {
    double rel_tol = 1e-9;
    double abs_tol = 1e-12;
    int max_panels = 2000;
    Truncation truncation = Truncation::Auto;
    double radius = 8.0;        // Fixed: integrate |x| <= radius
    double tail_target = 1e-12; // Auto: admissible tail mass

    void validate() const {
        if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
            throw DomainError("QuadratureSpec: tolerances must be positive");
        if (max_panels < 8) throw DomainError("QuadratureSpec: max_panels must be >= 8");
    }
};

namespace detail {

// Gauss-Kronrod 7/15 nodes and weights on [-1, 1] (QUADPACK values).
inline constexpr double kKronrodNodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
inline constexpr double kKronrodWeights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
inline constexpr double kGaussWeights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

template <typename T>
double abs_of(const T& v) {
    if constexpr (std::is_same_v<T, Complex>) return std::abs(v);
    else return std::fabs(v);
}

template <typename T, typename F>
void gk15(const F& f, double a, double b, T* integral, double* err) {
    double c = 0.5 * (a + b);
    double h = 0.5 * (b - a);
    T resk{};
    T resg{};
    for (int j = 0; j < 8; ++j) {
        double xi = h * kKronrodNodes[j];
        T fv;
        if (j == 7) fv = f(c);
        else fv = f(c - xi) + f(c + xi);
        resk += kKronrodWeights[j] * fv;
        if (j % 2 == 1) resg += kGaussWeights[j / 2] * fv;
    }
    *integral = resk * h;
    *err = abs_of<T>((resk - resg) * h);
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod integration of f over [a, b].
/// Splits the worst panel until the summed Kronrod error estimate drops
/// below max(abs_tol, rel_tol * |I|); throws AccuracyError past max_panels.
template <typename T, typename F>
T integrate(const F& f, double a, double b, const QuadratureSpec& spec) {
    if (a == b) return T{};
    struct Panel {
        double a, b, err;
        T val;
        bool operator<(const Panel& o) const { return err < o.err; }
    };
    std::priority_queue<Panel> panels;
    T total{};
    double total_err = 0.0;
    auto push = [&](double lo, double hi) {
        Panel p;
        p.a = lo;
        p.b = hi;
        detail::gk15<T>(f, lo, hi, &p.val, &p.err);
        total += p.val;
        total_err += p.err;
        panels.push(p);
    };
    push(a, b);
    int n = 1;
    while (total_err > std::max(spec.abs_tol, spec.rel_tol * detail::abs_of<T>(total))) {
        if (n >= spec.max_panels)
            throw AccuracyError("integrate: panel budget exhausted before tolerance");
        Panel worst = panels.top();
        panels.pop();
        total -= worst.val;
        total_err -= worst.err;
        double mid = 0.5 * (worst.a + worst.b);
        if (mid == worst.a || mid == worst.b) break;  // interval at machine resolution
        push(worst.a, mid);
        push(mid, worst.b);
        ++n;
    }
    // Recompute from surviving panels: avoids drift from the +-= bookkeeping.
    T sum{};
    while (!panels.empty()) {
        sum += panels.top().val;
        panels.pop();
    }
    return sum;
}

}  // namespace opdam
