#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace toepl {

// Dense 2x2 real matrix with the closed-form spectral norm.
struct Mat2 {
    double a11 = 1, a12 = 0, a21 = 0, a22 = 1;

    static Mat2 identity() { return {}; }

    Mat2 operator*(const Mat2& o) const {
        return {a11 * o.a11 + a12 * o.a21, a11 * o.a12 + a12 * o.a22,
                a21 * o.a11 + a22 * o.a21, a21 * o.a12 + a22 * o.a22};
    }
    Mat2 operator-(const Mat2& o) const {
        return {a11 - o.a11, a12 - o.a12, a21 - o.a21, a22 - o.a22};
    }
    Mat2 operator+(const Mat2& o) const {
        return {a11 + o.a11, a12 + o.a12, a21 + o.a21, a22 + o.a22};
    }
    Mat2 scaled(double s) const { return {a11 * s, a12 * s, a21 * s, a22 * s}; }

    double det() const { return a11 * a22 - a12 * a21; }
    double trace() const { return a11 + a22; }

    Mat2 inverse() const {
        double d = det();
        return {a22 / d, -a12 / d, -a21 / d, a11 / d};
    }

    double max_abs() const {
        return std::max(std::max(std::fabs(a11), std::fabs(a12)),
                        std::max(std::fabs(a21), std::fabs(a22)));
    }

    // Operator 2-norm: square root of the larger eigenvalue of A^T A.
    // Entries are factored out first; the formula squares twice and would
    // overflow from about 1e77 otherwise.
    double norm() const {
        double scale = max_abs();
        if (scale == 0 || !std::isfinite(scale)) return scale;
        Mat2 n = scaled(1.0 / scale);
        double s = n.a11 * n.a11 + n.a12 * n.a12 + n.a21 * n.a21 + n.a22 * n.a22;
        double d = n.det();
        double disc = s * s - 4 * d * d;
        if (disc < 0) disc = 0;
        return scale * std::sqrt(0.5 * (s + std::sqrt(disc)));
    }
};

struct Vec2 {
    double x = 0, y = 0;
    double norm() const { return std::hypot(x, y); }
};

inline Vec2 operator*(const Mat2& m, const Vec2& v) {
    return {m.a11 * v.x + m.a12 * v.y, m.a21 * v.x + m.a22 * v.y};
}

// Matrix with an exponent factored out: value = m * exp(log_scale).
// Keeps long cocycle products inside double range.
struct ScaledMat {
    Mat2 m;
    double log_scale = 0;

    static ScaledMat identity() { return {Mat2::identity(), 0}; }

    void renormalize() {
        double s = m.max_abs();
        if (s > 0 && (s > 1e100 || s < 1e-100)) {
            m = m.scaled(1.0 / s);
            log_scale += std::log(s);
        }
    }

    ScaledMat operator*(const Mat2& o) const {
        ScaledMat r{m * o, log_scale};
        r.renormalize();
        return r;
    }

    double log_norm() const { return std::log(m.norm()) + log_scale; }
};

// Signed magnitude in log space; supports the absolute-value comparisons and
// the ring operations needed by trace recursions whose values overflow double.
struct LogReal {
    int sign = 0;        // -1, 0, +1
    double log_abs = 0;  // meaningful when sign != 0

    static LogReal from(double v) {
        if (v == 0) return {0, 0};
        return {v > 0 ? 1 : -1, std::log(std::fabs(v))};
    }
    static LogReal from_scaled(double mantissa, double log_scale) {
        if (mantissa == 0) return {0, 0};
        return {mantissa > 0 ? 1 : -1, std::log(std::fabs(mantissa)) + log_scale};
    }

    double to_double() const { return sign == 0 ? 0.0 : sign * std::exp(log_abs); }

    LogReal operator*(const LogReal& o) const {
        if (sign == 0 || o.sign == 0) return {0, 0};
        return {sign * o.sign, log_abs + o.log_abs};
    }
    LogReal operator+(const LogReal& o) const {
        if (sign == 0) return o;
        if (o.sign == 0) return *this;
        double hi = std::max(log_abs, o.log_abs);
        double a = sign * std::exp(log_abs - hi);
        double b = o.sign * std::exp(o.log_abs - hi);
        double s = a + b;
        if (s == 0) return {0, 0};
        return {s > 0 ? 1 : -1, std::log(std::fabs(s)) + hi};
    }
    LogReal operator-(const LogReal& o) const { return *this + LogReal{-o.sign, o.log_abs}; }

    // |this| <= |o| * (1 + tol) style comparison helper.
    bool abs_le(double bound) const {
        return sign == 0 || log_abs <= std::log(bound);
    }
};

}  // namespace toepl
