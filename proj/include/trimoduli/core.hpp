#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <utility>

namespace trimoduli {

using Cplx = std::complex<double>;

/// Input outside an operation's domain (bad geometry, parameter out of range).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& msg, std::string field = {})
        : std::domain_error(msg), field_(std::move(field)) {}
    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

/// Violated postcondition or oracle disagreement. Always a bug, never a user error.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline Cplx cx(Point p) { return {p.x, p.y}; }
inline Point pt(Cplx z) { return {z.real(), z.imag()}; }

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator-(Point p) { return {-p.x, -p.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm2(Point p) { return p.x * p.x + p.y * p.y; }
inline double norm(Point p) { return std::hypot(p.x, p.y); }
inline double dist(Point a, Point b) { return norm(a - b); }

/// Quarter turn counterclockwise.
inline Point perp(Point p) { return {-p.y, p.x}; }

inline Point normalized(Point p) {
    double n = norm(p);
    return {p.x / n, p.y / n};
}

/// Comparison context: relative tolerance with an absolute floor.
struct Tolerance {
    double rel = 1e-9;
    double abs = 1e-12;

    bool close(double a, double b) const {
        return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b)) + abs;
    }
    bool zero(double v, double scale = 1.0) const {
        return std::abs(v) <= rel * std::abs(scale) + abs;
    }
};

inline constexpr double pi = 3.14159265358979323846;

/// Reduce an angle to the canonical interval (-pi, pi].
inline double wrap_angle(double t) {
    t = std::remainder(t, 2 * pi);
    if (t <= -pi) t += 2 * pi;
    return t + 0.0;  // flush -0
}

/// Reduce an angle to [0, 2*pi).
inline double wrap_angle_positive(double t) {
    t = std::remainder(t, 2 * pi);
    if (t < 0) t += 2 * pi;
    return t + 0.0;
}

}  // namespace trimoduli
