#pragma once

#include <algorithm>
#include <variant>
#include <vector>

#include "pzl/common.hpp"

namespace pzl {

struct Box {
    double xmin = 0, xmax = 0, ymin = 0, ymax = 0;

    double width() const { return xmax - xmin; }
    double height() const { return ymax - ymin; }
    double area() const { return width() * height(); }
    cplx center() const { return {0.5 * (xmin + xmax), 0.5 * (ymin + ymax)}; }
    bool contains(cplx z) const {
        return z.real() >= xmin && z.real() <= xmax && z.imag() >= ymin && z.imag() <= ymax;
    }
    bool empty() const { return xmax <= xmin || ymax <= ymin; }

    static Box around(cplx c, double half) {
        return {c.real() - half, c.real() + half, c.imag() - half, c.imag() + half};
    }
    Box merged(const Box& o) const {
        return {std::min(xmin, o.xmin), std::max(xmax, o.xmax),
                std::min(ymin, o.ymin), std::max(ymax, o.ymax)};
    }
};

// region specs usable in scenario files; density restrictions are built from these
struct DiskRegion {
    cplx center;
    double radius;
};
struct BoxRegion {
    Box box;
};
// {|x2| <= c (1 + |x1|)^tau}
struct StripRegion {
    double c;
    double tau;
};
// arg z in (theta1, theta2) mod 2pi
struct SectorRegion {
    double theta1, theta2;
};
// arg z in (t1,t2) or (t1+pi, t2+pi)
struct DoubleSectorRegion {
    double theta1, theta2;
};
// plane with disks removed
struct PunchedRegion {
    std::vector<DiskRegion> holes;
};

using Region =
    std::variant<DiskRegion, BoxRegion, StripRegion, SectorRegion, DoubleSectorRegion, PunchedRegion>;

inline bool angle_in(double theta, double a, double b) {
    // normalizes theta into [a, a+2pi) and compares against b
    double t = theta - a;
    t -= two_pi * std::floor(t / two_pi);
    return t < (b - a);
}

inline bool region_contains(const Region& r, cplx z) {
    return std::visit(
        [&](const auto& reg) -> bool {
            using T = std::decay_t<decltype(reg)>;
            if constexpr (std::is_same_v<T, DiskRegion>) {
                return std::abs(z - reg.center) < reg.radius;
            } else if constexpr (std::is_same_v<T, BoxRegion>) {
                return reg.box.contains(z);
            } else if constexpr (std::is_same_v<T, StripRegion>) {
                return std::abs(z.imag()) <= reg.c * std::pow(1.0 + std::abs(z.real()), reg.tau);
            } else if constexpr (std::is_same_v<T, SectorRegion>) {
                return angle_in(std::arg(z), reg.theta1, reg.theta2);
            } else if constexpr (std::is_same_v<T, DoubleSectorRegion>) {
                double t = std::arg(z);
                return angle_in(t, reg.theta1, reg.theta2) ||
                       angle_in(t, reg.theta1 + pi, reg.theta2 + pi);
            } else {
                for (const auto& h : reg.holes)
                    if (std::abs(z - h.center) < h.radius) return false;
                return true;
            }
        },
        r);
}

} // namespace pzl
