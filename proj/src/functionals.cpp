#include "strohhacker/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <numbers>

namespace strohhacker::functionals {

namespace {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

std::uint64_t fnv1a(const std::string& text) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

double re_at(const series::PowerSeries& h, double r, double theta) {
    return series::eval(h, Complex{r * std::cos(theta), r * std::sin(theta)}).real();
}

} // namespace

std::string kind_name(Kind kind) {
    switch (kind) {
        case Kind::Convexity: return "convexity";
        case Kind::Starlikeness: return "starlikeness";
        case Kind::SqrtDerivative: return "sqrt_derivative";
        case Kind::PowerRatio: return "power_ratio";
    }
    throw DomainError("unknown functional kind");
}

Kind parse_kind(const std::string& name) {
    if (name == "convexity") return Kind::Convexity;
    if (name == "starlikeness") return Kind::Starlikeness;
    if (name == "sqrt_derivative") return Kind::SqrtDerivative;
    if (name == "power_ratio") return Kind::PowerRatio;
    throw DomainError("unknown functional kind: " + name);
}

DiskGrid DiskGrid::standard() {
    DiskGrid grid;
    grid.radii.reserve(10);
    for (int j = 1; j <= 10; ++j) grid.radii.push_back(1.0 - std::ldexp(1.0, -j));
    return grid;
}

DiskGrid DiskGrid::with_angular(int count) const {
    DiskGrid grid = *this;
    grid.angular_count = count;
    return grid;
}

void DiskGrid::validate() const {
    if (radii.empty()) throw DomainError("disk grid needs at least one radius");
    double prev = 0.0;
    for (double r : radii) {
        if (!(r > prev && r < 1.0))
            throw DomainError("disk grid radii must be strictly increasing within (0, 1)");
        prev = r;
    }
    if (angular_count < 8 || !is_power_of_two(angular_count))
        throw DomainError("angular count must be a power of two >= 8");
    if (refine_rounds < 0) throw DomainError("refine rounds must be >= 0");
}

std::string DiskGrid::fingerprint() const {
    std::string text = "m=" + std::to_string(angular_count) +
                       ";rounds=" + std::to_string(refine_rounds) + ";r=";
    char buf[32];
    for (double r : radii) {
        std::snprintf(buf, sizeof buf, "%.17g,", r);
        text += buf;
    }
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a(text)));
    return buf;
}

PowerSeries normalized_derivative(const MultivalentFunction& f) {
    const PowerSeries du = series::derive(f.unit);
    return series::add(f.unit,
                       series::scale(series::shift_up(du), 1.0 / static_cast<double>(f.p)));
}

PowerSeries functional_series(const MultivalentFunction& f, Kind kind) {
    const double p = static_cast<double>(f.p);
    switch (kind) {
        case Kind::PowerRatio:
            return f.unit;
        case Kind::Starlikeness: {
            const PowerSeries zdu = series::shift_up(series::derive(f.unit));
            return series::add(PowerSeries::constant(p, f.unit.order()),
                               series::div(zdu, f.unit));
        }
        case Kind::Convexity: {
            const PowerSeries v = normalized_derivative(f);
            const PowerSeries zdv = series::shift_up(series::derive(v));
            return series::add(PowerSeries::constant(p, v.order()), series::div(zdv, v));
        }
        case Kind::SqrtDerivative:
            return series::sqrt1(normalized_derivative(f));
    }
    throw DomainError("unknown functional kind");
}

InfEstimate inf_real_disk(const PowerSeries& h, const DiskGrid& grid,
                          const PowerSeries* denominator) {
    grid.validate();
    InfEstimate est;
    est.min_modulus_denominator = std::numeric_limits<double>::infinity();
    est.per_radius_min.reserve(grid.radii.size());

    const int m = grid.angular_count;
    const double step = 2.0 * std::numbers::pi / m;

    for (double r : grid.radii) {
        // Coarse scan over equispaced angles; ties keep the first index.
        double best = std::numeric_limits<double>::infinity();
        int best_i = 0;
        {
            // Rotate z around the circle instead of recomputing sin/cos.
            const double cr = std::cos(step), sr = std::sin(step);
            double zr = r, zi = 0.0;
            for (int i = 0; i < m; ++i) {
                const double re = series::eval(h, Complex{zr, zi}).real();
                if (re < best) {
                    best = re;
                    best_i = i;
                }
                if (denominator != nullptr) {
                    est.min_modulus_denominator =
                        std::min(est.min_modulus_denominator,
                                 std::abs(series::eval(*denominator, Complex{zr, zi})));
                }
                const double t = zr * cr - zi * sr;
                zi = zr * sr + zi * cr;
                zr = t;
            }
        }

        // Local angular bisection around the coarse argmin.
        double left = (best_i - 1) * step;
        double center = best_i * step;
        double right = (best_i + 1) * step;
        double best_theta = center;
        for (int round = 0; round < grid.refine_rounds; ++round) {
            const double m1 = 0.5 * (left + center);
            const double m2 = 0.5 * (center + right);
            const double v1 = re_at(h, r, m1);
            const double v2 = re_at(h, r, m2);
            double center_val = re_at(h, r, center);
            if (v1 < center_val && v1 <= v2) {
                right = center;
                center = m1;
                center_val = v1;
            } else if (v2 < center_val) {
                left = center;
                center = m2;
                center_val = v2;
            } else {
                left = m1;
                right = m2;
            }
            if (center_val < best) {
                best = center_val;
                best_theta = center;
            }
        }

        est.per_radius_min.push_back(best);
        est.value = best;
        est.argmin = Complex{r * std::cos(best_theta), r * std::sin(best_theta)};
    }
    return est;
}

bool truncation_tail_significant(const PowerSeries& h, double radius) {
    const int n = h.order();
    const double tail = std::abs(h.coeff(n)) * std::pow(radius, n) * (n + 1.0);
    return tail > 1e-8;
}

BoundCheck pointwise_check(const MultivalentFunction& f, Kind kind, double bound,
                           const DiskGrid& grid) {
    BoundCheck check;
    check.kind = kind;
    check.bound = bound;

    const PowerSeries h = functional_series(f, kind);
    const PowerSeries* den = nullptr;
    PowerSeries den_series;
    switch (kind) {
        case Kind::Starlikeness:
            den_series = f.unit;
            den = &den_series;
            break;
        case Kind::Convexity:
        case Kind::SqrtDerivative:
            den_series = normalized_derivative(f);
            den = &den_series;
            break;
        case Kind::PowerRatio:
            break;
    }

    check.inf = inf_real_disk(h, grid, den);
    check.margin = check.inf.value - bound;
    check.passed = check.margin > 0.0;
    check.truncation_warning = truncation_tail_significant(h, grid.max_radius());
    return check;
}

} // namespace strohhacker::functionals
