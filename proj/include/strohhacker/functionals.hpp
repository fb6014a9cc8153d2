#pragma once

#include <string>
#include <vector>

#include "strohhacker/series.hpp"

namespace strohhacker::functionals {

using series::Complex;
using series::MultivalentFunction;
using series::PowerSeries;

/// The four disk expressions whose real parts the implications bound.
enum class Kind { Convexity, Starlikeness, SqrtDerivative, PowerRatio };

std::string kind_name(Kind kind);
Kind parse_kind(const std::string& name);

/// Sampling grid on nested circles: strictly increasing radii in (0, 1),
/// a power-of-two angle count (>= 8), and a fixed number of local angular
/// bisection rounds around each coarse argmin.
struct DiskGrid {
    std::vector<double> radii;
    int angular_count = 4096;
    int refine_rounds = 3;

    /// r_j = 1 - 2^-j for j = 1..10, 4096 angles.
    static DiskGrid standard();

    DiskGrid with_angular(int count) const;

    void validate() const;

    /// Canonical hash of the grid parameters, embedded in reports so that
    /// margins can never be compared across mismatched grids unnoticed.
    std::string fingerprint() const;

    double max_radius() const { return radii.back(); }
};

/// Result of a disk sweep. `value` is the minimum at the largest sampled
/// radius; it is an upper bound of the true infimum over the open disk.
struct InfEstimate {
    double value = 0.0;
    Complex argmin{0.0, 0.0};
    std::vector<double> per_radius_min;
    /// Smallest |denominator series| seen over the same sample points, or
    /// +inf when the functional involves no division.
    double min_modulus_denominator = 0.0;
};

/// Normalized derivative v = f'/(p z^(p-1)) = u + z u'/p as a series.
PowerSeries normalized_derivative(const MultivalentFunction& f);

/// Series of the requested functional as an analytic function of z:
///   Convexity       -> p + z v'/v with v the normalized derivative,
///   Starlikeness    -> p + z u'/u,
///   SqrtDerivative  -> sqrt1(v),
///   PowerRatio      -> u.
PowerSeries functional_series(const MultivalentFunction& f, Kind kind);

/// Minimum of Re h over the sampled circles, refined around each coarse
/// argmin. When `denominator` is given its modulus is tracked over the
/// same points.
InfEstimate inf_real_disk(const PowerSeries& h, const DiskGrid& grid,
                          const PowerSeries* denominator = nullptr);

/// True when the last retained coefficient is non-negligible at the given
/// radius: |c_N| r^N (N+1) > 1e-8.
bool truncation_tail_significant(const PowerSeries& h, double radius);

/// Outcome of one functional-vs-bound disk check.
struct BoundCheck {
    Kind kind = Kind::PowerRatio;
    double bound = 0.0;
    double margin = 0.0;  ///< inf estimate minus bound
    bool passed = false;
    bool truncation_warning = false;
    InfEstimate inf;
};

BoundCheck pointwise_check(const MultivalentFunction& f, Kind kind, double bound,
                           const DiskGrid& grid);

} // namespace strohhacker::functionals
