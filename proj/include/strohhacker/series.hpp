#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "strohhacker/errors.hpp"

namespace strohhacker::series {

using Complex = std::complex<double>;

/// Default truncation degree for series produced by the corpus generators.
inline constexpr int kDefaultOrder = 32;

/// Constant terms smaller than this are treated as structural zeros by div.
inline constexpr double kLeadingCoeffTol = 1e-14;

/// Truncated power series c0 + c1 z + ... + cN z^N on the unit disk.
///
/// Values are immutable after construction. Binary operations truncate the
/// result to the minimum order of the operands.
class PowerSeries {
public:
    PowerSeries() : coeffs_{Complex{0.0, 0.0}} {}

    explicit PowerSeries(std::vector<Complex> coeffs);

    static PowerSeries constant(Complex c0, int order = 0);
    static PowerSeries zero(int order) { return constant(0.0, order); }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Complex>& coeffs() const { return coeffs_; }

    /// Coefficient of z^k; zero beyond the truncation order.
    Complex coeff(int k) const {
        if (k < 0 || k > order()) return {0.0, 0.0};
        return coeffs_[static_cast<std::size_t>(k)];
    }

    /// Copy truncated (or zero-padded) to the given order.
    PowerSeries truncated(int order) const;

private:
    std::vector<Complex> coeffs_;
};

/// Termwise derivative; order drops by one (constant maps to the zero
/// series of order 0).
PowerSeries derive(const PowerSeries& f);

/// Cauchy product truncated to the minimum operand order.
PowerSeries mul(const PowerSeries& f, const PowerSeries& g);

/// Series quotient h with mul(h, g) = f up to the truncation order.
/// Throws ZeroLeadingCoefficient when |g(0)| < kLeadingCoeffTol.
PowerSeries div(const PowerSeries& f, const PowerSeries& g);

/// Square root with branch sqrt(1) = 1 of a series with constant term 1.
/// Throws NotNormalized when |g(0) - 1| > kLeadingCoeffTol.
PowerSeries sqrt1(const PowerSeries& g);

/// Horner evaluation at a point of the closed unit disk.
/// Throws OutOfDisk when |z| > 1 + 1e-12.
Complex eval(const PowerSeries& f, Complex z);

PowerSeries add(const PowerSeries& f, const PowerSeries& g);
PowerSeries sub(const PowerSeries& f, const PowerSeries& g);
PowerSeries scale(const PowerSeries& f, Complex factor);

/// Multiplication by z: shifts coefficients up, order grows by one.
PowerSeries shift_up(const PowerSeries& f);

inline PowerSeries operator+(const PowerSeries& f, const PowerSeries& g) { return add(f, g); }
inline PowerSeries operator-(const PowerSeries& f, const PowerSeries& g) { return sub(f, g); }
inline PowerSeries operator*(const PowerSeries& f, const PowerSeries& g) { return mul(f, g); }

/// Member of A_p (or A_{p,b} when the second coefficient is pinned):
/// f(z) = z^p * u(z) with u(0) = 1.
struct MultivalentFunction {
    int p = 1;
    std::optional<double> b;   ///< fixed second coefficient, real >= 0
    PowerSeries unit;          ///< u with f = z^p u

    MultivalentFunction(int valence, PowerSeries u);
    MultivalentFunction(int valence, double fixed_b, PowerSeries u);

    /// Whole-function evaluation z^p * u(z).
    Complex eval_at(Complex z) const;
};

} // namespace strohhacker::series
