#include "strohhacker/series.hpp"

#include <algorithm>
#include <cmath>

namespace strohhacker::series {

namespace {

void require_finite(const std::vector<Complex>& coeffs) {
    for (const Complex& c : coeffs) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
            throw DomainError("power series coefficient is not finite");
    }
}

} // namespace

PowerSeries::PowerSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.push_back({0.0, 0.0});
    require_finite(coeffs_);
}

PowerSeries PowerSeries::constant(Complex c0, int order) {
    std::vector<Complex> c(static_cast<std::size_t>(std::max(order, 0)) + 1, Complex{0.0, 0.0});
    c[0] = c0;
    return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::truncated(int order) const {
    std::vector<Complex> c(static_cast<std::size_t>(std::max(order, 0)) + 1, Complex{0.0, 0.0});
    const std::size_t n = std::min(c.size(), coeffs_.size());
    std::copy_n(coeffs_.begin(), n, c.begin());
    return PowerSeries(std::move(c));
}

PowerSeries derive(const PowerSeries& f) {
    const int n = f.order();
    if (n == 0) return PowerSeries::zero(0);
    std::vector<Complex> c(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        c[static_cast<std::size_t>(k)] = static_cast<double>(k + 1) * f.coeff(k + 1);
    return PowerSeries(std::move(c));
}

PowerSeries mul(const PowerSeries& f, const PowerSeries& g) {
    const int n = std::min(f.order(), g.order());
    std::vector<Complex> c(static_cast<std::size_t>(n) + 1, Complex{0.0, 0.0});
    for (int k = 0; k <= n; ++k) {
        Complex acc{0.0, 0.0};
        for (int j = 0; j <= k; ++j) acc += f.coeff(j) * g.coeff(k - j);
        c[static_cast<std::size_t>(k)] = acc;
    }
    return PowerSeries(std::move(c));
}

PowerSeries div(const PowerSeries& f, const PowerSeries& g) {
    const Complex g0 = g.coeff(0);
    if (std::abs(g0) < kLeadingCoeffTol)
        throw ZeroLeadingCoefficient("series division by vanishing constant term");
    const int n = std::min(f.order(), g.order());
    std::vector<Complex> h(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        Complex acc = f.coeff(k);
        for (int j = 1; j <= k; ++j) acc -= g.coeff(j) * h[static_cast<std::size_t>(k - j)];
        h[static_cast<std::size_t>(k)] = acc / g0;
    }
    return PowerSeries(std::move(h));
}

PowerSeries sqrt1(const PowerSeries& g) {
    if (std::abs(g.coeff(0) - Complex{1.0, 0.0}) > kLeadingCoeffTol)
        throw NotNormalized("sqrt1 requires a series with constant term 1");
    const int n = g.order();
    std::vector<Complex> s(static_cast<std::size_t>(n) + 1);
    s[0] = {1.0, 0.0};
    for (int k = 1; k <= n; ++k) {
        Complex acc = g.coeff(k);
        for (int j = 1; j < k; ++j) acc -= s[static_cast<std::size_t>(j)] * s[static_cast<std::size_t>(k - j)];
        s[static_cast<std::size_t>(k)] = acc / 2.0;
    }
    return PowerSeries(std::move(s));
}

Complex eval(const PowerSeries& f, Complex z) {
    if (std::abs(z) > 1.0 + 1e-12)
        throw OutOfDisk("evaluation point outside the closed unit disk");
    // Manual Horner on (re, im) pairs; keeps the hot loop free of the
    // checked complex-multiply library call.
    const std::vector<Complex>& c = f.coeffs();
    const double zr = z.real(), zi = z.imag();
    double ar = c.back().real(), ai = c.back().imag();
    for (std::size_t k = c.size() - 1; k-- > 0;) {
        const double tr = ar * zr - ai * zi + c[k].real();
        ai = ar * zi + ai * zr + c[k].imag();
        ar = tr;
    }
    return {ar, ai};
}

PowerSeries add(const PowerSeries& f, const PowerSeries& g) {
    const int n = std::min(f.order(), g.order());
    std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(k)] = f.coeff(k) + g.coeff(k);
    return PowerSeries(std::move(c));
}

PowerSeries sub(const PowerSeries& f, const PowerSeries& g) {
    const int n = std::min(f.order(), g.order());
    std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(k)] = f.coeff(k) - g.coeff(k);
    return PowerSeries(std::move(c));
}

PowerSeries scale(const PowerSeries& f, Complex factor) {
    std::vector<Complex> c = f.coeffs();
    for (Complex& x : c) x *= factor;
    return PowerSeries(std::move(c));
}

PowerSeries shift_up(const PowerSeries& f) {
    std::vector<Complex> c(f.coeffs().size() + 1, Complex{0.0, 0.0});
    std::copy(f.coeffs().begin(), f.coeffs().end(), c.begin() + 1);
    return PowerSeries(std::move(c));
}

MultivalentFunction::MultivalentFunction(int valence, PowerSeries u)
    : p(valence), unit(std::move(u)) {
    if (p < 1) throw DomainError("valence must be a positive integer");
    if (unit.coeff(0) != Complex{1.0, 0.0})
        throw DomainError("unit part must have constant term exactly 1");
}

MultivalentFunction::MultivalentFunction(int valence, double fixed_b, PowerSeries u)
    : MultivalentFunction(valence, std::move(u)) {
    if (!(fixed_b >= 0.0)) throw DomainError("fixed second coefficient must be real >= 0");
    if (unit.coeff(1) != Complex{fixed_b, 0.0})
        throw DomainError("unit part's linear coefficient must equal the fixed b");
    b = fixed_b;
}

Complex MultivalentFunction::eval_at(Complex z) const {
    Complex zp{1.0, 0.0};
    for (int k = 0; k < p; ++k) zp *= z;
    return zp * eval(unit, z);
}

} // namespace strohhacker::series
