#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "strohhacker/thresholds.hpp"

namespace strohhacker::admissibility {

using Complex = std::complex<double>;
using thresholds::TheoremId;

/// Note embedded in every admissibility output: the region constant is
/// applied to (1 + rho^2), treating the (1 + rho)^2 variant occasionally
/// seen in print as a misprint.
extern const char* const kRegionNote;

/// One admissibility certification problem: the map psi of an implication
/// template, the region boundary sigma <= -curve_k (1 + rho^2), and the
/// half-plane threshold the supremum of Re psi must not exceed.
struct AdmissibilityProblem {
    TheoremId psi = TheoremId::T22;
    int p = 1;
    double b = 0.0;      ///< fixed second coefficient (A_{p,b} templates)
    double level = 0.0;  ///< beta or gamma argument where applicable
    double zeta = 0.0;   ///< fixed first coefficient of the transfer function
    double curve_k = 0.5;
    double threshold = 0.0;

    /// Validates the parameter domain (delegating to the closed forms) and
    /// derives zeta, curve_k and the threshold.
    static AdmissibilityProblem make(TheoremId id, int p, double b, double level);
};

/// psi(r, s) for the problem's template; principal-branch square roots.
/// Throws PoleHit when a rational denominator is within 1e-12 of zero.
Complex psi_eval(const AdmissibilityProblem& problem, Complex r, Complex s);

/// Closed-form limit of Re psi(i rho, sigma(rho)) along the boundary curve
/// as |rho| -> infinity.
double asymptotic_limit(const AdmissibilityProblem& problem);

struct SupReport {
    double sup_value = 0.0;
    double arg_rho = 0.0;
    bool attained_at_infinity = false;
    double margin = 0.0;  ///< threshold - sup_value
    double threshold = 0.0;
    double curve_k = 0.0;
    bool certified = false;  ///< sup_value <= threshold + 1e-9
};

/// Supremum of Re psi(i rho, sigma) over the admissibility region, sampled
/// on the boundary curve (tanh-spaced rho, |rho| <= rho_max) plus interior
/// sigma lines. When the running maximum still grows over the last decade
/// of rho the analytic limit is appended as the supremum.
SupReport sup_on_region(const AdmissibilityProblem& problem, double rho_max = 1e3,
                        int samples = 2001);

/// Samples Re psi(i rho, sigma) for sigma from -sigma_depth up to the
/// boundary value and reports whether it is non-decreasing in sigma (so the
/// region supremum lies on the boundary curve).
bool interior_monotonicity_check(const AdmissibilityProblem& problem, double rho,
                                 double sigma_depth = 10.0, int samples = 64);

/// (rho, Re psi on the boundary curve) pairs for CSV export.
std::vector<std::pair<double, double>> boundary_curve(const AdmissibilityProblem& problem,
                                                      double rho_max, int samples);

} // namespace strohhacker::admissibility
