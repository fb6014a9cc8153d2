#pragma once

#include <string>

#include "strohhacker/errors.hpp"

namespace strohhacker::thresholds {

/// Identifiers of the built-in implication templates and the auxiliary
/// rational-minimum lemma. These tags are part of the CLI surface.
enum class TheoremId { T22, T24, T25, T31, T32, T33, T37, T38, LemmaPhi };

std::string theorem_name(TheoremId id);
TheoremId parse_theorem(const std::string& name);

/// phi(x, a, b) = (1 + x) / ((a - b)^2 x + b^2) for x >= 0, 0 <= b < a.
double phi(double x, double a, double b);

/// Two-branch minimum of phi over [0, inf):
/// 1/(a-b)^2 for b <= a/2 (limit at infinity), 1/b^2 for b >= a/2 (at 0).
double phi_min(double a, double b);

/// Convexity level that forces Re sqrt(f'/(p z^(p-1))) > beta on A_p.
/// Piecewise at beta = 1/2; domain 0 <= beta < 1.
double alpha_T22(double beta, int p);

/// Lower end of the admissible gamma interval for beta_T24: (p^2+1)/(p+1)^2.
double t24_gamma_lower(int p);

/// sqrt(((2p+1) gamma - 1) / (2p)); domain (p^2+1)/(p+1)^2 < gamma < 1.
double beta_T24(double gamma, int p);

/// sqrt(p)/2.
double beta_T25(int p);

/// Upper envelope xi + sqrt(xi^2 + eta^2) on the admissibility curve of the
/// square-root map behind beta_T24; its maximum in eta sits at 0.
double h_function(double eta, double gamma, int p);

/// Closed form of h''(0); negative throughout the beta_T24 domain.
double h_second_deriv_at0(double gamma, int p);

/// Fixed-coefficient convexity-to-starlikeness level; piecewise at beta = p/2.
/// Domain 0 <= beta < p, 0 <= b <= 2(p - beta).
double alpha_T31(double beta, int p, double b);

/// Fixed-coefficient starlikeness level implying Re(f/z^p) > gamma;
/// piecewise at gamma = 1/2. Domain 0 < gamma < 1, 0 <= b <= 2(1 - gamma).
double beta_T32(double gamma, int p, double b);

/// Fixed-coefficient convexity level for the square-root conclusion;
/// piecewise at beta = 1/2. Domain 0 <= beta < 1, 0 <= (p+1) b <= 4p(1 - beta).
double alpha_T33(double beta, int p, double b);

/// Quadratic feasibility of the T37 bound:
/// p^2 (2(1-gamma)+b)^2 + 16 (1-gamma)^2 - 8 p gamma (2(1-gamma)+b) < 0.
bool feasible_T37(double gamma, int p, double b);

/// sqrt(((4+(2+b)p) gamma - 2(1+p) gamma^2 - 2) / (p (b + 2(1-gamma)))).
/// Throws Infeasible when feasible_T37 fails.
double beta_T37(double gamma, int p, double b);

/// Roots of the two quadratics in gamma entering g''(0): gamma1/gamma2 for
/// the denominator quadratic, gamma3/gamma4 for the feasibility quadratic.
struct RootQuadruple {
    double gamma1;
    double gamma2;
    double gamma3;
    double gamma4;
};

RootQuadruple gamma_roots(int p, double b);

/// Fixed-coefficient analogue of h_function.
double g_function(double eta, double gamma, int p, double b);

/// Closed form of g''(0) (ratio of the two quadratics).
double g_second_deriv_at0(double gamma, int p, double b);

/// g''(0) written through the gamma roots; algebraically identical.
double g_second_deriv_at0_factored(double gamma, int p, double b);

/// sqrt((1+b) p / 8); domain 0 <= b <= 1.
double beta_T38(int p, double b);

/// A named closed-form bound: which template, its parameters, the input
/// level (beta or gamma where applicable) and the resulting bound.
struct ThresholdSpec {
    TheoremId id;
    int p;
    double b;            ///< ignored by the A_p templates
    double input_level;  ///< beta or gamma; ignored by T25/T38/LemmaPhi
    double output_level;
};

/// Dispatch to the closed form for the given template. For LemmaPhi the
/// roles are (a, b) = (input_level, b) and the output is phi_min.
ThresholdSpec make_threshold(TheoremId id, int p, double b, double input_level);

} // namespace strohhacker::thresholds
