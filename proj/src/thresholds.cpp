#include "strohhacker/thresholds.hpp"

#include <cmath>

namespace strohhacker::thresholds {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw DomainError(what);
}

void require_p(int p) { require(p >= 1, "valence p must be a positive integer"); }

// Quadratic in gamma whose positivity makes the T37 radicand positive:
// (4 + (2+b) p) gamma - 2 (1+p) gamma^2 - 2.
double t37_radicand_numerator(double gamma, int p, double b) {
    return (4.0 + (2.0 + b) * p) * gamma - 2.0 * (1.0 + p) * gamma * gamma - 2.0;
}

// Left side of the T37 feasibility inequality.
double t37_feasibility_lhs(double gamma, int p, double b) {
    const double m = 2.0 * (1.0 - gamma) + b;
    const double one_m_g = 1.0 - gamma;
    return p * p * m * m + 16.0 * one_m_g * one_m_g - 8.0 * p * gamma * m;
}

void require_t37_domain(double gamma, int p, double b) {
    require_p(p);
    require(gamma > 0.0 && gamma < 1.0, "gamma must lie in (0, 1)");
    require(b >= 0.0 && b <= 2.0 * (1.0 - gamma), "b must lie in [0, 2(1-gamma)]");
}

} // namespace

std::string theorem_name(TheoremId id) {
    switch (id) {
        case TheoremId::T22: return "T22";
        case TheoremId::T24: return "T24";
        case TheoremId::T25: return "T25";
        case TheoremId::T31: return "T31";
        case TheoremId::T32: return "T32";
        case TheoremId::T33: return "T33";
        case TheoremId::T37: return "T37";
        case TheoremId::T38: return "T38";
        case TheoremId::LemmaPhi: return "LemmaPhi";
    }
    throw DomainError("unknown theorem id");
}

TheoremId parse_theorem(const std::string& name) {
    if (name == "T22") return TheoremId::T22;
    if (name == "T24") return TheoremId::T24;
    if (name == "T25") return TheoremId::T25;
    if (name == "T31") return TheoremId::T31;
    if (name == "T32") return TheoremId::T32;
    if (name == "T33") return TheoremId::T33;
    if (name == "T37") return TheoremId::T37;
    if (name == "T38") return TheoremId::T38;
    if (name == "LemmaPhi") return TheoremId::LemmaPhi;
    throw DomainError("unknown theorem name: " + name);
}

double phi(double x, double a, double b) {
    require(b >= 0.0 && b < a, "phi requires 0 <= b < a");
    require(x >= 0.0, "phi requires x >= 0");
    if (b == 0.0 && x == 0.0)
        throw SingularDenominator("phi(0, a, 0) has a vanishing denominator");
    const double d = a - b;
    return (1.0 + x) / (d * d * x + b * b);
}

double phi_min(double a, double b) {
    require(b >= 0.0 && b < a, "phi_min requires 0 <= b < a");
    if (b <= a / 2.0) {
        const double d = a - b;
        return 1.0 / (d * d);
    }
    return 1.0 / (b * b);
}

double alpha_T22(double beta, int p) {
    require_p(p);
    require(beta >= 0.0 && beta < 1.0, "beta must lie in [0, 1)");
    if (beta <= 0.5) return p - beta / (1.0 - beta);
    return p - (1.0 - beta) / beta;
}

double t24_gamma_lower(int p) {
    require_p(p);
    const double pp = static_cast<double>(p);
    return (pp * pp + 1.0) / ((pp + 1.0) * (pp + 1.0));
}

double beta_T24(double gamma, int p) {
    require(gamma > t24_gamma_lower(p) && gamma < 1.0,
            "gamma must lie in ((p^2+1)/(p+1)^2, 1)");
    return std::sqrt(((2.0 * p + 1.0) * gamma - 1.0) / (2.0 * p));
}

double beta_T25(int p) {
    require_p(p);
    return std::sqrt(static_cast<double>(p)) / 2.0;
}

double h_function(double eta, double gamma, int p) {
    require(gamma > t24_gamma_lower(p) && gamma < 1.0,
            "gamma must lie in ((p^2+1)/(p+1)^2, 1)");
    const double one_m_g = 1.0 - gamma;
    const double xi = gamma - (one_m_g * one_m_g + eta * eta) / (2.0 * p * one_m_g);
    return xi + std::sqrt(xi * xi + eta * eta);
}

double h_second_deriv_at0(double gamma, int p) {
    require(gamma > t24_gamma_lower(p) && gamma < 1.0,
            "gamma must lie in ((p^2+1)/(p+1)^2, 1)");
    const double num = 2.0 * (1.0 - (2.0 * p + 1.0) * gamma + p * p * (1.0 - gamma));
    const double den = p * (1.0 - gamma) * ((2.0 * p + 1.0) * gamma - 1.0);
    return num / den;
}

double alpha_T31(double beta, int p, double b) {
    require_p(p);
    require(beta >= 0.0 && beta < p, "beta must lie in [0, p)");
    require(b >= 0.0 && b <= 2.0 * (p - beta), "b must lie in [0, 2(p-beta)]");
    const double m = 2.0 * (p - beta) + b;
    if (beta <= p / 2.0) return beta * (1.0 - 2.0 / m);
    const double d = p - beta;
    return beta * (1.0 - 2.0 * d * d / (beta * beta * m));
}

double beta_T32(double gamma, int p, double b) {
    require_p(p);
    require(gamma > 0.0 && gamma < 1.0, "gamma must lie in (0, 1)");
    require(b >= 0.0 && b <= 2.0 * (1.0 - gamma), "b must lie in [0, 2(1-gamma)]");
    const double m = 2.0 * (1.0 - gamma) + b;
    if (gamma <= 0.5) return p - 2.0 * gamma / m;
    const double d = 1.0 - gamma;
    return p - 2.0 * d * d / (gamma * m);
}

double alpha_T33(double beta, int p, double b) {
    require_p(p);
    require(beta >= 0.0 && beta < 1.0, "beta must lie in [0, 1)");
    require(b >= 0.0 && (p + 1.0) * b <= 4.0 * p * (1.0 - beta),
            "b must satisfy 0 <= (p+1) b <= 4p(1-beta)");
    const double m = 4.0 * p * (1.0 - beta) + (p + 1.0) * b;
    if (beta <= 0.5) return p - 8.0 * p * beta / m;
    const double d = 1.0 - beta;
    return p - 8.0 * p * d * d / (beta * m);
}

bool feasible_T37(double gamma, int p, double b) {
    require_t37_domain(gamma, p, b);
    return t37_feasibility_lhs(gamma, p, b) < 0.0;
}

double beta_T37(double gamma, int p, double b) {
    require_t37_domain(gamma, p, b);
    if (!(t37_feasibility_lhs(gamma, p, b) < 0.0))
        throw Infeasible("T37 feasibility condition fails for these parameters");
    const double m = 2.0 * (1.0 - gamma) + b;
    return std::sqrt(t37_radicand_numerator(gamma, p, b) / (p * m));
}

RootQuadruple gamma_roots(int p, double b) {
    require_p(p);
    require(b >= 0.0, "b must be >= 0");
    const double pp = static_cast<double>(p);
    RootQuadruple r{};
    {
        const double base = 4.0 + (2.0 + b) * pp;
        const double disc = std::sqrt(pp) * std::sqrt(b * (8.0 + b * pp) + 4.0 * pp * (1.0 + b));
        r.gamma1 = (base - disc) / (4.0 * (1.0 + pp));
        r.gamma2 = (base + disc) / (4.0 * (1.0 + pp));
    }
    {
        const double base = 8.0 + pp * (2.0 + b) * (2.0 + pp);
        const double disc = 4.0 * std::sqrt(pp * pp * (1.0 + b) + 2.0 * pp * b);
        const double den = 2.0 * (pp + 2.0) * (pp + 2.0);
        r.gamma3 = (base - disc) / den;
        r.gamma4 = (base + disc) / den;
    }
    return r;
}

double g_function(double eta, double gamma, int p, double b) {
    require_t37_domain(gamma, p, b);
    const double m = 2.0 * (1.0 - gamma) + b;
    const double xi = (t37_radicand_numerator(gamma, p, b) - 2.0 * eta * eta) / (p * m);
    return xi + std::sqrt(xi * xi + eta * eta);
}

double g_second_deriv_at0(double gamma, int p, double b) {
    require_t37_domain(gamma, p, b);
    const double m = 2.0 * (1.0 - gamma) + b;
    return t37_feasibility_lhs(gamma, p, b) /
           (p * m * t37_radicand_numerator(gamma, p, b));
}

double g_second_deriv_at0_factored(double gamma, int p, double b) {
    require_t37_domain(gamma, p, b);
    const RootQuadruple r = gamma_roots(p, b);
    const double pp = static_cast<double>(p);
    const double m = 2.0 * (1.0 - gamma) + b;
    const double num = 2.0 * (pp + 2.0) * (pp + 2.0) * (gamma - r.gamma3) * (gamma - r.gamma4);
    const double den = pp * (pp + 1.0) * m * (gamma - r.gamma1) * (r.gamma2 - gamma);
    return num / den;
}

double beta_T38(int p, double b) {
    require_p(p);
    require(b >= 0.0 && b <= 1.0, "b must lie in [0, 1]");
    return std::sqrt((1.0 + b) * p / 8.0);
}

ThresholdSpec make_threshold(TheoremId id, int p, double b, double input_level) {
    ThresholdSpec spec{id, p, b, input_level, 0.0};
    switch (id) {
        case TheoremId::T22: spec.output_level = alpha_T22(input_level, p); break;
        case TheoremId::T24: spec.output_level = beta_T24(input_level, p); break;
        case TheoremId::T25: spec.output_level = beta_T25(p); break;
        case TheoremId::T31: spec.output_level = alpha_T31(input_level, p, b); break;
        case TheoremId::T32: spec.output_level = beta_T32(input_level, p, b); break;
        case TheoremId::T33: spec.output_level = alpha_T33(input_level, p, b); break;
        case TheoremId::T37: spec.output_level = beta_T37(input_level, p, b); break;
        case TheoremId::T38: spec.output_level = beta_T38(p, b); break;
        case TheoremId::LemmaPhi: spec.output_level = phi_min(input_level, b); break;
    }
    return spec;
}

} // namespace strohhacker::thresholds
