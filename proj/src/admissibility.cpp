#include "strohhacker/admissibility.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace strohhacker::admissibility {

const char* const kRegionNote =
    "admissibility region implemented as sigma <= -k (1 + rho^2); the "
    "(1 + rho)^2 variant is treated as a misprint of (1 + rho^2)";

namespace {

constexpr double kPoleTol = 1e-12;

Complex guarded_ratio(Complex num, Complex den) {
    if (std::abs(den) <= kPoleTol)
        throw PoleHit("admissibility map evaluated at its pole");
    return num / den;
}

// rho grid ordered by |rho| (0 first, +rho before -rho) so that maxima tie
// toward the origin deterministically.
std::vector<double> rho_grid(double rho_max, int samples) {
    if (!(rho_max > 0.0)) throw DomainError("rho_max must be positive");
    if (samples < 64) throw DomainError("need at least 64 rho samples");
    const int half = samples / 2;
    std::vector<double> grid;
    grid.reserve(2 * static_cast<std::size_t>(half) + 1);
    grid.push_back(0.0);
    const double c = 6.0;
    const double norm = std::tanh(c);
    for (int i = 1; i <= half; ++i) {
        const double rho = rho_max * std::tanh(c * i / half) / norm;
        grid.push_back(rho);
        grid.push_back(-rho);
    }
    return grid;
}

} // namespace

AdmissibilityProblem AdmissibilityProblem::make(TheoremId id, int p, double b,
                                                double level) {
    AdmissibilityProblem problem;
    problem.psi = id;
    problem.p = p;
    problem.b = b;
    problem.level = level;
    // Validates the parameter domain as a side effect.
    problem.threshold = thresholds::make_threshold(id, p, b, level).output_level;

    switch (id) {
        case TheoremId::T22:
        case TheoremId::T24:
        case TheoremId::T25:
            problem.zeta = 0.0;
            problem.curve_k = 0.5;
            return problem;
        case TheoremId::T31:
            problem.zeta = b / (p - level);
            break;
        case TheoremId::T32:
        case TheoremId::T37:
            problem.zeta = b / (1.0 - level);
            break;
        case TheoremId::T33:
            problem.zeta = (p + 1.0) * b / (2.0 * p * (1.0 - level));
            break;
        case TheoremId::T38:
            problem.zeta = 2.0 * b;
            break;
        case TheoremId::LemmaPhi:
            throw DomainError("LemmaPhi has no admissibility problem");
    }
    if (problem.zeta > 2.0 + 1e-12)
        throw DomainError("fixed coefficient exceeds the admissible range (zeta > 2)");
    problem.curve_k = 2.0 / (2.0 + problem.zeta);
    return problem;
}

Complex psi_eval(const AdmissibilityProblem& problem, Complex r, Complex s) {
    const double p = static_cast<double>(problem.p);
    switch (problem.psi) {
        case TheoremId::T22:
        case TheoremId::T33: {
            const double beta = problem.level;
            return 2.0 * (1.0 - beta) * guarded_ratio(s, (1.0 - beta) * r + beta) + p;
        }
        case TheoremId::T31: {
            const double beta = problem.level;
            const Complex lin = (p - beta) * r + beta;
            return (p - beta) * guarded_ratio(s, lin) + lin;
        }
        case TheoremId::T32: {
            const double gamma = problem.level;
            return (1.0 - gamma) * guarded_ratio(s, (1.0 - gamma) * r + gamma) + p;
        }
        case TheoremId::T24:
        case TheoremId::T37: {
            const double gamma = problem.level;
            return std::sqrt((1.0 - gamma) * r + gamma + (1.0 - gamma) * s / p);
        }
        case TheoremId::T25:
        case TheoremId::T38:
            return std::sqrt((r + s / p + 1.0) / 2.0);
        case TheoremId::LemmaPhi:
            break;
    }
    throw DomainError("no psi map for this template");
}

double asymptotic_limit(const AdmissibilityProblem& problem) {
    const double p = static_cast<double>(problem.p);
    const double k = problem.curve_k;
    switch (problem.psi) {
        case TheoremId::T22:
        case TheoremId::T33: {
            // Re psi on the curve is p - 2 beta (1-beta) k phi(rho^2, 1, beta);
            // phi -> 1/(1-beta)^2.
            const double beta = problem.level;
            return p - 2.0 * beta * k / (1.0 - beta);
        }
        case TheoremId::T31: {
            const double beta = problem.level;
            return beta * (1.0 - k / (p - beta));
        }
        case TheoremId::T32: {
            const double gamma = problem.level;
            return p - gamma * k / (1.0 - gamma);
        }
        case TheoremId::T24:
        case TheoremId::T37: {
            // xi = C - D eta^2 with D = k/(p(1-gamma)); Re psi -> 1/(2 sqrt(D)).
            const double gamma = problem.level;
            return 0.5 * std::sqrt(p * (1.0 - gamma) / k);
        }
        case TheoremId::T25:
        case TheoremId::T38:
            // D = 2k/p.
            return 0.5 * std::sqrt(p / (2.0 * k));
        case TheoremId::LemmaPhi:
            break;
    }
    throw DomainError("no psi map for this template");
}

SupReport sup_on_region(const AdmissibilityProblem& problem, double rho_max,
                        int samples) {
    const std::vector<double> grid = rho_grid(rho_max, samples);
    // Interior sigma lines sigma = c sigma(rho), sampled as a safeguard; by
    // monotonicity in sigma the boundary dominates.
    const double interior_factors[] = {1.25, 1.5, 1.75, 2.0, 2.25, 2.5, 2.75, 3.0};

    SupReport report;
    report.threshold = problem.threshold;
    report.curve_k = problem.curve_k;

    double sup = -std::numeric_limits<double>::infinity();
    double arg_rho = 0.0;
    double inner_max = -std::numeric_limits<double>::infinity();
    double outer_max = -std::numeric_limits<double>::infinity();
    const double decade = rho_max / 10.0;

    for (double rho : grid) {
        const double sigma = -problem.curve_k * (1.0 + rho * rho);
        const double value =
            psi_eval(problem, Complex{0.0, rho}, Complex{sigma, 0.0}).real();
        if (value > sup) {
            sup = value;
            arg_rho = rho;
        }
        if (std::abs(rho) <= decade)
            inner_max = std::max(inner_max, value);
        else
            outer_max = std::max(outer_max, value);
        for (double c : interior_factors) {
            const double interior =
                psi_eval(problem, Complex{0.0, rho}, Complex{c * sigma, 0.0}).real();
            if (interior > sup) {
                sup = interior;
                arg_rho = rho;
            }
        }
    }

    report.attained_at_infinity =
        outer_max > inner_max + 1e-12 * std::max(1.0, std::abs(inner_max));
    if (report.attained_at_infinity)
        sup = std::max(sup, asymptotic_limit(problem));

    report.sup_value = sup;
    report.arg_rho = arg_rho;
    report.margin = problem.threshold - sup;
    report.certified = sup <= problem.threshold + 1e-9;
    return report;
}

bool interior_monotonicity_check(const AdmissibilityProblem& problem, double rho,
                                 double sigma_depth, int samples) {
    const double boundary = -problem.curve_k * (1.0 + rho * rho);
    const double lo = std::min(-sigma_depth, boundary);
    double prev = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < samples; ++i) {
        const double sigma = lo + (boundary - lo) * i / (samples - 1);
        const double value =
            psi_eval(problem, Complex{0.0, rho}, Complex{sigma, 0.0}).real();
        if (value < prev - 1e-12) return false;
        prev = value;
    }
    return true;
}

std::vector<std::pair<double, double>> boundary_curve(const AdmissibilityProblem& problem,
                                                      double rho_max, int samples) {
    std::vector<double> grid = rho_grid(rho_max, samples);
    std::sort(grid.begin(), grid.end());
    std::vector<std::pair<double, double>> curve;
    curve.reserve(grid.size());
    for (double rho : grid) {
        const double sigma = -problem.curve_k * (1.0 + rho * rho);
        curve.emplace_back(
            rho, psi_eval(problem, Complex{0.0, rho}, Complex{sigma, 0.0}).real());
    }
    return curve;
}

} // namespace strohhacker::admissibility
