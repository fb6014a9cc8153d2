#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "strohhacker/functionals.hpp"
#include "strohhacker/thresholds.hpp"

namespace strohhacker::corpus {

using functionals::DiskGrid;
using series::MultivalentFunction;

enum class Family { Monomial, HalfPlaneKernel, ConvexExtremal, FixedBPerturbation, RandomBounded };

std::string family_name(Family family);
Family parse_family(const std::string& name);

/// Recipe for one test function. `parameter` is the kernel exponent t, the
/// extremal exponent s, or the perturbation amplitude epsilon depending on
/// the family.
struct FamilySpec {
    Family family = Family::Monomial;
    int p = 1;
    std::optional<double> b;  ///< pins the second coefficient (A_{p,b})
    double parameter = 0.0;
    std::uint64_t seed = 0;
    int order = series::kDefaultOrder;

    std::string label() const;
};

/// Builds the function for a spec. Random families are regenerated with the
/// amplitude halved (at most 8 times) while the unit part vanishes on the
/// standard grid; UnitVanishes is thrown when retries are exhausted.
/// Deterministic for a fixed seed.
MultivalentFunction generate(const FamilySpec& spec);

/// Grid-certified surrogate for local p-valence:
/// |f'(z)/(p z^(p-1))| > 1e-8 at every sampled point.
bool local_valence_guard(const MultivalentFunction& f, const DiskGrid& grid);

/// Twenty specs adapted to an implication case: families whose second
/// coefficient matches b exactly (required by the A_{p,b} templates) and
/// whose normalized derivative stays away from zero so the square-root and
/// convexity functionals are grid-trustworthy.
std::vector<FamilySpec> default_corpus(thresholds::TheoremId theorem, int p,
                                       std::optional<double> b, int count = 20,
                                       int order = series::kDefaultOrder,
                                       std::uint64_t seed = 1);

} // namespace strohhacker::corpus
