#pragma once

#include <string>
#include <variant>

#include "volterra/symbol.hpp"
#include "volterra/weights.hpp"

namespace volterra {

enum class SpectrumShape { ZeroOnly, ClosedDisk, WholePlane };

struct SpectrumResult {
    SpectrumShape shape = SpectrumShape::ZeroOnly;
    double radius = 0.0;  // meaningful for ClosedDisk only
    bool point_spectrum_empty = true;
    std::string space_tag;
    std::string witness;
};

struct BoundednessVerdict {
    bool bounded = false;
    bool compact = false;
};

struct HvSpace {
    PowerWeight w;
};
struct ApSpace {
    GrowthCondition gc;
};
struct A0pSpace {
    GrowthCondition gc;
};
using Space = std::variant<HvSpace, ApSpace, A0pSpace>;

/// V_g bounded on H^inf_v iff deg g <= floor(p); compact iff
/// deg g <= floor(p-1).
BoundednessVerdict classify_boundedness_Hv(const PolynomialSymbol& g,
                                           const PowerWeight& w);

/// sigma(V_g, H^inf_v): {0} when deg g < p, the closed disk of radius
/// |beta|/alpha when p = deg g is an integer. Requires the bounded case.
/// The result is equally valid for H^0_v.
SpectrumResult classify_spectrum_Hv(const PolynomialSymbol& g,
                                    const PowerWeight& w);

/// sigma(V_g, H(C)) = {0} for every admissible symbol.
SpectrumResult classify_spectrum_entire(const PolynomialSymbol& g);

/// sigma(V_g, A_p): {0} when deg g <= a, the whole plane otherwise.
SpectrumResult classify_spectrum_Ap(const PolynomialSymbol& g,
                                    const GrowthCondition& gc);

/// sigma(V_g, A0_p): {0} when deg g < a, the whole plane otherwise.
SpectrumResult classify_spectrum_A0p(const PolynomialSymbol& g,
                                     const GrowthCondition& gc);

/// Exact decision of e^{g/lambda} in X. Throws at lambda = 0, and for the
/// H^inf_v case when the operator is not bounded there.
bool exp_membership(const PolynomialSymbol& g, Cplx lambda,
                    const Space& space);

struct CrossCheckReport {
    int checked = 0;
    int mismatches = 0;
    bool pass = false;
};

/// Verifies the classifier's set equals {0} union the closure of the
/// exp_membership failure set, sampling lambda on rays and circles.
CrossCheckReport spectrum_cross_check(const SpectrumResult& result,
                                      const PolynomialSymbol& g,
                                      const Space& space, int samples = 1000);

std::string to_string(SpectrumShape s);  // "zero" / "disk" / "plane"

}  // namespace volterra
