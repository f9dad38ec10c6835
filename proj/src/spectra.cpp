#include "volterra/spectra.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace volterra {

namespace {

constexpr double kPTol = 1e-9;

// Integer part of a user-supplied real exponent; p is declared integral
// iff it is within kPTol of an integer.
int integer_part(double x) { return static_cast<int>(std::floor(x + kPTol)); }

bool is_integral(double x) { return std::abs(x - std::round(x)) < kPTol; }

std::string describe_weight(const PowerWeight& w) {
    std::ostringstream os;
    os << "v(r)=exp(-" << w.alpha << " r^" << w.p_exp << ")";
    return os.str();
}

}  // namespace

std::string to_string(SpectrumShape s) {
    switch (s) {
        case SpectrumShape::ZeroOnly: return "zero";
        case SpectrumShape::ClosedDisk: return "disk";
        default: return "plane";
    }
}

BoundednessVerdict classify_boundedness_Hv(const PolynomialSymbol& g,
                                           const PowerWeight& w) {
    BoundednessVerdict v;
    v.bounded = g.degree() <= integer_part(w.p_exp);
    v.compact = g.degree() <= integer_part(w.p_exp - 1.0);
    return v;
}

SpectrumResult classify_spectrum_Hv(const PolynomialSymbol& g,
                                    const PowerWeight& w) {
    if (!classify_boundedness_Hv(g, w).bounded) {
        throw std::runtime_error("operator not bounded on this space");
    }
    SpectrumResult res;
    res.space_tag = "Hv";
    const int n = g.degree();
    if (static_cast<double>(n) < w.p_exp - kPTol) {
        res.shape = SpectrumShape::ZeroOnly;
        res.witness = "deg g < p; spectrum {0}; equally valid for H0v; " +
                      describe_weight(w);
        return res;
    }
    // bounded and n >= p forces p = n integral
    if (!is_integral(w.p_exp) || integer_part(w.p_exp) != n) {
        throw std::logic_error("classify_spectrum_Hv: unreachable case");
    }
    res.shape = SpectrumShape::ClosedDisk;
    res.radius = std::abs(g.leading_coeff()) / w.alpha;
    res.witness =
        "p = deg g integral; closed disk of radius |beta|/alpha; boundary "
        "points enter via the closure; equally valid for H0v; " +
        describe_weight(w);
    return res;
}

SpectrumResult classify_spectrum_entire(const PolynomialSymbol&) {
    SpectrumResult res;
    res.shape = SpectrumShape::ZeroOnly;
    res.space_tag = "H(C)";
    res.witness = "V_g - lambda I invertible on H(C) for every lambda != 0";
    return res;
}

SpectrumResult classify_spectrum_Ap(const PolynomialSymbol& g,
                                    const GrowthCondition& gc) {
    SpectrumResult res;
    res.space_tag = "Ap";
    if (bigO_growth(g, gc)) {
        res.shape = SpectrumShape::ZeroOnly;
        res.witness = "M(g,r) = O(p(r)); spectrum {0}";
        if (gc.a_exp < 1.0 - kPTol) {
            throw std::logic_error(
                "classify_spectrum_Ap: {0} requires r = O(p(r))");
        }
    } else {
        res.shape = SpectrumShape::WholePlane;
        res.witness = "M(g,r) = O(p(r)) fails; spectrum is the whole plane";
    }
    return res;
}

SpectrumResult classify_spectrum_A0p(const PolynomialSymbol& g,
                                     const GrowthCondition& gc) {
    SpectrumResult res;
    res.space_tag = "A0p";
    if (littleo_growth(g, gc)) {
        res.shape = SpectrumShape::ZeroOnly;
        res.witness = "M(g,r) = o(p(r)); spectrum {0}";
        if (gc.a_exp <= 1.0 + kPTol) {
            throw std::logic_error(
                "classify_spectrum_A0p: {0} requires r = o(p(r))");
        }
    } else {
        res.shape = SpectrumShape::WholePlane;
        res.witness = "M(g,r) = o(p(r)) fails; spectrum is the whole plane";
    }
    return res;
}

bool exp_membership(const PolynomialSymbol& g, Cplx lambda,
                    const Space& space) {
    if (lambda == Cplx{}) {
        throw std::invalid_argument("exp_membership: lambda must be nonzero");
    }
    const int n = g.degree();
    if (const auto* hv = std::get_if<HvSpace>(&space)) {
        const PowerWeight& w = hv->w;
        if (n > integer_part(w.p_exp)) {
            throw std::runtime_error("operator not bounded on this space");
        }
        if (static_cast<double>(n) < w.p_exp - kPTol) return true;
        // p = n integral: e^{g/lambda} in Hv iff |beta|/|lambda| <= alpha
        const double ratio = std::abs(g.leading_coeff()) / std::abs(lambda);
        return ratio <= w.alpha * (1.0 + 1e-12);
    }
    if (const auto* ap = std::get_if<ApSpace>(&space)) {
        return bigO_growth(g, ap->gc);
    }
    return littleo_growth(g, std::get<A0pSpace>(space).gc);
}

CrossCheckReport spectrum_cross_check(const SpectrumResult& result,
                                      const PolynomialSymbol& g,
                                      const Space& space, int samples) {
    CrossCheckReport report;
    const double scale =
        result.shape == SpectrumShape::ClosedDisk ? result.radius : 1.0;

    const int rays = 8;
    const int per_ray = std::max(samples / rays, 2);
    constexpr double kTwoPi = 6.283185307179586;
    for (int a = 0; a < rays; ++a) {
        const double theta = kTwoPi * a / rays;
        const Cplx dir{std::cos(theta), std::sin(theta)};
        for (int i = 0; i < per_ray; ++i) {
            // geometric radii from 0.05 to 4 times the deciding scale,
            // with the exact boundary radius included
            double rho;
            if (i == per_ray - 1) {
                rho = scale;
            } else {
                const double t = static_cast<double>(i) / (per_ray - 1);
                rho = 0.05 * scale * std::pow(80.0, t);
            }
            const Cplx lambda = rho * dir;
            const bool member = exp_membership(g, lambda, space);
            bool expected_member = true;
            switch (result.shape) {
                case SpectrumShape::ZeroOnly:
                    expected_member = true;
                    break;
                case SpectrumShape::WholePlane:
                    expected_member = false;
                    break;
                case SpectrumShape::ClosedDisk:
                    // failure set is the punctured open disk; its closure
                    // together with {0} is the reported closed disk
                    expected_member = rho >= result.radius * (1.0 - 1e-12);
                    break;
            }
            ++report.checked;
            if (member != expected_member) ++report.mismatches;
        }
    }
    report.pass = report.checked > 0 && report.mismatches == 0;
    return report;
}

}  // namespace volterra
