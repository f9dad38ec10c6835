#pragma once

#include <string>

#include "volterra/series.hpp"
#include "volterra/symbol.hpp"

namespace volterra {

/// v(r) = exp(-alpha r^p), alpha > 0, p > 0.
struct PowerWeight {
    double alpha;
    double p_exp;

    PowerWeight(double alpha_, double p_exp_);
};

double weight_value(const PowerWeight& w, double r);

/// Radius where alpha r^p = 50; beyond it the weight is below e^-50 and a
/// truncated polynomial cannot recover.
double default_r_max(const PowerWeight& w);

/// p(r) = scale * r^a, scale > 0, a > 0.
struct GrowthCondition {
    double scale;
    double a_exp;

    GrowthCondition(double scale_, double a_exp_);
    double value(double r) const;
};

enum class NormVerdict { Bounded, DivergenceSuspected };

struct NormEstimate {
    double value = 0.0;
    double attained_r = 0.0;
    NormVerdict verdict = NormVerdict::Bounded;
    double r_max = 0.0;
    int grid_points = 0;
};

/// Maximize v(r) * max_modulus(f, r) over a geometric radial grid on
/// (0, r_max]. DivergenceSuspected when the running max still increases in
/// the last decade of the grid. r_max <= 0 selects default_r_max(w).
NormEstimate weighted_norm(const TruncatedSeries& f, const PowerWeight& w,
                           double r_max = 0.0, int grid = 512,
                           int samples = 0);

enum class Membership { InSpace, NotInSpace, Inconclusive };

std::string to_string(Membership m);  // "in" / "out" / "inconclusive"

struct HvMembership {
    Membership verdict = Membership::Inconclusive;
    /// H0_v sub-verdict: the grid profile v(r)|f| tends to 0.
    bool vanishes_at_infinity = false;
    NormEstimate base;
    NormEstimate doubled;
};

/// Compares weighted_norm at r_max and 2 r_max; InSpace requires both
/// Bounded with stable value, NotInSpace both DivergenceSuspected.
HvMembership membership_Hv(const TruncatedSeries& f, const PowerWeight& w);

/// Exact decisions for polynomial g against p(r) = scale r^a:
/// M(g,r) = O(p(r)) iff deg g <= a, and o(p(r)) iff deg g < a.
bool bigO_growth(const PolynomialSymbol& g, const GrowthCondition& gc);
bool littleo_growth(const PolynomialSymbol& g, const GrowthCondition& gc);

struct OrderTypeEstimate {
    double order = 0.0;
    double type_val = 0.0;
    bool type_infinite = false;
    int window_lo = 0;
    int window_hi = 0;
};

/// Estimate order and type from coefficient decay over the index window
/// [lo, hi]. Order comes from a least-squares fit of -log|c_k| against
/// {k log k, k}; type from tau = (1/(e rho)) max_k k |c_k|^(rho/k).
OrderTypeEstimate order_type(const TruncatedSeries& f, int lo, int hi);

/// Membership in the Hormander algebra A_p / A0_p for p(r) = scale r^a,
/// decided through order_type with relative tolerance rel_tol on the
/// order-equality comparison.
Membership membership_Ap(const TruncatedSeries& f, const GrowthCondition& gc,
                         double rel_tol = 0.10);
Membership membership_A0p(const TruncatedSeries& f, const GrowthCondition& gc,
                          double rel_tol = 0.10);

struct CaratheodoryCheck {
    double lhs = 0.0;
    double rhs = 0.0;
    bool holds = false;
};

/// M(h,r) <= 2(A(h,2r) - Re h(0)) + |h(0)| on sampled maxima.
CaratheodoryCheck caratheodory_check(const TruncatedSeries& h, double r,
                                     double tol = 1e-9, int samples = 1024);

}  // namespace volterra
