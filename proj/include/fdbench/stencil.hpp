#pragma once

#include <cmath>
#include <cstdlib>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fdbench/series.hpp"

namespace fdbench {

/// Exact rational arithmetic for stencil coefficients and moment checks.
using Rational = boost::multiprecision::cpp_rational;

enum class Family { forward, backward, centered };
enum class Accuracy { low, high };

/// One of the six builtin differentiation methods.
struct Scheme {
    Family family;
    Accuracy accuracy;

    /// "forward1", "backward2", ... (low accuracy = 1, high = 2).
    std::string name() const;

    bool operator==(const Scheme&) const = default;
};

/// All six schemes in fixed report order:
/// forward1, backward1, centered1, forward2, backward2, centered2.
const std::vector<Scheme>& all_schemes();

/// Parses "forward"/"backward"/"centered"; throws Error otherwise.
Family parse_family(const std::string& s);
/// Parses "low"/"high" (also accepts "1"/"2"); throws Error otherwise.
Accuracy parse_accuracy(const std::string& s);

/// A finite-difference stencil: integer grid offsets and exact rational
/// weights c_j such that h^(-d) * sum_j c_j f(x + j h) estimates the
/// d-th derivative with leading truncation error O(h^p).
struct Stencil {
    std::vector<int> offsets;          // strictly increasing
    std::vector<Rational> coefficients; // same length as offsets
    int derivative_order = 1;          // d
    int accuracy_order = 0;            // p

    /// Grid points required before / after the evaluation index.
    int points_before() const;
    int points_after() const;
    int width() const { return static_cast<int>(offsets.size()); }
};

/// sum_j c_j * offset_j^m, exactly.
Rational moment(const Stencil& s, int m);

/// True iff all moment conditions for (d, p) hold exactly and p is
/// maximal (the m = d+p moment does not vanish).
bool satisfies_moment_conditions(const Stencil& s);

/// The textbook stencil for a scheme; all six are first-derivative
/// rules (centered-high is the 5-point rule with the zero weight elided).
Stencil builtin_stencil(Scheme scheme);

/// Solves the square Vandermonde moment system for the given offsets
/// and derivative order in exact rational arithmetic, then computes the
/// maximal accuracy order. Requires distinct offsets and
/// derivative_order <= offsets.size() - 1.
Stencil generate_stencil(std::vector<int> offsets, int derivative_order);

/// Maximal p with vanishing moments d < m < d+p. Throws Error if the
/// stencil violates the m = d normalization (not a d-th derivative
/// stencil) or any lower moment.
int theoretical_order(const Stencil& s);

/// h^(-d) * sum_j c_j f(x + j h). Evaluation failures of f are rethrown
/// as EvaluationError annotated with the offending abscissa.
double estimate(const Stencil& s, const std::function<double(double)>& f,
                double x, double h);

/// Generic-scalar stencil application. The sample nearest the evaluation
/// point is subtracted from every term before combining; since the m=0
/// moment vanishes for every d >= 1 stencil this is algebraically exact,
/// and it keeps cancellation at the scale of f's local variation rather
/// than |f|.
template <typename Scalar, typename F>
Scalar estimate_as(const Stencil& s, F&& f, Scalar x, Scalar h) {
    std::size_t ref = 0;
    for (std::size_t j = 1; j < s.offsets.size(); ++j)
        if (std::abs(s.offsets[j]) < std::abs(s.offsets[ref])) ref = j;
    std::vector<Scalar> vals(s.offsets.size());
    for (std::size_t j = 0; j < s.offsets.size(); ++j)
        vals[j] = f(x + Scalar(s.offsets[j]) * h);
    Scalar acc = 0;
    for (std::size_t j = 0; j < s.offsets.size(); ++j) {
        if (j == ref) continue;
        acc += static_cast<Scalar>(s.coefficients[j]) * (vals[j] - vals[ref]);
    }
    Scalar hp = 1;
    for (int k = 0; k < s.derivative_order; ++k) hp *= h;
    return acc / hp;
}

/// What to do at series edges where the requested stencil does not fit.
enum class BoundaryPolicy { fallback, shrink, mark_missing };

BoundaryPolicy parse_boundary_policy(const std::string& s);
std::string boundary_policy_name(BoundaryPolicy p);

/// Derivative series plus a per-index record of the stencil applied
/// ("forward1", ..., or "missing").
struct SeriesDerivative {
    Series series;
    std::vector<std::string> stencil_used;
};

/// Applies a scheme's stencil across a uniformly sampled series.
/// Interior points use the requested stencil; edges follow the policy.
SeriesDerivative differentiate_series(const Series& input, Scheme scheme,
                                      BoundaryPolicy policy = BoundaryPolicy::fallback);

/// Exact rational as "p/q" (or "p" when integral).
std::string rational_to_string(const Rational& r);

} // namespace fdbench
