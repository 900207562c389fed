#include "fdbench/stencil.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "fdbench/errors.hpp"
#include "fdbench/numfmt.hpp"

namespace fdbench {

std::string Scheme::name() const {
    std::string base;
    switch (family) {
        case Family::forward:  base = "forward"; break;
        case Family::backward: base = "backward"; break;
        case Family::centered: base = "centered"; break;
    }
    return base + (accuracy == Accuracy::low ? "1" : "2");
}

const std::vector<Scheme>& all_schemes() {
    static const std::vector<Scheme> schemes = {
        {Family::forward, Accuracy::low},   {Family::backward, Accuracy::low},
        {Family::centered, Accuracy::low},  {Family::forward, Accuracy::high},
        {Family::backward, Accuracy::high}, {Family::centered, Accuracy::high},
    };
    return schemes;
}

Family parse_family(const std::string& s) {
    if (s == "forward") return Family::forward;
    if (s == "backward") return Family::backward;
    if (s == "centered") return Family::centered;
    throw Error("unknown scheme family '" + s +
                "' (expected forward, backward, or centered)");
}

Accuracy parse_accuracy(const std::string& s) {
    if (s == "low" || s == "1") return Accuracy::low;
    if (s == "high" || s == "2") return Accuracy::high;
    throw Error("unknown accuracy '" + s + "' (expected low or high)");
}

int Stencil::points_before() const {
    return offsets.empty() ? 0 : std::max(0, -offsets.front());
}

int Stencil::points_after() const {
    return offsets.empty() ? 0 : std::max(0, offsets.back());
}

Rational moment(const Stencil& s, int m) {
    Rational sum = 0;
    for (std::size_t j = 0; j < s.offsets.size(); ++j) {
        Rational pw = 1;
        for (int k = 0; k < m; ++k) pw *= s.offsets[j];
        sum += s.coefficients[j] * pw;
    }
    return sum;
}

namespace {

Rational factorial(int n) {
    Rational r = 1;
    for (int k = 2; k <= n; ++k) r *= k;
    return r;
}

} // namespace

bool satisfies_moment_conditions(const Stencil& s) {
    const int d = s.derivative_order;
    const int p = s.accuracy_order;
    if (d < 1 || p < 1) return false;
    if (s.offsets.size() != s.coefficients.size()) return false;
    if (!std::is_sorted(s.offsets.begin(), s.offsets.end(), std::less_equal<int>()))
        return false;
    for (int m = 0; m < d; ++m)
        if (moment(s, m) != 0) return false;
    if (moment(s, d) != factorial(d)) return false;
    for (int m = d + 1; m < d + p; ++m)
        if (moment(s, m) != 0) return false;
    return moment(s, d + p) != 0;
}

Stencil builtin_stencil(Scheme scheme) {
    Stencil s;
    s.derivative_order = 1;
    switch (scheme.family) {
        case Family::forward:
            if (scheme.accuracy == Accuracy::low) {
                s.offsets = {0, 1};
                s.coefficients = {-1, 1};
                s.accuracy_order = 1;
            } else {
                s.offsets = {0, 1, 2};
                s.coefficients = {Rational(-3, 2), 2, Rational(-1, 2)};
                s.accuracy_order = 2;
            }
            break;
        case Family::backward:
            if (scheme.accuracy == Accuracy::low) {
                s.offsets = {-1, 0};
                s.coefficients = {-1, 1};
                s.accuracy_order = 1;
            } else {
                s.offsets = {-2, -1, 0};
                s.coefficients = {Rational(1, 2), -2, Rational(3, 2)};
                s.accuracy_order = 2;
            }
            break;
        case Family::centered:
            if (scheme.accuracy == Accuracy::low) {
                s.offsets = {-1, 1};
                s.coefficients = {Rational(-1, 2), Rational(1, 2)};
                s.accuracy_order = 2;
            } else {
                s.offsets = {-2, -1, 1, 2};
                s.coefficients = {Rational(1, 12), Rational(-8, 12),
                                  Rational(8, 12), Rational(-1, 12)};
                s.accuracy_order = 4;
            }
            break;
    }
    return s;
}

Stencil generate_stencil(std::vector<int> offsets, int derivative_order) {
    const int n = static_cast<int>(offsets.size());
    if (std::set<int>(offsets.begin(), offsets.end()).size() != offsets.size())
        throw Error("duplicate offsets make the moment system singular");
    if (derivative_order < 1)
        throw Error("derivative order must be positive");
    if (derivative_order >= n)
        throw Error("derivative order exceeds stencil capacity (need at least " +
                    std::to_string(derivative_order + 1) + " offsets)");
    std::sort(offsets.begin(), offsets.end());

    // Square Vandermonde moment system: sum_j c_j * off_j^m = d! [m == d].
    std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(n + 1, 0));
    for (int m = 0; m < n; ++m) {
        for (int j = 0; j < n; ++j) {
            Rational pw = 1;
            for (int k = 0; k < m; ++k) pw *= offsets[j];
            aug[m][j] = pw;
        }
        aug[m][n] = (m == derivative_order) ? factorial(derivative_order) : 0;
    }

    // Gaussian elimination with partial (first-nonzero) pivoting; the
    // matrix is nonsingular for distinct offsets.
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int row = col; row < n; ++row) {
            if (aug[row][col] != 0) { pivot = row; break; }
        }
        if (pivot < 0)
            throw Error("moment system unexpectedly singular");
        std::swap(aug[col], aug[pivot]);
        const Rational inv = aug[col][col];
        for (int k = col; k <= n; ++k) aug[col][k] /= inv;
        for (int row = 0; row < n; ++row) {
            if (row == col || aug[row][col] == 0) continue;
            const Rational factor = aug[row][col];
            for (int k = col; k <= n; ++k)
                aug[row][k] -= factor * aug[col][k];
        }
    }

    Stencil s;
    s.offsets = offsets;
    s.coefficients.resize(n);
    for (int j = 0; j < n; ++j) s.coefficients[j] = aug[j][n];
    s.derivative_order = derivative_order;
    s.accuracy_order = theoretical_order(s);
    return s;
}

int theoretical_order(const Stencil& s) {
    const int d = s.derivative_order;
    for (int m = 0; m < d; ++m) {
        if (moment(s, m) != 0)
            throw Error("stencil violates the m=" + std::to_string(m) +
                        " moment condition");
    }
    if (moment(s, d) != factorial(d))
        throw Error("stencil violates the m=d normalization moment "
                    "(not a valid derivative-" + std::to_string(d) + " stencil)");
    // The first nonvanishing moment past d sets the truncation order.
    // Bounded scan: it must appear within 2*width extra moments.
    const int limit = d + 2 * s.width() + 2;
    for (int m = d + 1; m <= limit; ++m) {
        if (moment(s, m) != 0) return m - d;
    }
    throw Error("accuracy order not determined within scan bound");
}

double estimate(const Stencil& s, const std::function<double(double)>& f,
                double x, double h) {
    if (!(h > 0)) throw Error("step size h must be positive");
    double current_x = x;
    auto guarded = [&](double xj) {
        current_x = xj;
        return f(xj);
    };
    try {
        return estimate_as<double>(s, guarded, x, h);
    } catch (const EvaluationError&) {
        throw;
    } catch (const std::exception& e) {
        throw EvaluationError("function evaluation failed at x=" +
                                  format_double(current_x) + ": " + e.what(),
                              current_x);
    }
}

BoundaryPolicy parse_boundary_policy(const std::string& s) {
    if (s == "fallback") return BoundaryPolicy::fallback;
    if (s == "shrink") return BoundaryPolicy::shrink;
    if (s == "mark-missing") return BoundaryPolicy::mark_missing;
    throw Error("unknown boundary policy '" + s +
                "' (expected fallback, shrink, or mark-missing)");
}

std::string boundary_policy_name(BoundaryPolicy p) {
    switch (p) {
        case BoundaryPolicy::fallback: return "fallback";
        case BoundaryPolicy::shrink: return "shrink";
        case BoundaryPolicy::mark_missing: return "mark-missing";
    }
    return "?";
}

namespace {

bool fits(const Stencil& s, int before_avail, int after_avail) {
    return s.points_before() <= before_avail && s.points_after() <= after_avail;
}

int accuracy_of(Scheme sc) {
    return builtin_stencil(sc).accuracy_order;
}

// Substitute stencil for an edge index, or nullopt (mark-missing only).
// fallback: widest one-sided stencil of same-or-lower accuracy that fits.
// shrink: any builtin of same-or-lower accuracy, same family preferred.
std::optional<Scheme> edge_substitute(Scheme requested, BoundaryPolicy policy,
                                      int before_avail, int after_avail) {
    if (policy == BoundaryPolicy::mark_missing) return std::nullopt;
    const int p_req = accuracy_of(requested);
    const bool prefer_forward = before_avail < after_avail;

    std::vector<Scheme> candidates;
    for (const Scheme& sc : all_schemes()) {
        if (accuracy_of(sc) > p_req) continue;
        if (policy == BoundaryPolicy::fallback && sc.family == Family::centered)
            continue;
        candidates.push_back(sc);
    }
    auto rank = [&](const Scheme& sc) {
        int tie = 2;
        if (sc.family == requested.family) tie = 0;
        else if (sc.family == Family::centered) tie = 1;
        else if ((sc.family == Family::forward) == prefer_forward) tie = 1;
        else tie = 2;
        if (policy == BoundaryPolicy::fallback)
            tie = ((sc.family == Family::forward) == prefer_forward) ? 0 : 1;
        return std::pair<int, int>(-accuracy_of(sc), tie);
    };
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](const Scheme& a, const Scheme& b) { return rank(a) < rank(b); });
    for (const Scheme& sc : candidates) {
        if (fits(builtin_stencil(sc), before_avail, after_avail)) return sc;
    }
    return std::nullopt;
}

} // namespace

SeriesDerivative differentiate_series(const Series& input, Scheme scheme,
                                      BoundaryPolicy policy) {
    if (input.size() < 2)
        throw GridError("series shorter than the narrowest stencil (2 samples)");
    const double h = uniform_spacing(input);
    const Stencil requested = builtin_stencil(scheme);
    const int n = static_cast<int>(input.size());

    SeriesDerivative out;
    out.series.times = input.times;
    out.series.time_unit = input.time_unit;
    out.series.value_unit = input.value_unit.empty()
                                ? ""
                                : input.value_unit + "/" + (input.time_unit.empty()
                                                                ? "t"
                                                                : input.time_unit);
    out.series.values.resize(n);
    out.stencil_used.resize(n);

    for (int i = 0; i < n; ++i) {
        const int before = i;
        const int after = n - 1 - i;
        const Stencil* applied = &requested;
        std::string label = scheme.name();
        Stencil substitute;
        if (!fits(requested, before, after)) {
            auto sub = edge_substitute(scheme, policy, before, after);
            if (!sub) {
                out.series.values[i] = missing_sentinel();
                out.stencil_used[i] = "missing";
                continue;
            }
            substitute = builtin_stencil(*sub);
            applied = &substitute;
            label = sub->name();
        }
        std::size_t ref = 0;
        for (std::size_t j = 1; j < applied->offsets.size(); ++j)
            if (std::abs(applied->offsets[j]) < std::abs(applied->offsets[ref]))
                ref = j;
        const double vref = input.values[i + applied->offsets[ref]];
        double acc = 0.0;
        bool missing = is_missing(vref);
        for (std::size_t j = 0; j < applied->offsets.size() && !missing; ++j) {
            const double v = input.values[i + applied->offsets[j]];
            if (is_missing(v)) { missing = true; break; }
            if (j != ref) acc += static_cast<double>(applied->coefficients[j]) * (v - vref);
        }
        if (missing) {
            out.series.values[i] = missing_sentinel();
            out.stencil_used[i] = "missing";
        } else {
            out.series.values[i] = acc / h;
            out.stencil_used[i] = label;
        }
    }
    return out;
}

std::string rational_to_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

} // namespace fdbench
