#include "fdbench/error_metrics.hpp"

#include <cmath>
#include <sstream>

#include "fdbench/errors.hpp"
#include "fdbench/numfmt.hpp"

namespace fdbench {

namespace {

struct PairSums {
    double sum_ref = 0;      // sum ref_i
    double sum_diff = 0;     // sum (ref_i - est_i)
    double sum_abs_diff = 0; // sum |ref_i - est_i|
    double sum_sq_ref = 0;
    double sum_sq_diff = 0;
    int pairs = 0;
};

PairSums accumulate(const Series& reference, const Series& estimate) {
    if (reference.size() != estimate.size())
        throw GridError("series length mismatch: " +
                        std::to_string(reference.size()) + " vs " +
                        std::to_string(estimate.size()));
    if (!same_time_axis(reference, estimate))
        throw GridError("series time axes differ beyond 1e-12 relative");
    PairSums s;
    for (std::size_t i = 0; i < reference.size(); ++i) {
        const double r = reference.values[i];
        const double e = estimate.values[i];
        if (is_missing(r) || is_missing(e)) continue;  // pairwise exclusion
        const double d = r - e;
        s.sum_ref += r;
        s.sum_diff += d;
        s.sum_abs_diff += std::abs(d);
        s.sum_sq_ref += r * r;
        s.sum_sq_diff += d * d;
        ++s.pairs;
    }
    if (s.pairs == 0)
        throw GridError("no overlapping non-missing samples");
    if (s.sum_ref == 0)
        throw Error("reference values sum to zero; relative error undefined");
    return s;
}

} // namespace

double signed_relative_error(const Series& reference, const Series& estimate) {
    const PairSums s = accumulate(reference, estimate);
    return s.sum_diff / s.sum_ref;
}

ErrorValues error_variants(const Series& reference, const Series& estimate) {
    const PairSums s = accumulate(reference, estimate);
    ErrorValues v;
    v.signed_err = s.sum_diff / s.sum_ref;
    v.abs_l1 = s.sum_abs_diff / std::abs(s.sum_ref);
    v.rms = std::sqrt(s.sum_sq_diff) / std::sqrt(s.sum_sq_ref);
    return v;
}

ErrorReport case_error_table(const CaseStudy& cs, double t0, double t1,
                             double h, const Series* experimental) {
    const int n = static_cast<int>(std::lround((t1 - t0) / h)) + 1;
    if (n < 2) throw GridError("grid [" + format_double(t0) + ", " +
                               format_double(t1) + "] with h=" +
                               format_double(h) + " has fewer than 2 points");
    const Series sampled =
        sample_model(cs.value, t0, t1, n, cs.time_unit, cs.value_unit);
    const Series empirical = sample_model(cs.rate, t0, t1, n, cs.time_unit, "");

    if (experimental && !same_time_axis(*experimental, sampled))
        throw GridError("experimental series grid does not match the case grid");

    ErrorReport report;
    report.case_name = cs.name;
    report.t0 = t0;
    report.t1 = t1;
    report.h = h;
    for (const Scheme& scheme : all_schemes()) {
        const SeriesDerivative est =
            differentiate_series(sampled, scheme, BoundaryPolicy::fallback);
        if (experimental)
            report.entries.push_back({scheme.name(), "experimental",
                                      error_variants(*experimental, est.series)});
        report.entries.push_back(
            {scheme.name(), "empirical", error_variants(empirical, est.series)});
    }
    return report;
}

nlohmann::json error_report_to_json(const ErrorReport& r) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : r.entries) {
        entries.push_back({{"scheme", e.scheme},
                           {"reference", e.reference},
                           {"signed", e.values.signed_err},
                           {"abs_l1", e.values.abs_l1},
                           {"rms", e.values.rms}});
    }
    return {{"case", r.case_name},
            {"grid", {{"t0", r.t0}, {"t1", r.t1}, {"h", r.h}}},
            {"entries", entries}};
}

std::string error_report_to_markdown(const ErrorReport& r) {
    std::ostringstream os;
    os << "# Error table: " << r.case_name << "\n\n";
    os << "Grid: t in [" << format_double(r.t0) << ", " << format_double(r.t1)
       << "], h = " << format_double(r.h) << "\n\n";
    os << "| Error | Value |\n|---|---|\n";
    for (const auto& e : r.entries) {
        const std::string tag = e.reference == "experimental" ? "exp" : "emp";
        os << "| e_" << tag << "^" << e.scheme << " | "
           << format_fixed(e.values.signed_err, 4) << " |\n";
    }
    os << "\nAbsolute variants (abs_l1 / rms):\n\n";
    os << "| Method | Reference | abs_l1 | rms |\n|---|---|---|---|\n";
    for (const auto& e : r.entries) {
        os << "| " << e.scheme << " | " << e.reference << " | "
           << format_fixed(e.values.abs_l1, 4) << " | "
           << format_fixed(e.values.rms, 4) << " |\n";
    }
    return os.str();
}

std::string error_report_to_csv(const ErrorReport& r) {
    std::ostringstream os;
    os << "scheme,reference,signed,abs_l1,rms\n";
    for (const auto& e : r.entries) {
        os << e.scheme << ',' << e.reference << ','
           << format_double(e.values.signed_err) << ','
           << format_double(e.values.abs_l1) << ','
           << format_double(e.values.rms) << "\n";
    }
    return os.str();
}

} // namespace fdbench
