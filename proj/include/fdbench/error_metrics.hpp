#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fdbench/presets.hpp"
#include "fdbench/series.hpp"
#include "fdbench/stencil.hpp"

namespace fdbench {

/// The three error figures reported per (scheme, reference) pair.
/// `signed_err` is the headline metric, sum(ref - est) / sum(ref);
/// its signed differences may cancel, hence the absolute variants:
/// abs_l1 = sum|ref - est| / |sum ref|, rms = sqrt(sum (ref-est)^2) / sqrt(sum ref^2).
struct ErrorValues {
    double signed_err;
    double abs_l1;
    double rms;
};

/// sum_i (ref_i - est_i) / sum_i ref_i, signed. Missing sentinels are
/// excluded pairwise. Requires matching time axes and a nonzero
/// reference sum.
double signed_relative_error(const Series& reference, const Series& estimate);

ErrorValues error_variants(const Series& reference, const Series& estimate);

struct ErrorEntry {
    std::string scheme;     // "forward1" ... "centered2"
    std::string reference;  // "empirical" | "experimental"
    ErrorValues values;
};

/// Per-method error table for one case study, in the layout of the
/// six-method comparison tables.
struct ErrorReport {
    std::string case_name;
    double t0 = 0, t1 = 0, h = 0;
    std::vector<ErrorEntry> entries;
};

/// Samples the case's closed form on the grid, differentiates it with
/// all six schemes (fallback boundaries), and compares each estimate
/// against the analytic rate ("empirical") and, when given, against an
/// experimental rate series on the same grid.
ErrorReport case_error_table(const CaseStudy& cs, double t0, double t1,
                             double h,
                             const Series* experimental = nullptr);

nlohmann::json error_report_to_json(const ErrorReport& r);
/// Markdown table with rows e_emp^forward1 ... (and e_exp^... rows when
/// experimental data was supplied); values printed to 4 decimals.
std::string error_report_to_markdown(const ErrorReport& r);
std::string error_report_to_csv(const ErrorReport& r);

} // namespace fdbench
