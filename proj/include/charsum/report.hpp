#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "charsum/verify.hpp"

namespace charsum {

enum class ReportFormat { Csv, Json };

// Reals are serialized with 12 significant digits in CSV; JSON keeps full
// round-trip precision. Output bytes depend only on the report contents.
std::string format_real(double v);

struct WindowDecayRow {
    int64_t q = 0;
    int64_t chi_index = 0;
    double x = 0;
    int64_t K = 0;
    double residual_abs = 0;
    double tail_bound_ratio = 0;  // residual / ((q/(K+1)) log K)
};

void write_bound_report(std::ostream& out, const BoundReport& report, ReportFormat format);
void write_race_series(std::ostream& out, const RaceSeries& series, ReportFormat format);
void write_sign_changes(std::ostream& out, const SignChangeRecord& record, ReportFormat format);
void write_sum_series(std::ostream& out, const SumSeries& series, ReportFormat format);
void write_mean_stats(std::ostream& out, const MeanValueStats& stats, ReportFormat format);
void write_window_decay(std::ostream& out, const std::vector<WindowDecayRow>& rows,
                        ReportFormat format);
void write_fourier_coeffs(std::ostream& out, const FourierCoeffs& coeffs, ReportFormat format);
void write_identity_checks(std::ostream& out, const std::vector<IdentityCheck>& checks,
                           const std::vector<std::string>& labels, ReportFormat format);
void write_omega_track(std::ostream& out, const std::vector<OmegaPoint>& points,
                       int64_t q, int64_t chi_index, ReportFormat format);

}  // namespace charsum
