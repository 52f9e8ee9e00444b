#include "charsum/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "json.hpp"

namespace charsum {

using OrderedJson = nlohmann::ordered_json;

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

namespace {

void dump(std::ostream& out, const OrderedJson& j) { out << j.dump(2) << '\n'; }

OrderedJson record_json(const BoundRecord& r) {
    return OrderedJson{{"q", r.q},
                       {"chi_index", r.chi_index},
                       {"observed", r.observed},
                       {"arg_x", r.arg_x},
                       {"bound", r.bound},
                       {"ratio", r.ratio},
                       {"violation", r.violation}};
}

}  // namespace

void write_bound_report(std::ostream& out, const BoundReport& report, ReportFormat format) {
    const char* kind = bound_kind_name(report.kind);
    if (format == ReportFormat::Csv) {
        out << "q,chi_index,kind,observed,arg_x,bound,ratio,violation\n";
        for (const auto& r : report.records)
            out << r.q << ',' << r.chi_index << ',' << kind << ',' << format_real(r.observed)
                << ',' << format_real(r.arg_x) << ',' << format_real(r.bound) << ','
                << format_real(r.ratio) << ',' << (r.violation ? 1 : 0) << '\n';
        return;
    }
    OrderedJson j;
    j["kind"] = kind;
    if (report.kind == BoundKind::PrimeSumMax) j["eps"] = report.eps;
    j["violation_count"] = report.violation_count();
    j["max_ratio"] = report.max_ratio();
    j["notes"] = report.notes;
    j["records"] = OrderedJson::array();
    for (const auto& r : report.records) j["records"].push_back(record_json(r));
    dump(out, j);
}

void write_race_series(std::ostream& out, const RaceSeries& series, ReportFormat format) {
    if (format == ReportFormat::Csv) {
        out << "q,x,class,count,error_term\n";
        for (std::size_t i = 0; i < series.grid.size(); ++i)
            for (std::size_t j = 0; j < series.classes.size(); ++j)
                out << series.q << ',' << format_real(series.grid[i]) << ','
                    << series.classes[j] << ',' << series.counts[i][j] << ','
                    << format_real(series.error_terms[i][j]) << '\n';
        return;
    }
    OrderedJson j;
    j["q"] = series.q;
    j["classes"] = series.classes;
    j["grid"] = series.grid;
    j["counts"] = series.counts;
    j["error_terms"] = series.error_terms;
    dump(out, j);
}

void write_sign_changes(std::ostream& out, const SignChangeRecord& r, ReportFormat format) {
    if (format == ReportFormat::Csv) {
        out << "q,a,b,x_max,first_crossing,crossing_count,samples,"
               "lead_fraction_a,lead_fraction_b,tie_fraction\n";
        out << r.q << ',' << r.a << ',' << r.b << ',' << format_real(r.x_max) << ',';
        if (r.first_crossing) out << *r.first_crossing;
        out << ',' << r.crossing_count << ',' << r.samples << ','
            << format_real(r.lead_fraction_a) << ',' << format_real(r.lead_fraction_b) << ','
            << format_real(r.tie_fraction) << '\n';
        return;
    }
    OrderedJson j;
    j["q"] = r.q;
    j["a"] = r.a;
    j["b"] = r.b;
    j["x_max"] = r.x_max;
    if (r.first_crossing) j["first_crossing"] = *r.first_crossing;
    else j["first_crossing"] = nullptr;
    j["crossing_count"] = r.crossing_count;
    j["samples"] = r.samples;
    j["lead_fraction_a"] = r.lead_fraction_a;
    j["lead_fraction_b"] = r.lead_fraction_b;
    j["tie_fraction"] = r.tie_fraction;
    dump(out, j);
}

void write_sum_series(std::ostream& out, const SumSeries& series, ReportFormat format) {
    if (format == ReportFormat::Csv) {
        out << "q,chi_index,x,re,im,abs\n";
        for (std::size_t i = 0; i < series.grid.size(); ++i) {
            Complex v = series.partial[i];
            out << series.q << ',' << series.chi_index << ',' << format_real(series.grid[i])
                << ',' << format_real(v.real()) << ',' << format_real(v.imag()) << ','
                << format_real(std::abs(v)) << '\n';
        }
        return;
    }
    OrderedJson j;
    j["q"] = series.q;
    j["chi_index"] = series.chi_index;
    j["kind"] = series.kind == SumKind::Integers ? "integers" : "primes";
    j["points"] = OrderedJson::array();
    for (std::size_t i = 0; i < series.grid.size(); ++i)
        j["points"].push_back(OrderedJson{{"x", series.grid[i]},
                                          {"re", series.partial[i].real()},
                                          {"im", series.partial[i].imag()},
                                          {"abs", std::abs(series.partial[i])}});
    dump(out, j);
}

void write_mean_stats(std::ostream& out, const MeanValueStats& stats, ReportFormat format) {
    if (format == ReportFormat::Csv) {
        out << "q,chi_index,e_t,oracle,pi_plus_a,rel_dev\n";
        for (std::size_t i = 0; i < stats.e_t.size(); ++i)
            out << stats.q << ',' << i << ',' << format_real(stats.e_t[i]) << ','
                << format_real(stats.oracle) << ',' << format_real(stats.pi_plus_a) << ','
                << format_real(std::abs(stats.e_t[i] - stats.oracle) / stats.oracle) << '\n';
        return;
    }
    OrderedJson j;
    j["q"] = stats.q;
    j["oracle"] = stats.oracle;
    j["pi_plus_a"] = stats.pi_plus_a;
    j["e_t"] = stats.e_t;
    j["e_chi"] = stats.e_chi;
    j["max_rel_dev_e_t"] = stats.max_rel_dev_e_t;
    j["max_rel_dev_e_chi"] = stats.max_rel_dev_e_chi;
    if (stats.heath_brown) {
        const auto& hb = *stats.heath_brown;
        j["heath_brown"] = OrderedJson{{"Q", hb.Q},
                                       {"alpha", hb.alpha},
                                       {"beta", hb.beta},
                                       {"lhs", hb.lhs},
                                       {"scale", hb.scale},
                                       {"ratio", hb.ratio},
                                       {"character_count", hb.character_count}};
    }
    dump(out, j);
}

void write_window_decay(std::ostream& out, const std::vector<WindowDecayRow>& rows,
                        ReportFormat format) {
    if (format == ReportFormat::Csv) {
        out << "q,chi_index,x,K,residual_abs,tail_bound_ratio\n";
        for (const auto& r : rows)
            out << r.q << ',' << r.chi_index << ',' << format_real(r.x) << ',' << r.K << ','
                << format_real(r.residual_abs) << ',' << format_real(r.tail_bound_ratio)
                << '\n';
        return;
    }
    OrderedJson j = OrderedJson::array();
    for (const auto& r : rows)
        j.push_back(OrderedJson{{"q", r.q},
                                {"chi_index", r.chi_index},
                                {"x", r.x},
                                {"K", r.K},
                                {"residual_abs", r.residual_abs},
                                {"tail_bound_ratio", r.tail_bound_ratio}});
    dump(out, j);
}

void write_fourier_coeffs(std::ostream& out, const FourierCoeffs& coeffs, ReportFormat format) {
    if (format == ReportFormat::Csv) {
        out << "m,a,b\n";
        out << 0 << ',' << format_real(coeffs.a0) << ',' << format_real(0.0) << '\n';
        for (std::size_t m = 1; m <= coeffs.terms(); ++m)
            out << m << ',' << format_real(coeffs.a[m - 1]) << ','
                << format_real(coeffs.b[m - 1]) << '\n';
        return;
    }
    OrderedJson j;
    j["a0"] = coeffs.a0;
    j["a"] = coeffs.a;
    j["b"] = coeffs.b;
    dump(out, j);
}

void write_identity_checks(std::ostream& out, const std::vector<IdentityCheck>& checks,
                           const std::vector<std::string>& labels, ReportFormat format) {
    if (format == ReportFormat::Csv) {
        out << "label,lhs_re,lhs_im,rhs_re,rhs_im,difference,tolerance,pass\n";
        for (std::size_t i = 0; i < checks.size(); ++i) {
            const auto& c = checks[i];
            out << labels[i] << ',' << format_real(c.lhs.real()) << ','
                << format_real(c.lhs.imag()) << ',' << format_real(c.rhs.real()) << ','
                << format_real(c.rhs.imag()) << ',' << format_real(c.difference) << ','
                << format_real(c.tolerance) << ',' << (c.pass ? 1 : 0) << '\n';
        }
        return;
    }
    OrderedJson j = OrderedJson::array();
    for (std::size_t i = 0; i < checks.size(); ++i) {
        const auto& c = checks[i];
        j.push_back(OrderedJson{{"label", labels[i]},
                                {"lhs_re", c.lhs.real()},
                                {"lhs_im", c.lhs.imag()},
                                {"rhs_re", c.rhs.real()},
                                {"rhs_im", c.rhs.imag()},
                                {"difference", c.difference},
                                {"tolerance", c.tolerance},
                                {"pass", c.pass}});
    }
    dump(out, j);
}

void write_omega_track(std::ostream& out, const std::vector<OmegaPoint>& points,
                       int64_t q, int64_t chi_index, ReportFormat format) {
    if (format == ReportFormat::Csv) {
        out << "q,chi_index,x,t_re,t_im,normalizer,ratio\n";
        for (const auto& p : points)
            out << q << ',' << chi_index << ',' << format_real(p.x) << ','
                << format_real(p.t_value.real()) << ',' << format_real(p.t_value.imag())
                << ',' << format_real(p.normalizer) << ',' << format_real(p.ratio) << '\n';
        return;
    }
    OrderedJson j;
    j["q"] = q;
    j["chi_index"] = chi_index;
    j["points"] = OrderedJson::array();
    for (const auto& p : points)
        j["points"].push_back(OrderedJson{{"x", p.x},
                                          {"t_re", p.t_value.real()},
                                          {"t_im", p.t_value.imag()},
                                          {"normalizer", p.normalizer},
                                          {"ratio", p.ratio}});
    dump(out, j);
}

}  // namespace charsum
