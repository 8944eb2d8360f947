#pragma once

#include "ptscatter/analysis.hpp"
#include "ptscatter/bound.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ptscatter::report {

/// Scientific notation with 15 significant digits; infinities print as the
/// literal inf / -inf so tables stay machine-parsable.
std::string format_number(double x);

/// Header is exactly `epsilon,R_left,R_right,T,defect,singular`; the
/// singular column is 0/1; rows ascend in epsilon; newline is \n.
std::string scan_csv(const analysis::ScanTable& table);
void write_scan_csv(const analysis::ScanTable& table, const std::string& path);

/// Parses values written by scan_csv (used for round-trip checks).
std::vector<analysis::ScanRow> parse_scan_csv(const std::string& text);

/// JSON array of {kind, epsilon, residual, refined}; empty list serialises
/// as []. A degenerate-everywhere result also serialises as [].
std::string features_json(const analysis::FeatureScan& scan);
void write_features_json(const analysis::FeatureScan& scan, const std::string& path);

std::string bound_table_csv(const std::vector<bound::BoundState>& states);

struct PotentialSample {
    double x;
    std::complex<double> value;
};
std::string potential_csv(const std::vector<PotentialSample>& samples);

/// Deterministic log-ordinate line plot of selected scan columns
/// (R_left, R_right, T, defect). Identical input produces identical bytes.
std::string scan_svg(const analysis::ScanTable& table, const std::vector<std::string>& series,
                     const std::string& title);
void write_scan_svg(const analysis::ScanTable& table, const std::vector<std::string>& series,
                    const std::string& title, const std::string& path);

/// Linear-ordinate plot for potential profiles (values may be negative).
std::string potential_svg(const std::vector<PotentialSample>& samples, const std::string& title);

/// One CLI job: a subcommand plus every knob it accepts. Round-trips
/// losslessly through JSON.
struct JobConfig {
    std::string command;        // potential | bound | scan | features | verify | figure
    std::string case_name = "mu-imag";  // real | mu-imag | d-imag
    double v = 1.0;
    double mu = 0.0;
    double zeta = 0.0;
    double eps_min = 0.1;
    double eps_max = 10.0;
    int steps = 2000;
    std::string kind;           // feature kind for `features`
    double x_min = -8.0;
    double x_max = 8.0;
    int samples = 20;
    double tol = 1e-6;
    unsigned seed = 1;
    std::string figure_id;
    bool flux_corrected = false;
    std::string out;            // empty = stdout
    std::string format = "csv";  // csv | json | svg

    bool operator==(const JobConfig&) const = default;
};

std::string job_to_json(const JobConfig& job);
JobConfig job_from_json(const std::string& text);
JobConfig load_job_file(const std::string& path);

void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

} // namespace ptscatter::report
