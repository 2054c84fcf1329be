#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qent/correlation.hpp"
#include "qent/measures.hpp"
#include "qent/states.hpp"

// Parameter-space scans: per-state records, CSV serialization, (gamma2,
// theta) binning and the figure-property reports.

namespace qent {

struct ScanRecord {
    std::uint64_t seed = 0;
    CanonicalParams params;
    Pair pair = Pair::p12;
    MeasureSet measures;
    NegativityResult neg;
    CubicClassification quantum;
    CubicClassification connected;
    bool separable = false;  // Wootters concurrence of the pair <= 1e-9
};

// Evaluate one state end to end.
ScanRecord evaluate_state(const CanonicalParams& p, Pair pair, std::uint64_t seed);

// Seeded scan; row i uses seed base_seed + i. When separable_fraction > 0,
// that fraction of samples has the pair's own amplitudes zeroed (and the
// rest renormalized) so separable states appear in the scan.
std::vector<ScanRecord> run_scan(std::uint64_t samples, std::uint64_t base_seed, Pair pair,
                                 double separable_fraction = 0.0);

extern const char* const kScanCsvHeader;

std::string to_csv_row(const ScanRecord& r);
ScanRecord from_csv_row(const std::string& line);

void write_scan_csv(std::ostream& out, const std::vector<ScanRecord>& records);
std::vector<ScanRecord> read_scan_csv(std::istream& in);

enum class FixMode { gamma2_theta, alpha1_theta };

struct ClassBin {
    double x_center = 0.0;      // gamma2 (or alpha1) bin center
    double theta_center = 0.0;
    std::vector<const ScanRecord*> members;
};

std::vector<ClassBin> bin_records(const std::vector<ScanRecord>& records, double x_width,
                                  double theta_width, FixMode fix);

struct BinSummary {
    double x_center = 0.0;
    double theta_center = 0.0;
    std::size_t count = 0;
    std::size_t separable_count = 0;
    double min_gamma_c = 0.0;
    double max_gamma_c = 0.0;
    double separable_min_gamma_c = 0.0;  // NaN when no separable member
    double separable_max_gamma_c = 0.0;
    bool monotone_in_neg_alpha1 = true;  // gamma_c vs -alpha1 inside the bin
};

std::vector<BinSummary> summarize_bins(const std::vector<ClassBin>& bins, double tol = 1e-9);

void write_bin_csv(std::ostream& out, const std::vector<BinSummary>& bins, FixMode fix);

struct Fig2Witness {
    // State a has the lower log-negativity but the higher gamma_c.
    std::uint64_t seed_a = 0;
    std::uint64_t seed_b = 0;
    double logneg_a = 0.0, logneg_b = 0.0;
    double gamma_a = 0.0, gamma_b = 0.0;
    double x_center = 0.0, theta_center = 0.0;
};

// Within-bin pairs whose logarithmic negativity orders opposite to
// gamma_c (margin 1e-6); at most `max_per_bin` reported per bin.
std::vector<Fig2Witness> fig2_witnesses(const std::vector<ScanRecord>& records, double g2_width,
                                        double theta_width, std::size_t max_per_bin = 1);

}  // namespace qent
