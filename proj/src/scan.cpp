#include "qent/scan.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qent {

namespace {

std::string fmt(double x) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

double parse_double(const std::string& s) {
    double x;
    auto res = std::from_chars(s.data(), s.data() + s.size(), x);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
        throw std::runtime_error("scan csv: bad float field '" + s + "'");
    return x;
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = line.find(sep, start);
        if (pos == std::string::npos) {
            out.push_back(line.substr(start));
            break;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return out;
}

// Zero the amplitudes that force the pair's own measure to vanish, then
// renormalize.
CanonicalParams make_separable(CanonicalParams p, Pair pair) {
    switch (pair) {
        case Pair::p12: p.lambda[3] = 0.0; break;
        case Pair::p13: p.lambda[2] = 0.0; break;
        case Pair::p23: p.lambda[1] = p.lambda[2] = 0.0; break;
    }
    double s = 0.0;
    for (double l : p.lambda) s += l * l;
    if (s == 0.0) {
        p.lambda[0] = 1.0;
        return p;
    }
    s = std::sqrt(s);
    for (double& l : p.lambda) l /= s;
    return p;
}

long bin_index(double x, double width) { return static_cast<long>(std::floor(x / width)); }

}  // namespace

const char* const kScanCsvHeader =
    "seed,l0,l1,l2,l3,l4,phi,pair,E1,E2,E3,E4,E5,N,logneg,"
    "q_alpha1,q_alpha2,q_alpha3,q_gamma,"
    "c_alpha1,c_alpha2,c_alpha3,c_gamma1,c_gamma2,c_theta,c_gamma,separable";

ScanRecord evaluate_state(const CanonicalParams& p, Pair pair, std::uint64_t seed) {
    ScanRecord r;
    r.seed = seed;
    r.params = p;
    r.pair = pair;
    r.measures = measures_from_params(p, pair);
    ComplexMatrix rho = reduce_pair(density(canonical_state(p)), pair);
    r.neg = negativity(rho);
    r.quantum = classify(r_matrix(rho));
    r.connected = classify(connected_r_matrix(rho));
    r.separable = wootters_concurrence(rho) <= 1e-9;
    return r;
}

std::vector<ScanRecord> run_scan(std::uint64_t samples, std::uint64_t base_seed, Pair pair,
                                 double separable_fraction) {
    std::vector<ScanRecord> out;
    out.reserve(samples);
    std::uint64_t period = 0;
    if (separable_fraction > 0.0)
        period = std::max<std::uint64_t>(
            1, static_cast<std::uint64_t>(std::llround(1.0 / separable_fraction)));
    for (std::uint64_t i = 0; i < samples; ++i) {
        std::uint64_t seed = base_seed + i;
        CanonicalParams p = sample_canonical(seed);
        if (period > 0 && i % period == 0) p = make_separable(p, pair);
        out.push_back(evaluate_state(p, pair, seed));
    }
    return out;
}

std::string to_csv_row(const ScanRecord& r) {
    std::string s;
    s += std::to_string(r.seed);
    for (double l : r.params.lambda) s += "," + fmt(l);
    s += "," + fmt(r.params.phi);
    s += std::string(",") + pair_name(r.pair);
    s += "," + fmt(r.measures.e1) + "," + fmt(r.measures.e2) + "," + fmt(r.measures.e3) + "," +
         fmt(r.measures.e4) + "," + fmt(r.measures.e5);
    s += "," + fmt(r.neg.negativity) + "," + fmt(r.neg.log_negativity);
    s += "," + fmt(r.quantum.alpha1) + "," + fmt(r.quantum.alpha2) + "," + fmt(r.quantum.alpha3) +
         "," + fmt(r.quantum.gamma);
    s += "," + fmt(r.connected.alpha1) + "," + fmt(r.connected.alpha2) + "," +
         fmt(r.connected.alpha3) + "," + fmt(r.connected.gamma1) + "," +
         fmt(r.connected.gamma2) + "," + fmt(r.connected.theta) + "," + fmt(r.connected.gamma);
    s += r.separable ? ",1" : ",0";
    return s;
}

ScanRecord from_csv_row(const std::string& line) {
    std::vector<std::string> f = split(line, ',');
    if (f.size() != 27) throw std::runtime_error("scan csv: expected 27 fields");
    ScanRecord r;
    r.seed = std::stoull(f[0]);
    for (int i = 0; i < 5; ++i) r.params.lambda[i] = parse_double(f[1 + i]);
    r.params.phi = parse_double(f[6]);
    r.pair = pair_from_string(f[7]);
    r.measures.e1 = parse_double(f[8]);
    r.measures.e2 = parse_double(f[9]);
    r.measures.e3 = parse_double(f[10]);
    r.measures.e4 = parse_double(f[11]);
    r.measures.e5 = parse_double(f[12]);
    r.measures.pair = r.pair;
    r.neg.negativity = parse_double(f[13]);
    r.neg.log_negativity = parse_double(f[14]);
    r.quantum.alpha1 = parse_double(f[15]);
    r.quantum.alpha2 = parse_double(f[16]);
    r.quantum.alpha3 = parse_double(f[17]);
    r.quantum.gamma = parse_double(f[18]);
    r.connected.alpha1 = parse_double(f[19]);
    r.connected.alpha2 = parse_double(f[20]);
    r.connected.alpha3 = parse_double(f[21]);
    r.connected.gamma1 = parse_double(f[22]);
    r.connected.gamma2 = parse_double(f[23]);
    r.connected.theta = parse_double(f[24]);
    r.connected.gamma = parse_double(f[25]);
    r.separable = f[26] == "1";
    return r;
}

void write_scan_csv(std::ostream& out, const std::vector<ScanRecord>& records) {
    out << kScanCsvHeader << "\n";
    for (const ScanRecord& r : records) out << to_csv_row(r) << "\n";
}

std::vector<ScanRecord> read_scan_csv(std::istream& in) {
    std::vector<ScanRecord> out;
    std::string line;
    if (!std::getline(in, line)) return out;
    if (line != kScanCsvHeader) throw std::runtime_error("scan csv: unexpected header");
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        out.push_back(from_csv_row(line));
    }
    return out;
}

std::vector<ClassBin> bin_records(const std::vector<ScanRecord>& records, double x_width,
                                  double theta_width, FixMode fix) {
    if (x_width <= 0.0 || theta_width <= 0.0)
        throw std::invalid_argument("bin_records: widths must be positive");
    std::map<std::pair<long, long>, ClassBin> bins;
    for (const ScanRecord& r : records) {
        double x = fix == FixMode::gamma2_theta ? r.connected.gamma2 : r.connected.alpha1;
        long ix = bin_index(x, x_width);
        long it = bin_index(r.connected.theta, theta_width);
        ClassBin& b = bins[{ix, it}];
        if (b.members.empty()) {
            b.x_center = (static_cast<double>(ix) + 0.5) * x_width;
            b.theta_center = (static_cast<double>(it) + 0.5) * theta_width;
        }
        b.members.push_back(&r);
    }
    std::vector<ClassBin> out;
    out.reserve(bins.size());
    for (auto& [key, bin] : bins) out.push_back(std::move(bin));
    return out;
}

std::vector<BinSummary> summarize_bins(const std::vector<ClassBin>& bins, double tol) {
    std::vector<BinSummary> out;
    out.reserve(bins.size());
    for (const ClassBin& bin : bins) {
        BinSummary s;
        s.x_center = bin.x_center;
        s.theta_center = bin.theta_center;
        s.count = bin.members.size();
        s.min_gamma_c = std::numeric_limits<double>::infinity();
        s.max_gamma_c = -std::numeric_limits<double>::infinity();
        s.separable_min_gamma_c = std::numeric_limits<double>::quiet_NaN();
        s.separable_max_gamma_c = std::numeric_limits<double>::quiet_NaN();
        for (const ScanRecord* r : bin.members) {
            double g = r->connected.gamma;
            s.min_gamma_c = std::min(s.min_gamma_c, g);
            s.max_gamma_c = std::max(s.max_gamma_c, g);
            if (r->separable) {
                ++s.separable_count;
                if (std::isnan(s.separable_min_gamma_c)) {
                    s.separable_min_gamma_c = s.separable_max_gamma_c = g;
                } else {
                    s.separable_min_gamma_c = std::min(s.separable_min_gamma_c, g);
                    s.separable_max_gamma_c = std::max(s.separable_max_gamma_c, g);
                }
            }
        }
        std::vector<const ScanRecord*> sorted = bin.members;
        std::sort(sorted.begin(), sorted.end(), [](const ScanRecord* a, const ScanRecord* b) {
            return -a->connected.alpha1 < -b->connected.alpha1;
        });
        for (std::size_t i = 1; i < sorted.size(); ++i) {
            if (sorted[i]->connected.gamma <
                sorted[i - 1]->connected.gamma - std::max(tol, 1e-6)) {
                s.monotone_in_neg_alpha1 = false;
                break;
            }
        }
        out.push_back(s);
    }
    return out;
}

void write_bin_csv(std::ostream& out, const std::vector<BinSummary>& bins, FixMode fix) {
    out << (fix == FixMode::gamma2_theta ? "gamma2_center" : "alpha1_center")
        << ",theta_center,count,separable_count,min_gamma_c,max_gamma_c,"
           "separable_min_gamma_c,separable_max_gamma_c,monotone_in_neg_alpha1\n";
    for (const BinSummary& b : bins) {
        out << fmt(b.x_center) << "," << fmt(b.theta_center) << "," << b.count << ","
            << b.separable_count << "," << fmt(b.min_gamma_c) << "," << fmt(b.max_gamma_c) << ","
            << fmt(b.separable_min_gamma_c) << "," << fmt(b.separable_max_gamma_c) << ","
            << (b.monotone_in_neg_alpha1 ? 1 : 0) << "\n";
    }
}

std::vector<Fig2Witness> fig2_witnesses(const std::vector<ScanRecord>& records, double g2_width,
                                        double theta_width, std::size_t max_per_bin) {
    std::vector<Fig2Witness> out;
    for (const ClassBin& bin :
         bin_records(records, g2_width, theta_width, FixMode::gamma2_theta)) {
        std::vector<const ScanRecord*> sorted = bin.members;
        std::sort(sorted.begin(), sorted.end(), [](const ScanRecord* a, const ScanRecord* b) {
            return a->connected.gamma > b->connected.gamma;
        });
        std::size_t found = 0;
        std::size_t j = 0;
        double min_logneg = std::numeric_limits<double>::infinity();
        const ScanRecord* min_rec = nullptr;
        for (const ScanRecord* r : sorted) {
            while (j < sorted.size() &&
                   sorted[j]->connected.gamma > r->connected.gamma + 1e-6) {
                if (sorted[j]->neg.log_negativity < min_logneg) {
                    min_logneg = sorted[j]->neg.log_negativity;
                    min_rec = sorted[j];
                }
                ++j;
            }
            if (min_rec && min_logneg < r->neg.log_negativity) {
                Fig2Witness w;
                w.seed_a = min_rec->seed;
                w.seed_b = r->seed;
                w.logneg_a = min_rec->neg.log_negativity;
                w.logneg_b = r->neg.log_negativity;
                w.gamma_a = min_rec->connected.gamma;
                w.gamma_b = r->connected.gamma;
                w.x_center = bin.x_center;
                w.theta_center = bin.theta_center;
                out.push_back(w);
                if (++found >= max_per_bin) break;
            }
        }
    }
    return out;
}

}  // namespace qent
