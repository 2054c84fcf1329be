#include <array>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qent/correlation.hpp"
#include "qent/lhv.hpp"
#include "qent/measures.hpp"
#include "qent/scan.hpp"
#include "qent/states.hpp"

namespace {

using namespace qent;

std::vector<double> parse_reals(const std::string& csv, std::size_t expect, const char* what) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string field;
    while (std::getline(ss, field, ',')) {
        try {
            out.push_back(std::stod(field));
        } catch (const std::exception&) {
            throw CLI::ValidationError(std::string(what) + ": bad number '" + field + "'");
        }
    }
    if (out.size() != expect)
        throw CLI::ValidationError(std::string(what) + ": expected " + std::to_string(expect) +
                                   " comma-separated reals");
    return out;
}

Vec3 parse_vec3(const std::string& csv, const char* what) {
    std::vector<double> v = parse_reals(csv, 3, what);
    return normalized(Vec3{v[0], v[1], v[2]});
}

struct StateInput {
    StateVector state;
    std::optional<CanonicalParams> params;  // set when given in canonical form
};

StateInput parse_state(const std::string& state_csv, const std::string& amps_csv) {
    if (state_csv.empty() == amps_csv.empty())
        throw CLI::ValidationError("give exactly one of --state and --amps");
    StateInput in;
    if (!state_csv.empty()) {
        std::vector<double> v = parse_reals(state_csv, 6, "--state");
        CanonicalParams p;
        for (int i = 0; i < 5; ++i) p.lambda[i] = v[i];
        p.phi = v[5];
        in.state = canonical_state(p);
        in.params = p;
    } else {
        std::vector<double> v = parse_reals(amps_csv, 16, "--amps");
        std::array<Complex, 8> a;
        for (int i = 0; i < 8; ++i) a[i] = Complex{v[2 * i], v[2 * i + 1]};
        in.state = from_amplitudes(a);
    }
    return in;
}

// Measures of a raw-amplitude state: pair concurrences give E1..E3, the
// concurrence identities give E4, and the matrix expression gives E5.
MeasureSet measures_from_state(const ComplexMatrix& rho3, Pair sel) {
    MeasureSet ms;
    ms.pair = sel;
    ms.e1 = wootters_concurrence(reduce_pair(rho3, Pair::p12));
    ms.e2 = wootters_concurrence(reduce_pair(rho3, Pair::p13));
    ms.e3 = wootters_concurrence(reduce_pair(rho3, Pair::p23));
    double c1 = bipartite_concurrence(reduce_single(rho3, 1));
    double c2 = bipartite_concurrence(reduce_single(rho3, 2));
    double c12 = bipartite_concurrence(reduce_pair(rho3, Pair::p12));
    ms.e4 = std::sqrt(std::max(0.0, c1 * c1 + c2 * c2 - c12 * c12 - 2.0 * ms.e1 * ms.e1));
    ms.e5 = e5_matrix(reduce_pair(rho3, Pair::p12), reduce_single(rho3, 1),
                      reduce_single(rho3, 2), ms);
    return ms;
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open output file '" + path + "'");
    return file;
}

std::vector<ScanRecord> load_scan(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open scan file '" + path + "'");
    return read_scan_csv(in);
}

void print_classification(std::ostream& out, const char* label, const CubicClassification& c) {
    out << label << ".alpha1 = " << c.alpha1 << "\n"
        << label << ".alpha2 = " << c.alpha2 << "\n"
        << label << ".alpha3 = " << c.alpha3 << "\n"
        << label << ".gamma1 = " << c.gamma1 << "\n"
        << label << ".gamma2 = " << c.gamma2 << "\n"
        << label << ".theta = " << c.theta << "\n"
        << label << ".discriminant = " << c.discriminant << "\n"
        << label << ".gamma = " << c.gamma << "\n";
}

int cmd_report(const StateInput& in, Pair pair, std::uint64_t seed) {
    ComplexMatrix rho3 = density(in.state);
    MeasureSet ms =
        in.params ? measures_from_params(*in.params, pair) : measures_from_state(rho3, pair);
    ComplexMatrix rho = reduce_pair(rho3, pair);
    NegativityResult neg = negativity(rho);
    Mat3 r = r_matrix(rho);
    Mat3 rc = connected_r_matrix(rho);

    std::cout.precision(17);
    std::cout << "pair = " << pair_name(pair) << "\n";
    std::cout << "E1 = " << ms.e1 << "\nE2 = " << ms.e2 << "\nE3 = " << ms.e3 << "\nE4 = "
              << ms.e4 << "\nE5 = " << ms.e5 << "\n";
    std::cout << "N = " << neg.negativity << "\nlogneg = " << neg.log_negativity << "\n";
    print_classification(std::cout, "quantum", classify(r));
    print_classification(std::cout, "connected", classify(rc));
    std::cout << "quantum.gamma_eigen = " << max_violation_eigen(r) << "\n";
    std::cout << "connected.gamma_eigen = " << max_violation_eigen(rc) << "\n";
    std::cout << "quantum.gamma_opt = " << chsh_optimize(r, 10, seed).value << "\n";
    std::cout << "connected.gamma_opt = " << chsh_optimize(rc, 10, seed).value << "\n";
    return 0;
}

int cmd_scan(std::uint64_t samples, std::uint64_t seed, Pair pair, double sep_frac,
             const std::string& out_path) {
    std::vector<ScanRecord> recs = run_scan(samples, seed, pair, sep_frac);
    std::ofstream file;
    write_scan_csv(open_output(file, out_path), recs);
    return 0;
}

int cmd_classify(const std::string& in_path, double g2_width, double theta_width, FixMode fix,
                 const std::string& out_path) {
    std::vector<ScanRecord> recs = load_scan(in_path);
    std::vector<BinSummary> sums =
        summarize_bins(bin_records(recs, g2_width, theta_width, fix));
    std::ofstream file;
    write_bin_csv(open_output(file, out_path), sums, fix);
    return 0;
}

int cmd_fig2(const std::string& in_path, double g2_width, double theta_width,
             const std::string& out_path) {
    std::vector<Fig2Witness> ws = fig2_witnesses(load_scan(in_path), g2_width, theta_width);
    std::ofstream file;
    std::ostream& out = open_output(file, out_path);
    out << "seed_a,seed_b,logneg_a,logneg_b,gamma_a,gamma_b,gamma2_center,theta_center\n";
    out.precision(17);
    for (const Fig2Witness& w : ws)
        out << w.seed_a << "," << w.seed_b << "," << w.logneg_a << "," << w.logneg_b << ","
            << w.gamma_a << "," << w.gamma_b << "," << w.x_center << "," << w.theta_center
            << "\n";
    std::cerr << ws.size() << " witness pair(s) found\n";
    return 0;
}

int cmd_lhv(const StateInput& in, Pair pair, const Vec3& a, const Vec3& b, std::uint64_t n,
            std::uint64_t seed, bool quantum) {
    ComplexMatrix rho = reduce_pair(density(in.state), pair);
    Mat3 r = quantum ? r_matrix(rho) : connected_r_matrix(rho);
    LhvModel model = build_model(r);
    double closed = correlator_closed(model, a, b);
    McResult mc = mc_correlator(model, a, b, n, seed);

    // rotate the settings a quarter turn about z for the second setting pair
    Vec3 a2{-a[1], a[0], a[2]};
    Vec3 b2{-b[1], b[0], b[2]};
    double witness = freedom_of_choice_witness(model, a, b, a2, b2, 0.5);

    std::cout.precision(17);
    std::cout << "matrix = " << (quantum ? "quantum" : "connected") << "\n";
    std::cout << "q = " << model.q[0] << "," << model.q[1] << "," << model.q[2] << "\n";
    std::cout << "k = " << model.k[0] << "," << model.k[1] << "," << model.k[2] << "\n";
    std::cout << "closed = " << closed << "\n";
    std::cout << "estimate = " << mc.estimate << "\n";
    std::cout << "stderr = " << mc.stderr_ << "\n";
    std::cout << "signed_fraction = " << mc.signed_fraction << "\n";
    std::cout << "foc_witness = " << witness << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-qubit entanglement from connected correlation matrices"};
    app.require_subcommand(1);

    std::string state_csv, amps_csv, pair_str = "12", out_path, in_path, fix_str = "g2theta";
    std::string a_csv = "0,0,1", b_csv = "0,0,1";
    std::uint64_t samples = 1000, seed = 1, n = 100000;
    double g2_width = 0.02, theta_width = 0.02, sep_frac = 0.0;
    bool quantum = false;

    auto add_state_flags = [&](CLI::App* cmd) {
        cmd->add_option("--state", state_csv, "canonical parameters l0,l1,l2,l3,l4,phi");
        cmd->add_option("--amps", amps_csv, "16 comma-separated reals (re/im interleaved)");
        cmd->add_option("--pair", pair_str, "qubit pair: 12, 13 or 23");
    };

    CLI::App* report = app.add_subcommand("report", "per-state measures and classifications");
    add_state_flags(report);
    report->add_option("--seed", seed, "optimizer restart seed");

    CLI::App* scan = app.add_subcommand("scan", "sample states and emit a CSV scan");
    scan->add_option("--samples", samples, "number of states");
    scan->add_option("--seed", seed, "base seed; row i uses seed+i");
    scan->add_option("--pair", pair_str, "qubit pair: 12, 13 or 23");
    scan->add_option("--separable-frac", sep_frac, "fraction of rows forced separable")
        ->check(CLI::Range(0.0, 1.0));
    scan->add_option("--out", out_path, "output CSV path (default stdout)");

    CLI::App* classify_cmd = app.add_subcommand("classify", "bin a scan CSV by (gamma2, theta)");
    classify_cmd->add_option("input", in_path, "scan CSV path")->required();
    classify_cmd->add_option("--g2-width", g2_width, "gamma2 (or alpha1) bin width");
    classify_cmd->add_option("--theta-width", theta_width, "theta bin width");
    classify_cmd->add_option("--fix", fix_str, "binning axes: g2theta or a1theta");
    classify_cmd->add_option("--out", out_path, "output CSV path (default stdout)");

    CLI::App* fig2 = app.add_subcommand("fig2", "negativity / gamma_c ordering witnesses");
    fig2->add_option("input", in_path, "scan CSV path")->required();
    fig2->add_option("--g2-width", g2_width, "gamma2 bin width");
    fig2->add_option("--theta-width", theta_width, "theta bin width");
    fig2->add_option("--out", out_path, "output CSV path (default stdout)");

    CLI::App* lhv = app.add_subcommand("lhv", "hidden-variable simulation of one state");
    add_state_flags(lhv);
    lhv->add_option("--a", a_csv, "first setting vector x,y,z");
    lhv->add_option("--b", b_csv, "second setting vector x,y,z");
    lhv->add_option("--n", n, "Monte Carlo sample count")->check(CLI::PositiveNumber);
    lhv->add_option("--seed", seed, "Monte Carlo seed");
    lhv->add_flag("--quantum", quantum, "use the quantum R-matrix instead of the connected one");

    CLI11_PARSE(app, argc, argv);

    try {
        Pair pair = pair_from_string(pair_str);
        if (report->parsed()) return cmd_report(parse_state(state_csv, amps_csv), pair, seed);
        if (scan->parsed()) return cmd_scan(samples, seed, pair, sep_frac, out_path);
        if (classify_cmd->parsed()) {
            FixMode fix;
            if (fix_str == "g2theta") {
                fix = FixMode::gamma2_theta;
            } else if (fix_str == "a1theta") {
                fix = FixMode::alpha1_theta;
            } else {
                throw std::runtime_error("--fix must be g2theta or a1theta");
            }
            return cmd_classify(in_path, g2_width, theta_width, fix, out_path);
        }
        if (fig2->parsed()) return cmd_fig2(in_path, g2_width, theta_width, out_path);
        if (lhv->parsed())
            return cmd_lhv(parse_state(state_csv, amps_csv), pair, parse_vec3(a_csv, "--a"),
                           parse_vec3(b_csv, "--b"), n, seed, quantum);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
