// Command-line front end: cipher operations (keystream, encrypt, decrypt,
// bench) and the analysis-lab experiments (graphs, spectra, mixing, visit
// counts, sequencing relations, attack-cost calculators, stream statistics).

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#if defined(__x86_64__) || defined(__i386__)
#include <x86intrin.h>
#endif

#include "cryptlab/complexity.hpp"
#include "cryptlab/sequencing.hpp"
#include "cryptlab/stats.hpp"
#include "mv3/stream.hpp"
#include "walklab/graph.hpp"
#include "walklab/mixing.hpp"
#include "walklab/spectrum.hpp"
#include "walklab/visits.hpp"

namespace {

struct MaterialSource {
    std::string hex;
    std::string file;
    std::string env;

    void add_options(CLI::App* cmd, const std::string& name) {
        auto* hex_opt =
            cmd->add_option("--" + name, hex,
                            name + " as a hex string (multiple of 8 chars; fine for testing, "
                                   "prefer --" + name + "-file or --" + name + "-env)");
        auto* file_opt = cmd->add_option("--" + name + "-file", file,
                                         name + " from a raw binary file (multiple of 4 bytes)");
        auto* env_opt = cmd->add_option("--" + name + "-env", env,
                                        name + " as hex from this environment variable");
        hex_opt->excludes(file_opt)->excludes(env_opt);
        file_opt->excludes(env_opt);
    }

    bool given() const { return !hex.empty() || !file.empty() || !env.empty(); }

    std::vector<mv3::Word> words(const std::string& what) const {
        if (!hex.empty()) return mv3::parse_hex_words(hex);
        if (!file.empty()) {
            std::ifstream in(file, std::ios::binary);
            if (!in) throw std::runtime_error("cannot open " + what + " file: " + file);
            std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                            std::istreambuf_iterator<char>());
            return mv3::bytes_to_words(bytes);
        }
        if (!env.empty()) {
            const char* value = std::getenv(env.c_str());
            if (!value) throw std::runtime_error("environment variable not set: " + env);
            return mv3::parse_hex_words(value);
        }
        throw std::runtime_error("no " + what + " source given (--" + what + ", --" + what +
                                 "-file, or --" + what + "-env)");
    }
};

mv3::KeyMaterial load_material(const MaterialSource& key, const MaterialSource& iv) {
    return mv3::KeyMaterial(key.words("key"), iv.words("iv"));
}

std::vector<std::uint8_t> read_all(const std::string& path) {
    if (path.empty() || path == "-") {
        std::vector<std::uint8_t> data((std::istreambuf_iterator<char>(std::cin)),
                                       std::istreambuf_iterator<char>());
        return data;
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    return std::vector<std::uint8_t>((std::istreambuf_iterator<char>(in)),
                                     std::istreambuf_iterator<char>());
}

void write_all(const std::string& path, std::span<const std::uint8_t> data) {
    if (path.empty() || path == "-") {
        std::cout.write(reinterpret_cast<const char*>(data.data()),
                        static_cast<std::streamsize>(data.size()));
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out.write(reinterpret_cast<const char*>(data.data()),
              static_cast<std::streamsize>(data.size()));
}

std::vector<double> parse_double_list(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(std::stod(item));
    return out;
}

std::vector<std::uint64_t> parse_u64_list(const std::string& csv) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(std::stoull(item));
    return out;
}

std::ofstream open_csv(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open CSV output: " + path);
    return out;
}

void print_spectrum_report(const walklab::WalkGraph& g, const walklab::Spectrum& s,
                           const std::string& csv_path) {
    std::printf("vertices:          %zu\n", g.n);
    std::printf("degree:            %zu%s\n", g.degree, g.is_out_regular() ? "" : " (max)");
    std::printf("connected:         %s\n", g.is_connected() ? "yes" : "no");
    std::printf("top eigenvalue:    %.9f\n", s.eigenvalues.empty() ? 0.0 : s.eigenvalues[0]);
    std::printf("second |lambda|:   %.9f\n", s.second_by_magnitude());
    std::printf("second signed:     %.9f\n", s.second_signed());
    bool bipartite = false;
    for (double lam : s.eigenvalues)
        if (std::abs(lam + static_cast<double>(g.degree)) < 1e-9) bipartite = true;
    std::printf("contains -k:       %s%s\n", bipartite ? "yes" : "no",
                bipartite ? " (bipartite)" : "");
    if (!csv_path.empty()) {
        auto csv = open_csv(csv_path);
        csv << "index,eigenvalue\n";
        for (std::size_t i = 0; i < s.eigenvalues.size(); i++)
            csv << i << ',' << std::setprecision(17) << s.eigenvalues[i] << '\n';
    }
}

int run_keystream(const MaterialSource& key, const MaterialSource& iv, std::size_t bytes,
                  const std::string& out_path, bool cube) {
    mv3::StreamSession session(load_material(key, iv), cube);
    // Stream out in chunks; keeps arbitrary --bytes within flat memory.
    std::vector<std::uint8_t> chunk(1 << 16);
    std::ofstream file_out;
    std::ostream* out = &std::cout;
    if (!out_path.empty() && out_path != "-") {
        file_out.open(out_path, std::ios::binary);
        if (!file_out) throw std::runtime_error("cannot open output file: " + out_path);
        out = &file_out;
    }
    std::size_t left = bytes;
    while (left > 0) {
        std::size_t n = std::min(left, chunk.size());
        session.keystream_bytes(std::span<std::uint8_t>(chunk.data(), n));
        out->write(reinterpret_cast<const char*>(chunk.data()), static_cast<std::streamsize>(n));
        left -= n;
    }
    out->flush();
    return 0;
}

int run_crypt(const MaterialSource& key, const MaterialSource& iv, const std::string& in_path,
              const std::string& out_path, bool cube) {
    mv3::StreamSession session(load_material(key, iv), cube);
    auto data = read_all(in_path);
    session.crypt(data, data);
    write_all(out_path, data);
    return 0;
}

int run_bench(std::size_t mib, bool cube) {
    mv3::KeyMaterial km = mv3::KeyMaterial::from_hex("00112233445566778899aabb",
                                                     "ccddeeff0011223344556677");
    mv3::StreamSession session(km, cube);
    std::vector<std::uint8_t> sink(1 << 20);
    // Warm up 1 MiB: the figure should reflect steady-state generation, not
    // the key schedule.
    session.keystream_bytes(std::span<std::uint8_t>(sink));

    const std::size_t total = mib << 20;
    auto t0 = std::chrono::steady_clock::now();
#if defined(__x86_64__) || defined(__i386__)
    std::uint64_t c0 = __rdtsc();
#endif
    for (std::size_t done = 0; done < total; done += sink.size())
        session.keystream_bytes(std::span<std::uint8_t>(sink));
#if defined(__x86_64__) || defined(__i386__)
    std::uint64_t c1 = __rdtsc();
#endif
    auto t1 = std::chrono::steady_clock::now();
    double seconds = std::chrono::duration<double>(t1 - t0).count();
    double mb_per_s = static_cast<double>(total) / 1e6 / seconds;
    std::printf("keystream:   %zu MiB in %.3f s\n", mib, seconds);
    std::printf("throughput:  %.1f MB/s\n", mb_per_s);
#if defined(__x86_64__) || defined(__i386__)
    std::printf("cycles/byte: %.2f (rdtsc estimate)\n",
                static_cast<double>(c1 - c0) / static_cast<double>(total));
#endif
    return 0;
}

int run_analyze_graph(std::size_t n, std::uint64_t r, bool square, const std::string& symmetrize,
                      std::size_t cap, const std::string& csv_path) {
    walklab::WalkGraph g;
    if (square) {
        g = walklab::build_square_walk_graph(n);
        if (symmetrize == "add")
            g = walklab::symmetrize_additive(g);
        else if (symmetrize == "mult")
            g = walklab::symmetrize_multiplicative(g);
        else
            throw std::runtime_error("--symmetrize must be 'add' or 'mult' for --square");
        std::printf("squaring-walk model on Z/%zu, %s reversalization\n", n,
                    symmetrize == "add" ? "additive" : "multiplicative");
        walklab::SpectrumOptions opts;
        opts.dense_cap = cap;
        walklab::Spectrum s = walklab::spectrum(g, opts);
        print_spectrum_report(g, s, csv_path);
        // No theoretical bound is claimed for this model; the gap is an
        // empirical observation.
        std::printf("normalized |lambda_2| (empirical): %.9f\n",
                    s.second_by_magnitude() / static_cast<double>(g.degree));
        return 0;
    }

    g = walklab::build_nonlinear_graph(n, r);
    std::printf("nonlinear graph on Z/%zu with r=%llu\n", n,
                static_cast<unsigned long long>(r));
    walklab::SpectrumOptions opts;
    opts.dense_cap = cap;
    walklab::Spectrum s = walklab::spectrum(g, opts);
    print_spectrum_report(g, s, csv_path);

    auto explicit_eigs = walklab::explicit_eigenvalues(n, r);
    std::printf("explicit eigenvalues (rk = k mod n): ");
    for (double e : explicit_eigs) std::printf("%.6f ", e);
    std::printf("\n");
    std::printf("census contained:  %s\n",
                walklab::contains_explicit(s, explicit_eigs) ? "yes" : "NO");
    double c = walklab::fit_gap_constant(s, n, explicit_eigs);
    std::printf("fitted gap constant c (|lambda| <= 4 - c/(ln n)^2): %.6f\n", c);
    return 0;
}

int run_analyze_cayley(std::size_t n, const std::string& gens_csv, std::size_t random_count,
                       std::uint64_t seed, std::size_t cap, const std::string& csv_path) {
    std::vector<std::uint64_t> gens;
    if (random_count > 0) {
        std::mt19937_64 rng(seed);
        for (std::size_t i = 0; i < random_count; i++) gens.push_back(rng() % n);
        std::printf("Cayley graph on Z/%zu with %zu random generators (seed %llu)\n", n,
                    random_count, static_cast<unsigned long long>(seed));
    } else {
        gens = parse_u64_list(gens_csv);
        std::printf("Cayley graph on Z/%zu with generators {%s}\n", n, gens_csv.c_str());
    }
    walklab::WalkGraph g = walklab::build_cayley_graph(n, gens);
    walklab::SpectrumOptions opts;
    opts.dense_cap = cap;
    walklab::Spectrum s = walklab::spectrum(g, opts);
    print_spectrum_report(g, s, csv_path);
    std::printf("normalized second eigenvalue: %.9f\n",
                s.second_by_magnitude() / static_cast<double>(g.degree));
    return 0;
}

int run_mixing(std::size_t n, std::uint64_t r, std::size_t start, double eps, bool lazy,
               std::size_t max_steps, std::size_t set_size) {
    walklab::WalkGraph g = walklab::build_nonlinear_graph(n, r);
    walklab::MixingOptions opts;
    opts.lazy = lazy;
    opts.max_steps = max_steps;
    std::size_t t = walklab::mixing_time(g, start, eps, opts);
    std::printf("mixing time to TV < %g from vertex %zu: %zu steps%s\n", eps, start, t,
                lazy ? " (lazy walk)" : "");

    walklab::Spectrum s = walklab::spectrum(g);
    double sigma = s.second_by_magnitude();
    std::printf("measured sigma (largest nontrivial |lambda|): %.6f\n", sigma);
    if (sigma < static_cast<double>(g.degree)) {
        double bound = walklab::landing_bound(n, set_size, static_cast<double>(g.degree), sigma);
        std::printf("landing bound log(2n/sqrt(|S|))/log(k/sigma) with |S|=%zu: %.1f steps\n",
                    set_size, bound);
    } else {
        std::printf("landing bound: n/a (sigma = k; bipartite graph, use the lazy walk)\n");
    }
    return 0;
}

int run_visits(std::size_t n, std::uint64_t r, std::size_t start, std::size_t steps,
               std::size_t set_size, std::size_t trials, const std::string& xs_csv,
               std::uint64_t seed, const std::string& csv_path) {
    walklab::WalkGraph g = walklab::build_nonlinear_graph(n, r);
    walklab::Spectrum s = walklab::spectrum(g);
    double lambda2 = s.second_signed();
    double epsilon = (static_cast<double>(g.degree) - lambda2) / static_cast<double>(g.degree);

    walklab::WalkExperiment exp;
    exp.start = start;
    exp.steps = steps;
    exp.trials = trials;
    exp.seed = seed;
    exp.target.resize(set_size);
    std::iota(exp.target.begin(), exp.target.end(), 0);

    auto xs = parse_double_list(xs_csv);
    walklab::TailReport report = walklab::visit_count_experiment(g, exp, xs, epsilon);
    std::printf("visit counts on Z/%zu (r=%llu), |S|=%zu, %zu steps, %zu trials\n", n,
                static_cast<unsigned long long>(r), set_size, steps, trials);
    std::printf("lambda_2 = %.6f, epsilon = %.6f, expected visits = %.1f\n", lambda2, epsilon,
                report.expected_visits);
    std::printf("%10s %12s %12s\n", "x", "empirical", "bound");
    for (const auto& p : report.points)
        std::printf("%10.1f %12.6f %12.6f%s\n", p.x, p.empirical, p.bound,
                    p.empirical <= p.bound ? "" : "  VIOLATED");
    if (!csv_path.empty()) {
        auto csv = open_csv(csv_path);
        csv << "x,empirical,bound\n";
        for (const auto& p : report.points)
            csv << p.x << ',' << p.empirical << ',' << p.bound << '\n';
    }
    return 0;
}

int run_sequencing(const std::string& scheme_sel, const std::string& scheme_file,
                   std::size_t max_b, std::size_t horizon, std::uint32_t window,
                   bool relax_window, const std::string& csv_path) {
    cryptlab::SequencingScheme scheme;
    if (!scheme_file.empty()) {
        std::ifstream in(scheme_file);
        if (!in) throw std::runtime_error("cannot open scheme file: " + scheme_file);
        scheme = cryptlab::SequencingScheme::from_text(in, window);
    } else if (scheme_sel == "family") {
        scheme = cryptlab::SequencingScheme::mv3_family();
    } else if (scheme_sel == "buffer-rule") {
        scheme = cryptlab::SequencingScheme::mv3_buffer_rule();
    } else {
        throw std::runtime_error("--scheme must be 'family', 'buffer-rule', or use --scheme-file");
    }

    cryptlab::SearchResult r = cryptlab::min_pair_weight(scheme, max_b, horizon, relax_window);
    std::printf("scheme period %zu, window %u; searched b <= %zu over horizon %zu\n",
                scheme.period, scheme.window, r.max_b, r.horizon);
    std::printf("minimal pair count a (upper bound for unbounded b): %zu\n", r.a_min);
    std::printf("witness: %zu outputs {", r.witness.b());
    for (std::size_t i = 0; i < r.witness.y_indices.size(); i++)
        std::printf("%s%u", i ? ", " : "", r.witness.y_indices[i]);
    std::printf("} = XOR of %zu pairs {", r.witness.a());
    for (std::size_t i = 0; i < r.witness.pair_indices.size(); i++)
        std::printf("%s(%u,%u)", i ? ", " : "", r.witness.pair_indices[i],
                    r.witness.pair_indices[i] + 1);
    std::printf("}\n");
    std::printf("witness verifies over GF(2): %s\n",
                cryptlab::verify_witness(scheme, r.witness) ? "yes" : "NO");
    if (!csv_path.empty()) {
        auto csv = open_csv(csv_path);
        csv << "kind,value\n";
        csv << "a_min," << r.a_min << '\n';
        for (auto j : r.witness.y_indices) csv << "y," << j << '\n';
        for (auto p : r.witness.pair_indices) csv << "pair," << p << '\n';
    }
    return 0;
}

int run_bound(double eps, const std::string& counts_csv) {
    std::map<unsigned, double> counts;
    std::stringstream ss(counts_csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos)
            throw std::runtime_error("--counts entries look like a:count, e.g. 12:1000000");
        counts[static_cast<unsigned>(std::stoul(item.substr(0, colon)))] +=
            std::stod(item.substr(colon + 1));
    }
    double bound = cryptlab::distinguisher_bound(eps, counts);
    std::printf("statistical distance bound sqrt(sum A(a) eps^2a) = %.6g", bound);
    if (bound > 0) std::printf("  (2^%.2f)", std::log2(bound));
    std::printf("\n");
    return 0;
}

int run_relkey(unsigned t, unsigned loops, bool insertion) {
    cryptlab::RelatedKeyComplexity c = cryptlab::related_key_complexity(t, loops, insertion);
    std::printf("t = %u words touched per phase-step (keylength = 8192/t = %u bits)\n", t,
                8192 / t);
    std::printf("log2 M (pairs of related IVs):  %.2f\n", c.log2_m);
    std::printf("log2 data/time (2^10 * M):      %.2f\n", c.log2_total);
    return 0;
}

int run_stats(const MaterialSource& key, const MaterialSource& iv, std::size_t bytes,
              const std::string& in_path, bool cube) {
    std::vector<std::uint8_t> stream;
    if (key.given()) {
        mv3::StreamSession session(load_material(key, iv), cube);
        stream = session.keystream_bytes(bytes);
        std::printf("testing %zu keystream bytes\n", bytes);
    } else {
        stream = read_all(in_path);
        std::printf("testing %zu bytes of input\n", stream.size());
    }
    cryptlab::StatReport r = cryptlab::stat_tests(stream);
    std::printf("monobit z:        %+.3f   %s\n", r.monobit_z, r.monobit_pass ? "ok" : "FAIL");
    std::printf("serial chi2 (3):  %.3f    %s\n", r.serial_chi2, r.serial_pass ? "ok" : "FAIL");
    double worst = 0;
    std::size_t worst_bit = 0;
    for (std::size_t bit = 0; bit < 32; bit++)
        if (std::abs(r.lane_z[bit]) > std::abs(worst)) {
            worst = r.lane_z[bit];
            worst_bit = bit;
        }
    std::printf("32 bit lanes:     worst z %+.3f at bit %zu   %s\n", worst, worst_bit,
                r.lanes_pass ? "ok" : "FAIL");
    std::printf("%s\n", r.pass() ? "PASS" : "FAIL");
    return r.pass() ? 0 : 2;
}

int run_tmdto(std::size_t key_bits) {
    cryptlab::TmdtoReport r = cryptlab::tmdto_margin(key_bits);
    std::printf("internal state: %zu bits\n", r.state_bits);
    std::printf("key size:       %zu bits\n", r.key_bits);
    std::printf("state >= 2x key: %s\n", r.margin_ok ? "yes (tradeoff margin holds)"
                                                     : "NO (documented limitation)");
    cryptlab::GuessDetermineCost g = cryptlab::guess_and_determine_cost();
    std::printf("guess-and-determine: %u words (%u bits) guessed, %u collisions filter,"
                " 2^14 keystream bits, time > 2^%u\n",
                g.words_guessed, g.bits_guessed, g.collisions_needed, g.bits_guessed);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"MV3 stream cipher and analysis laboratory"};
    app.require_subcommand(1);

    // keystream
    auto* ks = app.add_subcommand("keystream", "write raw keystream bytes");
    MaterialSource ks_key, ks_iv;
    ks_key.add_options(ks, "key");
    ks_iv.add_options(ks, "iv");
    std::size_t ks_bytes = 0;
    std::string ks_out;
    bool ks_cube = false;
    ks->add_option("--bytes", ks_bytes, "number of keystream bytes")->required();
    ks->add_option("--out", ks_out, "output file (default: stdout)");
    ks->add_flag("--cube", ks_cube, "use the c^3 multiplier refresh");

    // encrypt / decrypt
    auto* enc = app.add_subcommand("encrypt", "XOR input with the keystream");
    auto* dec = app.add_subcommand("decrypt", "XOR input with the keystream (same as encrypt)");
    MaterialSource enc_key, enc_iv, dec_key, dec_iv;
    std::string enc_in, enc_out, dec_in, dec_out;
    bool enc_cube = false, dec_cube = false;
    enc_key.add_options(enc, "key");
    enc_iv.add_options(enc, "iv");
    enc->add_option("--in", enc_in, "input file (default: stdin)");
    enc->add_option("--out", enc_out, "output file (default: stdout)");
    enc->add_flag("--cube", enc_cube, "use the c^3 multiplier refresh");
    dec_key.add_options(dec, "key");
    dec_iv.add_options(dec, "iv");
    dec->add_option("--in", dec_in, "input file (default: stdin)");
    dec->add_option("--out", dec_out, "output file (default: stdout)");
    dec->add_flag("--cube", dec_cube, "use the c^3 multiplier refresh");

    // analyze-graph
    auto* ag = app.add_subcommand("analyze-graph",
                                  "exact spectrum of the nonlinear multiplier graph "
                                  "(CSV columns: index,eigenvalue)");
    std::size_t ag_n = 1024, ag_cap = 4096;
    std::uint64_t ag_r = 3;
    bool ag_square = false;
    std::string ag_symmetrize = "add", ag_csv;
    ag->add_option("--n", ag_n, "vertex count (modulus)");
    ag->add_option("--r", ag_r, "multiplier r, coprime to n");
    ag->add_flag("--square", ag_square, "use the squaring-walk model instead");
    ag->add_option("--symmetrize", ag_symmetrize, "reversalization for --square: add | mult");
    ag->add_option("--cap", ag_cap, "dense eigensolve cap");
    ag->add_option("--csv", ag_csv, "write eigenvalues as CSV");

    // analyze-cayley
    auto* ac = app.add_subcommand("analyze-cayley",
                                  "exact spectrum of an abelian Cayley graph "
                                  "(CSV columns: index,eigenvalue)");
    std::size_t ac_n = 1024, ac_random = 0, ac_cap = 4096;
    std::uint64_t ac_seed = 1;
    std::string ac_gens = "1", ac_csv;
    ac->add_option("--n", ac_n, "group order");
    ac->add_option("--generators", ac_gens, "comma-separated generator list");
    ac->add_option("--random-generators", ac_random, "draw this many random generators instead");
    ac->add_option("--seed", ac_seed, "seed for --random-generators");
    ac->add_option("--cap", ac_cap, "dense eigensolve cap");
    ac->add_option("--csv", ac_csv, "write eigenvalues as CSV");

    // mixing
    auto* mx = app.add_subcommand("mixing", "exact mixing time of the nonlinear graph walk");
    std::size_t mx_n = 1024, mx_start = 0, mx_max = 100000, mx_set = 1;
    std::uint64_t mx_r = 3;
    double mx_eps = 0.001;
    bool mx_lazy = false;
    mx->add_option("--n", mx_n, "vertex count");
    mx->add_option("--r", mx_r, "multiplier");
    mx->add_option("--start", mx_start, "start vertex");
    mx->add_option("--eps", mx_eps, "total-variation threshold in (0,1)");
    mx->add_flag("--lazy", mx_lazy, "lazy walk (stay with probability 1/2)");
    mx->add_option("--max-steps", mx_max, "non-convergence cutoff");
    mx->add_option("--set-size", mx_set, "|S| used in the reported landing bound");

    // visits
    auto* vs = app.add_subcommand("visits",
                                  "Monte-Carlo visit counts against the Chernoff-type tail "
                                  "bound (CSV columns: x,empirical,bound)");
    std::size_t vs_n = 512, vs_start = 0, vs_steps = 2000, vs_set = 128, vs_trials = 5000;
    std::uint64_t vs_r = 3, vs_seed = 1;
    std::string vs_xs = "50,100,200", vs_csv;
    vs->add_option("--n", vs_n, "vertex count");
    vs->add_option("--r", vs_r, "multiplier");
    vs->add_option("--start", vs_start, "start vertex");
    vs->add_option("--steps", vs_steps, "walk length per trial");
    vs->add_option("--set-size", vs_set, "target set = first this-many vertices");
    vs->add_option("--trials", vs_trials, "number of walks (>= 1000)");
    vs->add_option("--xs", vs_xs, "comma-separated deviation grid");
    vs->add_option("--seed", vs_seed, "RNG seed");
    vs->add_option("--csv", vs_csv, "write the tail table as CSV");

    // sequencing
    auto* sq = app.add_subcommand("sequencing",
                                  "minimal consecutive-pair relation search "
                                  "(CSV columns: kind,value)");
    std::string sq_scheme = "family", sq_file, sq_csv;
    std::size_t sq_maxb = 6, sq_horizon = 0;
    std::uint32_t sq_window = 0;
    bool sq_relax = false;
    sq->add_option("--scheme", sq_scheme, "family | buffer-rule");
    sq->add_option("--scheme-file", sq_file,
                   "scheme from a text file: one line per residue listing offsets");
    sq->add_option("--max-b", sq_maxb, "combination size bound");
    sq->add_option("--horizon", sq_horizon, "y-index window (default 4P + C)");
    sq->add_option("--window", sq_window, "window constant for --scheme-file");
    sq->add_flag("--relax-window", sq_relax, "allow window constants outside [64, 256]");
    sq->add_option("--csv", sq_csv, "write a_min and the witness as CSV");

    // relkey
    auto* rk = app.add_subcommand("relkey", "related-key attack complexity formulas");
    unsigned rk_t = 1, rk_loops = 8;
    bool rk_insertion = false;
    rk->add_option("--t", rk_t, "table words touched per phase-step (1..63)")->required();
    rk->add_option("--loops", rk_loops, "loops per phase: 8, 4, or 2");
    rk->add_flag("--insertion", rk_insertion, "insertion key-schedule variant");

    // bound
    auto* bd = app.add_subcommand("bound", "linear distinguisher statistical-distance bound");
    double bd_eps = 0.0;
    std::string bd_counts;
    bd->add_option("--eps", bd_eps, "bias of the best pair approximation, in [0, 1/2]")
        ->required();
    bd->add_option("--counts", bd_counts, "relation counts as a:count[,a:count...]")->required();

    // stats
    auto* st = app.add_subcommand("stats",
                                  "monobit, 2-bit serial, and per-bit-lane tests at 4 sigma");
    MaterialSource st_key, st_iv;
    st_key.add_options(st, "key");
    st_iv.add_options(st, "iv");
    std::size_t st_bytes = 10000000;
    std::string st_in;
    bool st_cube = false;
    st->add_option("--bytes", st_bytes, "keystream bytes to generate when a key is given");
    st->add_option("--in", st_in, "test a byte stream from this file (default: stdin)");
    st->add_flag("--cube", st_cube, "use the c^3 multiplier refresh");

    // tmdto
    auto* td = app.add_subcommand("tmdto", "state-size margin and guess-and-determine tally");
    std::size_t td_bits = 256;
    td->add_option("--key-bits", td_bits, "key size in bits");

    // bench
    auto* bn = app.add_subcommand("bench", "steady-state keystream throughput");
    std::size_t bn_mib = 256;
    bool bn_cube = false;
    bn->add_option("--mib", bn_mib, "MiB of keystream to time");
    bn->add_flag("--cube", bn_cube, "use the c^3 multiplier refresh");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*ks) return run_keystream(ks_key, ks_iv, ks_bytes, ks_out, ks_cube);
        if (*enc) return run_crypt(enc_key, enc_iv, enc_in, enc_out, enc_cube);
        if (*dec) return run_crypt(dec_key, dec_iv, dec_in, dec_out, dec_cube);
        if (*ag) return run_analyze_graph(ag_n, ag_r, ag_square, ag_symmetrize, ag_cap, ag_csv);
        if (*ac) return run_analyze_cayley(ac_n, ac_gens, ac_random, ac_seed, ac_cap, ac_csv);
        if (*mx) return run_mixing(mx_n, mx_r, mx_start, mx_eps, mx_lazy, mx_max, mx_set);
        if (*vs)
            return run_visits(vs_n, vs_r, vs_start, vs_steps, vs_set, vs_trials, vs_xs, vs_seed,
                              vs_csv);
        if (*sq)
            return run_sequencing(sq_scheme, sq_file, sq_maxb, sq_horizon, sq_window, sq_relax,
                                  sq_csv);
        if (*rk) return run_relkey(rk_t, rk_loops, rk_insertion);
        if (*bd) return run_bound(bd_eps, bd_counts);
        if (*st) return run_stats(st_key, st_iv, st_bytes, st_in, st_cube);
        if (*td) return run_tmdto(td_bits);
        if (*bn) return run_bench(bn_mib, bn_cube);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
