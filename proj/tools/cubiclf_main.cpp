// Command-line front end: sieving, symbols, Gauss sums, L-values, zeros,
// moment/density verification runs. Exit codes: 0 ok, 1 precondition error,
// 2 numeric-guard failure, 3 resource cap.
#include <complex>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cubiclf/cache.hpp"
#include "cubiclf/gauss.hpp"
#include "cubiclf/lfunctions.hpp"
#include "cubiclf/moments.hpp"
#include "cubiclf/parallel.hpp"
#include "cubiclf/primes.hpp"
#include "cubiclf/symbols.hpp"
#include "cubiclf/verify.hpp"

namespace {

using namespace cubiclf;

cdouble parse_complex(const std::string& s) {
    // "re" or "re,im"
    auto comma = s.find(',');
    if (comma == std::string::npos) return cdouble(std::stod(s), 0.0);
    return cdouble(std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1)));
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    return file;
}

std::string splitting_name(Splitting s) {
    switch (s) {
        case Splitting::split: return "split";
        case Splitting::inert: return "inert";
        default: return "ramified";
    }
}

PrimaryPrime prime_from_string(const std::string& text) {
    EisensteinInt pi = primary_associate(parse_eisenstein(text));
    if (!is_prime_element(pi)) throw std::domain_error("not a prime element: " + text);
    PrimaryPrime pp;
    pp.pi = pi;
    pp.norm = std::uint64_t(norm(pi));
    pp.splitting = pi.b == 0 ? Splitting::inert : Splitting::split;
    pp.residue_mod9 = canonical_rep(pi, EisensteinInt{9, 0});
    return pp;
}

int run(int argc, char** argv) {
    CLI::App app{"cubic Hecke L-function toolkit"};
    app.require_subcommand(1);
    unsigned threads = 0;
    std::string cache_path;
    app.add_option("--threads", threads, "worker threads (0 = auto)");
    app.add_option("--cache-dir", cache_path, "cache directory (default $CACHE_DIR or ./cache)");

    auto* sieve = app.add_subcommand("sieve", "sieve the family of primary primes == 1 (mod 9)");
    double sieve_limit = 0;
    bool split_only = false;
    std::string sieve_out;
    sieve->add_option("--limit", sieve_limit, "norm bound X")->required();
    sieve->add_flag("--split-only", split_only, "exclude inert members");
    sieve->add_option("--out", sieve_out, "output CSV (default stdout)");

    auto* symb = app.add_subcommand("symbol", "cubic residue symbol (a/n)_3");
    std::string sym_a, sym_n;
    symb->add_option("--a", sym_a)->required();
    symb->add_option("--n", sym_n)->required();

    auto* gauss = app.add_subcommand("gauss", "Gauss sum g_K(k, chi_{j,n})");
    std::string gauss_k{"1"}, gauss_n;
    gauss->add_option("--k", gauss_k);
    gauss->add_option("--n", gauss_n)->required();

    auto* gbatch = app.add_subcommand("gauss-batch", "g_{K,j}(pi) for all primary primes <= X");
    double gb_limit = 0;
    std::string gb_out;
    gbatch->add_option("--limit", gb_limit)->required();
    gbatch->add_option("--out", gb_out, "output CSV (default stdout)");

    auto* lval = app.add_subcommand("lvalue", "L(s, chi_{j,pi})");
    std::string lv_pi, lv_s{"0.5"};
    bool lv_q = false;
    lval->add_option("--pi", lv_pi)->required();
    lval->add_option("--s", lv_s, "complex s as RE or RE,IM");
    lval->add_flag("--q-side", lv_q, "induced cubic Dirichlet L-function");

    auto* zeros = app.add_subcommand("zeros", "zeros of Lambda(s, chi) with |Im| <= T");
    std::string z_pi, z_out;
    double z_T = 20.0;
    bool z_q = false;
    zeros->add_option("--pi", z_pi)->required();
    zeros->add_option("--T", z_T);
    zeros->add_flag("--q-side", z_q);
    zeros->add_option("--out", z_out, "output CSV (default stdout)");

    auto* mom = app.add_subcommand("moment", "family moment verification run");
    std::string m_kind, m_alpha{"0"}, m_beta, m_out, m_weight{"bump"};
    double m_X = 0;
    bool m_q = false, m_dump = false, m_split_only = false;
    mom->add_option("--kind", m_kind, "ratios|first|negative|logderiv")->required();
    mom->add_option("--X", m_X)->required();
    mom->add_option("--alpha", m_alpha, "shift (RE or RE,IM); r for logderiv");
    mom->add_option("--beta", m_beta, "denominator shift (ratios)");
    mom->add_option("--weight", m_weight, "weight name (bump)");
    mom->add_flag("--q-side", m_q);
    mom->add_flag("--split-only", m_split_only);
    mom->add_flag("--dump-terms", m_dump, "CSV of per-prime contributions to stderr");
    mom->add_option("--out", m_out, "output JSON (default stdout)");

    auto* dens = app.add_subcommand("density", "one-level density of low-lying zeros");
    double d_X = 0, d_a = 0.5;
    bool d_q = false;
    std::string d_out;
    dens->add_option("--X", d_X)->required();
    dens->add_option("--a", d_a, "Fourier support of the test function");
    dens->add_flag("--q-side", d_q);
    dens->add_option("--out", d_out, "output JSON (default stdout)");

    auto* ver = app.add_subcommand("verify", "run the acceptance battery");
    std::string v_suite{"all"};
    ver->add_option("--suite", v_suite, "core|all");

    CLI11_PARSE(app, argc, argv);
    if (threads) set_thread_count(threads);
    if (!cache_path.empty()) set_cache_dir(cache_path);

    std::ofstream file;
    if (sieve->parsed()) {
        auto fam = sieve_family(sieve_limit, split_only);
        auto& out = open_out(file, sieve_out);
        out << "a,b,norm,splitting\n";
        for (const auto& p : fam)
            out << to_string_i128(p.pi.a) << "," << to_string_i128(p.pi.b) << "," << p.norm << ","
                << splitting_name(p.splitting) << "\n";
    } else if (symb->parsed()) {
        CubicValue v = symbol(parse_eisenstein(sym_a), parse_eisenstein(sym_n));
        std::cout << (v.zero ? "0" : v.exponent == 0 ? "1" : v.exponent == 1 ? "w" : "w^2")
                  << "\n";
    } else if (gauss->parsed()) {
        auto g = gauss_sum(parse_eisenstein(gauss_k), parse_eisenstein(gauss_n));
        std::cout.precision(15);
        std::cout << g.value.real() << " " << g.value.imag() << "\n";
    } else if (gbatch->parsed()) {
        auto batch = gauss_batch_cached(gb_limit);
        auto& out = open_out(file, gb_out);
        out.precision(17);
        out << "a,b,norm,re,im\n";
        for (const auto& e : batch)
            out << to_string_i128(e.prime.pi.a) << "," << to_string_i128(e.prime.pi.b) << ","
                << e.prime.norm << "," << e.g1.real() << "," << e.g1.imag() << "\n";
    } else if (lval->parsed()) {
        PrimaryPrime pp = prime_from_string(lv_pi);
        cdouble s = parse_complex(lv_s);
        double tmax = std::max(1.0, std::abs(s.imag()) + 0.5);
        LSeriesHandle h =
            lv_q ? make_dirichlet_handle(pp, false, tmax) : make_hecke_handle(pp, false, tmax);
        cdouble v = hecke_L(h, s);
        std::cout.precision(15);
        std::cout << v.real() << " " << v.imag() << "\n";
    } else if (zeros->parsed()) {
        PrimaryPrime pp = prime_from_string(z_pi);
        LSeriesHandle h = z_q ? make_dirichlet_handle(pp, false, z_T + 1.0)
                              : make_hecke_handle(pp, false, z_T + 1.0);
        auto zl = find_zeros(h, z_T);
        if (!zl.verified) {
            std::cerr << "zero finder failed: " << zl.message << "\n";
            return 2;
        }
        auto& out = open_out(file, z_out);
        out.precision(15);
        out << "ordinate,refined_error\n";
        for (double g : zl.ordinates) out << g << "," << 1e-9 << "\n";
    } else if (mom->parsed()) {
        FamilyOptions opt;
        opt.split_only = m_split_only;
        opt.dump_terms = m_dump;
        cdouble alpha = parse_complex(m_alpha);
        MomentReport r;
        if (m_kind == "ratios") {
            cdouble beta = parse_complex(m_beta.empty() ? m_alpha : m_beta);
            r = m_q ? q_ratios_sum(m_X, alpha, beta, &opt) : ratios_sum(m_X, alpha, beta, &opt);
        } else if (m_kind == "first") {
            r = m_q ? q_first_moment(m_X, alpha, &opt) : first_moment(m_X, alpha, &opt);
        } else if (m_kind == "negative") {
            cdouble beta = m_beta.empty() ? alpha : parse_complex(m_beta);
            r = m_q ? q_negative_moment(m_X, beta, &opt) : negative_moment(m_X, beta, &opt);
        } else if (m_kind == "logderiv") {
            r = m_q ? q_logderiv_moment(m_X, alpha, &opt) : logderiv_moment(m_X, alpha, &opt);
        } else {
            throw std::domain_error("unknown moment kind: " + m_kind);
        }
        if (m_dump) {
            std::cerr << "a,b,norm,weight,re,im\n";
            std::cerr.precision(15);
            for (const auto& t : opt.terms)
                std::cerr << to_string_i128(t.prime.pi.a) << "," << to_string_i128(t.prime.pi.b)
                          << "," << t.prime.norm << "," << t.weight << "," << t.value.real() << ","
                          << t.value.imag() << "\n";
        }
        auto& out = open_out(file, m_out);
        out << r.to_json() << "\n";
        if (!r.flags.empty()) return 2;
    } else if (dens->parsed()) {
        FamilyOptions opt;
        opt.zero_cache_dir = cache_dir();
        MomentReport r =
            d_q ? q_one_level_density(d_X, d_a, &opt) : one_level_density(d_X, d_a, &opt);
        auto& out = open_out(file, d_out);
        out << r.to_json() << "\n";
    } else if (ver->parsed()) {
        auto results = run_acceptance(suite_criteria(v_suite), std::cout);
        int fails = 0;
        for (const auto& r : results) fails += r.pass ? 0 : 1;
        std::cout << (fails == 0 ? "ALL PASS" : "FAILURES: " + std::to_string(fails)) << "\n";
        if (fails) return 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::length_error& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "precondition error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "precondition error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return 2;
    }
}
