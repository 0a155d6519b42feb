// altseq — exact statistics, tables, generating-function verification and
// Monte Carlo sampling for longest alternating subsequences of permutations.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or validation error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "altseq/counting.hpp"
#include "altseq/errors.hpp"
#include "altseq/montecarlo.hpp"
#include "altseq/permstat.hpp"
#include "altseq/series_identities.hpp"
#include "altseq/sturm.hpp"

using nlohmann::json;

namespace {

int table_cap() {
    if (const char* env = std::getenv("ALTPERM_MAX_N")) {
        try {
            return std::max(0, std::stoi(env));
        } catch (const std::exception&) {
            throw altseq::CapExceeded("ALTPERM_MAX_N is not an integer");
        }
    }
    return 200;
}

void check_cap(int n) {
    int cap = table_cap();
    if (n > cap)
        throw altseq::CapExceeded("n = " + std::to_string(n) + " exceeds the table cap " +
                                  std::to_string(cap) + " (override with ALTPERM_MAX_N)");
}

std::string read_perm_arg(const std::string& arg) {
    if (arg == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    return arg;
}

int run_stat(const std::string& perm_text) {
    auto w = altseq::Permutation::parse(read_perm_arg(perm_text));
    std::cout << "n: " << w.size() << "\n";
    std::cout << "as: " << altseq::as_len(w) << "\n";
    if (w.size() >= 1) {
        auto d = altseq::runs(w);
        std::cout << "runs: " << d.count() << "\n";
        for (size_t i = 0; i < d.runs.size(); ++i) {
            const auto& r = d.runs[i];
            std::cout << "run " << i + 1 << ":";
            for (int p = r.begin; p <= r.end; ++p) std::cout << " " << w[p];
            std::cout << (r.dir == altseq::RunDir::increasing ? " (increasing)" : " (decreasing)")
                      << "\n";
        }
        std::cout << "first_descent: " << (d.first_descent ? "yes" : "no") << "\n";
    } else {
        std::cout << "runs: 0\n";
    }
    std::cout << "descents: {";
    bool first = true;
    for (int i : altseq::descent_set(w)) {
        if (!first) std::cout << ", ";
        std::cout << i;
        first = false;
    }
    std::cout << "}\n";
    std::cout << "is: " << altseq::is_len(w) << "\n";
    return 0;
}

int run_table(int max_n, const std::string& format, const std::string& columns,
              const std::string& out_path) {
    check_cap(max_n);
    bool col_a = columns.find('a') != std::string::npos;
    bool col_b = columns.find('b') != std::string::npos;
    bool col_g = columns.find('g') != std::string::npos;
    if (!col_a && !col_b && !col_g)
        throw altseq::OutOfRange("--columns must select at least one of a,b,g");
    auto t = altseq::build_a_table(max_n);
    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw altseq::Error("cannot open output file " + out_path);
        os = &file;
    }
    if (format == "csv") altseq::export_csv(t, *os, col_a, col_b, col_g);
    else if (format == "json") altseq::export_json(t, *os, col_a, col_b, col_g);
    else throw altseq::OutOfRange("--format must be csv or json");
    return 0;
}

int run_poly(int n, const std::string& kind, bool show_roots) {
    check_cap(n);
    altseq::Poly p;
    if (kind == "T") {
        p = altseq::T_poly(altseq::build_a_table(n), n);
        std::cout << "T_" << n << "(t) = " << p.str() << "\n";
    } else if (kind == "U") {
        auto u = altseq::U_poly(altseq::build_a_table(n), n);
        p = u.u;
        std::cout << "U_" << n << "(t) = " << p.str() << "\n";
        std::cout << "U_" << n << "(-1) = " << altseq::to_string(u.value_at_minus1) << "\n";
    } else if (kind == "G") {
        p = altseq::G_poly(altseq::build_a_table(n), n);
        std::cout << "G_" << n << "(t) = " << p.str() << "\n";
    } else if (kind == "A") {
        p = altseq::eulerian_poly(n);
        std::cout << "A_" << n << "(t) = " << p.str() << "\n";
    } else {
        throw altseq::OutOfRange("--kind must be one of T, U, G, A");
    }
    if (show_roots) {
        auto intervals = altseq::isolate_real_roots(p);
        std::cout << "distinct real roots: " << intervals.size() << "\n";
        auto chain = altseq::SturmChain::build(p);
        for (auto iv : intervals) {
            iv = altseq::refine_root_interval(chain, iv, altseq::BigRat(1, 1024));
            std::cout << "  root in (" << altseq::to_string(iv.lo) << ", "
                      << altseq::to_string(iv.hi) << "]\n";
        }
    }
    return 0;
}

int run_moments(int max_n, int max_j) {
    check_cap(max_n);
    if (max_j < 1 || max_j > 8) throw altseq::OutOfRange("--j must be in 1..8");
    auto t = altseq::build_a_table(max_n);
    std::cout << "n";
    for (int j = 1; j <= max_j; ++j) std::cout << ",nu_" << j;
    std::cout << ",mean_closed,var_closed\n";
    for (int n = 0; n <= max_n; ++n) {
        std::cout << n;
        for (int j = 1; j <= max_j; ++j)
            std::cout << "," << altseq::to_string(altseq::factorial_moment(t, j, n).value);
        std::cout << ",";
        if (n >= 2) std::cout << altseq::to_string(altseq::mean_closed(n));
        std::cout << ",";
        if (n >= 4) std::cout << altseq::to_string(altseq::var_closed(n));
        std::cout << "\n";
    }
    for (int j = 1; j <= max_j; ++j) {
        int thr = altseq::nu_polynomiality_threshold(t, j);
        std::cout << "# nu_" << j << " observed polynomial (degree " << j << ") from n = ";
        if (thr >= 0) std::cout << thr << " within this table\n";
        else std::cout << "? (not observed up to n = " << max_n << ")\n";
    }
    return 0;
}

int run_verify(const std::string& orders, const std::string& suite_name, bool as_json) {
    altseq::SuiteOptions opt;
    if (!orders.empty()) {
        std::istringstream is(orders);
        char comma = 0;
        if (!(is >> opt.order_x >> comma >> opt.order_t) || comma != ',' || opt.order_x < 1 ||
            opt.order_t < 1)
            throw altseq::OutOfRange("--orders expects X,T with positive integers");
    }
    altseq::VerifySuite suite;
    if (suite_name == "all") suite = altseq::VerifySuite::all;
    else if (suite_name == "series") suite = altseq::VerifySuite::series;
    else if (suite_name == "polys") suite = altseq::VerifySuite::polys;
    else if (suite_name == "moments") suite = altseq::VerifySuite::moments;
    else throw altseq::OutOfRange("--suite must be all, series, polys or moments");

    auto reports = altseq::run_verification_suite(suite, opt);
    bool all_pass = true;
    if (as_json) {
        json out = json::array();
        for (const auto& r : reports) {
            json item = {{"name", r.name},
                         {"order_x", r.order_x},
                         {"order_t", r.order_t},
                         {"pass", r.pass()}};
            if (r.first_nonzero) {
                auto [n, k, res] = *r.first_nonzero;
                item["first_nonzero"] = {{"n", n}, {"k", k}, {"residual", altseq::to_string(res)}};
            }
            if (!r.note.empty()) item["note"] = r.note;
            out.push_back(item);
            all_pass = all_pass && r.pass();
        }
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& r : reports) {
            std::cout << r.format() << "\n";
            all_pass = all_pass && r.pass();
        }
    }
    return all_pass ? 0 : 1;
}

int run_sample(int n, long long count, std::uint64_t seed, std::uint64_t stream,
               const std::string& sigma) {
    altseq::RngSeed rs{seed, stream};
    if (!sigma.empty()) {
        auto word = altseq::DescentWord::parse(sigma);
        auto est = altseq::estimate_E_sigma(n, word, count, rs);
        json out = {{"n", n},          {"count", est.count}, {"seed", seed},
                    {"stream", stream}, {"sigma", word.str()}, {"mean", est.mean},
                    {"se", est.se}};
        std::cout << out.dump() << "\n";
        return 0;
    }
    if (n < 2 || count < 1000)
        throw altseq::OutOfRange("sampling as-statistics needs n >= 2 and count >= 1000");
    auto stats = altseq::sample_as_stats(n, count, rs);
    std::cout << "value,count\n";
    for (const auto& [value, cnt] : stats.histogram) std::cout << value << "," << cnt << "\n";
    json out = {{"n", stats.n},        {"count", stats.count},   {"seed", seed},
                {"stream", stream},    {"mean", stats.mean},     {"variance", stats.variance},
                {"se_mean", stats.se_mean},
                {"ks_distance", altseq::ks_distance_to_gaussian(stats)}};
    std::cout << out.dump() << "\n";
    return 0;
}

int run_avoid(int n, int k, const std::string& descents) {
    std::set<int> S;
    if (!descents.empty()) {
        std::string buf = descents;
        for (auto& c : buf)
            if (c == ',') c = ' ';
        std::istringstream is(buf);
        int x;
        while (is >> x) S.insert(x);
        if (!is.eof()) throw altseq::OutOfRange("--descents expects comma-separated integers");
    }
    auto patterns = altseq::patterns_with_descent_set(k, S);
    auto count = altseq::count_avoiders_descent_class(n, k, S);
    std::cout << "patterns: " << patterns.size() << "\n";
    std::cout << "count: " << altseq::to_string(count) << "\n";
    return 0;
}

int run_lensigma(const std::string& sigma, const std::string& perm_text) {
    auto word = altseq::DescentWord::parse(sigma);
    auto w = altseq::Permutation::parse(read_perm_arg(perm_text));
    std::cout << "len_" << word.str() << ": " << altseq::len_sigma(w, word) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"longest alternating subsequence statistics, exact tables and verification"};
    app.require_subcommand(1);
    int rc = 0;

    std::string stat_perm;
    auto* stat = app.add_subcommand("stat", "statistics of one permutation");
    stat->add_option("permutation", stat_perm, "one-line notation, or - for stdin")->required();
    stat->callback([&] { rc = run_stat(stat_perm); });

    int table_n = 8;
    std::string table_format = "csv", table_columns = "a,b,g", table_out;
    auto* table = app.add_subcommand("table", "exact a/b/g counting tables");
    table->add_option("--max-n", table_n, "largest n")->required();
    table->add_option("--format", table_format, "csv or json");
    table->add_option("--columns", table_columns, "subset of a,b,g");
    table->add_option("--out", table_out, "output file (default stdout)");
    table->callback([&] { rc = run_table(table_n, table_format, table_columns, table_out); });

    int poly_n = 6;
    std::string poly_kind = "T";
    bool poly_roots = false;
    auto* poly = app.add_subcommand("poly", "T_n, U_n, G_n or Eulerian polynomials");
    poly->add_option("--n", poly_n, "index n")->required();
    poly->add_option("--kind", poly_kind, "T, U, G or A (Eulerian)");
    poly->add_flag("--roots", poly_roots, "isolate the real roots");
    poly->callback([&] { rc = run_poly(poly_n, poly_kind, poly_roots); });

    int moments_n = 12, moments_j = 4;
    auto* moments = app.add_subcommand("moments", "exact factorial moments and closed forms");
    moments->add_option("--max-n", moments_n, "largest n");
    moments->add_option("--j", moments_j, "largest moment order");
    moments->callback([&] { rc = run_moments(moments_n, moments_j); });

    std::string verify_orders, verify_suite = "all";
    bool verify_json = false;
    auto* verify = app.add_subcommand("verify", "run the exact identity suite");
    verify->add_option("--orders", verify_orders, "truncation orders X,T (default 12,12)");
    verify->add_option("--suite", verify_suite, "all, series, polys or moments");
    verify->add_flag("--json", verify_json, "machine-readable report");
    verify->callback([&] { rc = run_verify(verify_orders, verify_suite, verify_json); });

    int sample_n = 100;
    long long sample_count = 10000;
    std::uint64_t sample_seed = 1, sample_stream = 0;
    std::string sample_sigma;
    auto* sample = app.add_subcommand("sample", "seeded Monte Carlo sampling of S_n");
    sample->add_option("--n", sample_n, "permutation size")->required();
    sample->add_option("--count", sample_count, "number of samples");
    sample->add_option("--seed", sample_seed, "RNG seed");
    sample->add_option("--stream", sample_stream, "RNG stream id");
    sample->add_option("--sigma", sample_sigma, "estimate E_sigma for this U/D word instead");
    sample->callback([&] {
        rc = run_sample(sample_n, sample_count, sample_seed, sample_stream, sample_sigma);
    });

    int avoid_n = 6, avoid_k = 3;
    std::string avoid_descents;
    auto* avoid = app.add_subcommand("avoid", "count avoiders of a descent class of patterns");
    avoid->add_option("--n", avoid_n, "permutation size (<= 12)")->required();
    avoid->add_option("--k", avoid_k, "pattern size (1..6)")->required();
    avoid->add_option("--descents", avoid_descents, "descent set of the patterns, e.g. 1,3");
    avoid->callback([&] { rc = run_avoid(avoid_n, avoid_k, avoid_descents); });

    std::string ls_sigma, ls_perm;
    auto* lensigma = app.add_subcommand("lensigma", "longest sigma-patterned subsequence");
    lensigma->add_option("--sigma", ls_sigma, "U/D word")->required();
    lensigma->add_option("permutation", ls_perm, "one-line notation, or - for stdin")->required();
    lensigma->callback([&] { rc = run_lensigma(ls_sigma, ls_perm); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const altseq::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
