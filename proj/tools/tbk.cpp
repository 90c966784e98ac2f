#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "tbk/census.hpp"
#include "tbk/report_json.hpp"
#include "tbk/verdict.hpp"
#include "tbk/version.hpp"

namespace {

// exit codes: 0 ok, 1 theorem contradiction / oracle mismatch,
//             2 invalid input, 3 I/O error
constexpr int kExitOk = 0;
constexpr int kExitContradiction = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitIo = 3;

tbk::SqrtOptions sqrt_options(const std::string& den_bound, long precision_bits) {
    tbk::SqrtOptions opt;
    if (!den_bound.empty()) opt.denominator_bound = tbk::bigint_from_string(den_bound);
    if (precision_bits > 0) opt.max_precision_bits = precision_bits;
    return opt;
}

int cmd_analyze(long p, long q, const std::string& format, bool timings,
                const tbk::AnalyzeOptions& opt) {
    auto t0 = std::chrono::steady_clock::now();
    tbk::KnotReport rep;
    try {
        rep = tbk::analyze(p, q, opt);
    } catch (const tbk::InvalidKnotInput& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitInvalidInput;
    }
    auto t1 = std::chrono::steady_clock::now();

    if (format == "json") {
        tbk::Json j = tbk::report_to_json(rep);
        if (timings) {
            j["timings"] = tbk::Json{
                {"analyze_ms",
                 std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()}};
        }
        std::cout << j.dump(2) << "\n";
    } else if (format == "md") {
        std::cout << tbk::render_markdown(rep);
    } else {
        std::cout << tbk::render_table(rep);
    }
    return rep.contradiction ? kExitContradiction : kExitOk;
}

int cmd_census(long max_p, const std::string& out_dir, unsigned jobs,
               const tbk::AnalyzeOptions& aopt) {
    tbk::CensusOptions opt;
    opt.max_p = max_p;
    opt.out_dir = out_dir;
    opt.jobs = jobs;
    opt.analyze = aopt;
    if (const char* cache = std::getenv("TBK_CACHE_DIR")) opt.cache_dir = cache;

    tbk::CensusResult res;
    try {
        res = tbk::run_census(opt);
    } catch (const tbk::InvalidKnotInput& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::runtime_error& e) {
        std::cerr << "census failed: " << e.what() << "\n";
        return kExitIo;
    }
    std::cout << res.summary.dump(2) << "\n";
    long contradictions = res.summary["contradiction_events"].get<long>();
    return contradictions == 0 ? kExitOk : kExitContradiction;
}

int cmd_oracle(long p) {
    if (p < 3 || p % 2 == 0) {
        std::cerr << "invalid input: p must be odd and at least 3\n";
        return kExitInvalidInput;
    }
    tbk::PolyF2 oracle = tbk::mod2_oracle(p);
    std::cout << "oracle(" << p << ") = " << oracle.to_string() << "\n";
    bool all_match = true;
    for (long q : tbk::hyperbolic_q_values(p)) {
        tbk::RileyWord w = tbk::riley_word(tbk::TwoBridgeForm{p, q, false});
        tbk::RileyPolynomial rp = tbk::riley_polynomial(w);
        tbk::PolyF2 bar = tbk::reduce_and_check_squarefree(rp.lambda);
        bool match = bar == oracle;
        all_match = all_match && match;
        std::cout << "q = " << q << ": " << (match ? "MATCH" : "MISMATCH") << "\n";
    }
    return all_match ? kExitOk : kExitContradiction;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tbk — exact commensurability invariants of 2-bridge knot complements"};
    app.set_version_flag("--version", tbk::kToolkitVersion);
    app.require_subcommand(1);

    std::string den_bound;
    long precision_bits = 0;
    app.add_option("--denominator-bound", den_bound,
                   "rational reconstruction denominator bound (default 2^64)");
    app.add_option("--precision-bits", precision_bits,
                   "max precision of the numeric witness search ladder");

    long p = 0, q = 0;
    std::string format = "json";
    bool timings = false;
    auto* analyze = app.add_subcommand("analyze", "analyze a single knot (p q)");
    analyze->add_option("p", p, "normal form p (odd, >= 3)")->required();
    analyze->add_option("q", q, "normal form q (coprime to p)")->required();
    analyze->add_option("--format", format, "json | md | table")
        ->check(CLI::IsMember({"json", "md", "table"}));
    analyze->add_flag("--timings", timings, "include timings in the JSON document");

    long max_p = 49;
    std::string out_dir;
    unsigned jobs = 1;
    auto* census = app.add_subcommand("census", "analyze all hyperbolic forms with p <= max-p");
    census->add_option("--max-p", max_p, "census bound (inclusive)")->required();
    census->add_option("--out", out_dir, "output directory (one JSON per knot + summary.json)");
    census->add_option("--jobs", jobs, "worker threads");

    long oracle_p = 0;
    auto* oracle = app.add_subcommand("oracle", "mod-2 reconstruction cross-check for one p");
    oracle->add_option("p", oracle_p, "odd p >= 3")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInvalidInput;
    }

    tbk::AnalyzeOptions aopt;
    aopt.sqrt = sqrt_options(den_bound, precision_bits);

    try {
        if (analyze->parsed()) return cmd_analyze(p, q, format, timings, aopt);
        if (census->parsed()) return cmd_census(max_p, out_dir, jobs, aopt);
        if (oracle->parsed()) return cmd_oracle(oracle_p);
    } catch (const tbk::InvalidKnotInput& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitContradiction;
    }
    return kExitOk;
}
