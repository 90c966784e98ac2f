#include "tbk/census.hpp"

#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "tbk/version.hpp"

namespace tbk {

namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void atomic_write(const fs::path& path, const std::string& bytes) {
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << bytes;
        if (!out.flush()) throw std::runtime_error("write failed for " + tmp.string());
    }
    fs::rename(tmp, path);
}

}  // namespace

Json summarize_reports(long max_p, const std::vector<std::string>& labels,
                       const std::vector<std::string>& docs) {
    long squarefree_violations = 0, degree_violations = 0, oracle_mismatches = 0;
    long spectrum_mismatches = 0, longitude_violations = 0, contradictions = 0;
    long factor_count = 0, disc_odd = 0, qi_absent = 0;
    long hs_certified = 0, hs_inconclusive = 0, hs_arith = 0;

    for (const auto& doc : docs) {
        Json j = Json::parse(doc);
        bool mod2_ok = j.contains("mod2") && j["mod2"]["squarefree"].get<bool>();
        if (!mod2_ok) ++squarefree_violations;
        if (j.contains("mod2") && !j["mod2"]["oracle_match"].get<bool>()) ++oracle_mismatches;
        if (j.contains("mod2") && !j["mod2"]["phi_grouping"].get<bool>()) ++spectrum_mismatches;
        if (j.contains("riley")) {
            long p = j["knot"]["p"].get<long>();
            if (j["riley"]["degree"].get<long>() != (p - 1) / 2) ++degree_violations;
        } else {
            ++degree_violations;
        }
        if (!j["events"].empty()) ++contradictions;
        if (j.contains("factors")) {
            for (const auto& f : j["factors"]) {
                ++factor_count;
                if (f["disc_odd"].get<bool>()) ++disc_odd;
                if (f["qi_status"].get<std::string>() == "CertifiedAbsent") ++qi_absent;
                const auto& cusp = f["cusp"];
                if (!(cusp["parabolic"].get<bool>() && cusp["commutes_with_x1"].get<bool>() &&
                      cusp["g0_integral"].get<bool>()))
                    ++longitude_violations;
            }
        }
        std::string hs = j["hidden_symmetries"]["status"].get<std::string>();
        if (hs == "NoHiddenSymmetries(certified)") ++hs_certified;
        else if (hs == "ObstructionInconclusive") ++hs_inconclusive;
        else if (hs == "ArithmeticExcluded(figure-eight)") ++hs_arith;
    }

    Json s;
    s["schema_version"] = kSchemaVersion;
    s["toolkit_version"] = kToolkitVersion;
    s["max_p"] = max_p;
    s["knot_count"] = labels.size();
    s["squarefree_violations"] = squarefree_violations;
    s["degree_law_violations"] = degree_violations;
    s["oracle_mismatches"] = oracle_mismatches;
    s["spectrum_mismatches"] = spectrum_mismatches;
    s["longitude_violations"] = longitude_violations;
    s["contradiction_events"] = contradictions;
    s["factor_count"] = factor_count;
    s["disc_odd_count"] = disc_odd;
    s["qi_certified_absent_count"] = qi_absent;
    s["hidden_symmetries"] = Json{{"certified", hs_certified},
                                  {"inconclusive", hs_inconclusive},
                                  {"arithmetic_excluded", hs_arith}};
    s["knots"] = labels;
    return s;
}

CensusResult run_census(const CensusOptions& opt) {
    auto knots = enumerate_census(opt.max_p);

    CensusResult res;
    res.max_p = opt.max_p;
    res.labels.reserve(knots.size());
    for (const auto& k : knots) res.labels.push_back(k.label());
    res.report_json.assign(knots.size(), {});

    fs::path cache_root;
    if (!opt.cache_dir.empty()) {
        cache_root = fs::path(opt.cache_dir) / kToolkitVersion;
        fs::create_directories(cache_root);
    }

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= knots.size()) break;
            const auto& k = knots[i];
            if (!cache_root.empty()) {
                fs::path cached = cache_root / (k.label() + ".json");
                if (fs::exists(cached)) {
                    res.report_json[i] = read_file(cached);
                    continue;
                }
            }
            KnotReport rep = analyze(k.p, k.q, opt.analyze);
            res.report_json[i] = render_json(rep);
            if (!cache_root.empty())
                atomic_write(cache_root / (k.label() + ".json"), res.report_json[i]);
        }
    };

    unsigned jobs = opt.jobs == 0 ? 1 : opt.jobs;
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    res.summary = summarize_reports(opt.max_p, res.labels, res.report_json);

    if (!opt.out_dir.empty()) {
        fs::create_directories(opt.out_dir);
        for (std::size_t i = 0; i < knots.size(); ++i)
            atomic_write(fs::path(opt.out_dir) / (res.labels[i] + ".json"), res.report_json[i]);
        atomic_write(fs::path(opt.out_dir) / "summary.json", res.summary.dump(2) + "\n");
    }
    return res;
}

}  // namespace tbk
