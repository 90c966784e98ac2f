#pragma once

#include <string>
#include <vector>

#include "tbk/report_json.hpp"
#include "tbk/verdict.hpp"

namespace tbk {

struct CensusOptions {
    long max_p = 49;
    std::string out_dir;    // empty: in-memory only
    unsigned jobs = 1;      // worker threads, share-nothing
    std::string cache_dir;  // from TBK_CACHE_DIR when set
    AnalyzeOptions analyze;
};

struct CensusResult {
    long max_p = 0;
    std::vector<std::string> labels;       // "p_q", sorted
    std::vector<std::string> report_json;  // serialized documents, same order
    Json summary;
};

// Analyzes every canonical hyperbolic form with p <= max_p. With out_dir set,
// writes one <p>_<q>.json per knot plus summary.json (atomic tmp+rename,
// byte-deterministic). The cache is keyed by (toolkit version, p, q).
CensusResult run_census(const CensusOptions& opt);

// Summary counters extracted from the serialized reports.
Json summarize_reports(long max_p, const std::vector<std::string>& labels,
                       const std::vector<std::string>& docs);

}  // namespace tbk
