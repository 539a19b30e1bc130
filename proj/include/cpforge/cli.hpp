#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cpforge/cockspinch.hpp"
#include "cpforge/heuristics.hpp"

namespace cpforge::cli {

inline constexpr const char* kEngineVersion = "census-v1";

struct Rational {
    i64 num;
    i64 den;
};

// "9/5" or a decimal like "1.8"; always reduced.
Rational parse_rho(const std::string& s);

// "3..18", "3,5,7", or "3".
std::vector<i64> parse_int_list(const std::string& s);

// "5:500000".
std::pair<u64, u64> parse_r_range(const std::string& s);

struct TableSpec {
    std::vector<u64> k_list;
    std::vector<i64> d_list;
    i64 rho_num = 2;
    i64 rho_den = 1;
    u64 r_min = 5;
    u64 r_max = 100000;
};

struct CellResult {
    u64 k = 0;
    i64 D = 0;
    bool excluded = false;
    int e = 1;
    bool has_counts = false;
    cockspinch::CountResult counts;
    bool has_pred = false;
    heuristics::Prediction pred;
};

// Append-only census result cache, one record per line:
// "k,D,num,den,rmin,rmax \t {json counts} \t engine_version".
class ResultCache {
  public:
    explicit ResultCache(std::string dir);
    std::optional<cockspinch::CountResult> lookup(
        const cockspinch::SearchParams& p) const;
    void store(const cockspinch::SearchParams& p,
               const cockspinch::CountResult& c);

    static std::string key_of(const cockspinch::SearchParams& p);

  private:
    std::string file_;
    std::map<std::string, cockspinch::CountResult> entries_;
    bool writable_ = true;
};

// Resolves the cache directory: explicit flag, then CPFORGE_CACHE, then
// ~/.cache/cpforge. Empty only if no home directory exists either.
std::string resolve_cache_dir(const std::string& flag_value);

// Flag value, then CPFORGE_THREADS, then hardware parallelism.
int resolve_threads(int flag_value);

// Runs the census (and optionally predictions) over the grid. Parallel
// across cells when there are many, inside a cell otherwise; counts are
// identical either way.
std::vector<CellResult> run_cells(const TableSpec& spec, bool want_counts,
                                  bool want_pred, int threads,
                                  ResultCache* cache);

struct CommandResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

struct GridOptions {
    std::string k = "3";
    std::string d = "1";
    std::string rho = "2";
    std::string r = "5:100000";
    std::string format = "md";
    int threads = 0;
    std::string cache_dir;
    bool no_cache = false;
};

struct GenerateOptions {
    i64 k = 3;
    i64 d = 1;
    int rbits = 20;
    std::string rho = "2";
    u64 seed = 1;
    int budget = 256;
};

CommandResult cmd_count(const GridOptions& opt);
CommandResult cmd_predict(const GridOptions& opt);
CommandResult cmd_compare(const GridOptions& opt);
CommandResult cmd_generate(const GenerateOptions& opt);
CommandResult cmd_curve(const GenerateOptions& opt);

// Full argv-level entry point; returns the process exit code (0 success,
// 1 budget or construction failure, 2 usage).
int run_cli(int argc, const char* const* argv);

}  // namespace cpforge::cli
