#include "cpforge/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cpforge/cmcurves.hpp"
#include "cpforge/quadfield.hpp"

namespace cpforge::cli {

namespace {

using cockspinch::SearchParams;
using cockspinch::u128_to_string;

constexpr std::pair<int, int> kExcludedPairs[] = {{3, 3}, {4, 1}, {6, 3}};

bool is_excluded(u64 k, i64 D) {
    for (auto [ek, ed] : kExcludedPairs)
        if ((u64)ek == k && (i64)ed == D) return true;
    return false;
}

i64 round_half_away(double x) { return (i64)std::llround(x); }

double rho_value_of(const cockspinch::Triple& tr) {
    return std::log((double)tr.q) / std::log((double)tr.r);
}

std::string format_rho(i64 num, i64 den) {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

std::string format_fixed4(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

}  // namespace

Rational parse_rho(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rho");
    i64 num = 0, den = 1;
    auto slash = s.find('/');
    auto dot = s.find('.');
    if (slash != std::string::npos) {
        num = std::stoll(s.substr(0, slash));
        den = std::stoll(s.substr(slash + 1));
    } else if (dot != std::string::npos) {
        std::string whole = s.substr(0, dot);
        std::string frac = s.substr(dot + 1);
        if (frac.empty() || frac.size() > 9)
            throw std::invalid_argument("bad decimal rho: " + s);
        num = std::stoll(whole + frac);
        den = 1;
        for (size_t i = 0; i < frac.size(); ++i) den *= 10;
    } else {
        num = std::stoll(s);
    }
    if (num <= 0 || den <= 0) throw std::invalid_argument("rho must be positive");
    i64 g = std::gcd(num, den);
    return {num / g, den / g};
}

std::vector<i64> parse_int_list(const std::string& s) {
    std::vector<i64> out;
    auto range_pos = s.find("..");
    if (range_pos != std::string::npos) {
        i64 a = std::stoll(s.substr(0, range_pos));
        i64 b = std::stoll(s.substr(range_pos + 2));
        if (b < a) throw std::invalid_argument("descending range: " + s);
        for (i64 v = a; v <= b; ++v) out.push_back(v);
        return out;
    }
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoll(item));
    }
    if (out.empty()) throw std::invalid_argument("empty list: " + s);
    return out;
}

std::pair<u64, u64> parse_r_range(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("r range must look like min:max");
    i64 lo = std::stoll(s.substr(0, colon));
    i64 hi = std::stoll(s.substr(colon + 1));
    if (lo < 0 || hi < lo) throw std::invalid_argument("bad r range: " + s);
    return {(u64)lo, (u64)hi};
}

std::string ResultCache::key_of(const SearchParams& p) {
    std::ostringstream os;
    os << p.k << ',' << p.D << ',' << p.rho_num << ',' << p.rho_den << ','
       << p.r_min << ',' << p.r_max;
    return os.str();
}

ResultCache::ResultCache(std::string dir) {
    if (dir.empty()) {
        writable_ = false;
        return;
    }
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    file_ = dir + "/census.tsv";
    std::ifstream in(file_);
    std::string line;
    while (std::getline(in, line)) {
        auto tab1 = line.find('\t');
        auto tab2 = line.rfind('\t');
        if (tab1 == std::string::npos || tab2 <= tab1) continue;
        if (line.substr(tab2 + 1) != kEngineVersion) continue;
        try {
            auto j = nlohmann::json::parse(
                line.substr(tab1 + 1, tab2 - tab1 - 1));
            cockspinch::CountResult c{j.at("n1").get<u64>(),
                                      j.at("n2").get<u64>(),
                                      j.at("n3").get<u64>()};
            entries_[line.substr(0, tab1)] = c;
        } catch (const std::exception&) {
            continue;
        }
    }
}

std::optional<cockspinch::CountResult> ResultCache::lookup(
    const SearchParams& p) const {
    auto it = entries_.find(key_of(p));
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void ResultCache::store(const SearchParams& p,
                        const cockspinch::CountResult& c) {
    std::string key = key_of(p);
    if (entries_.count(key)) return;
    entries_[key] = c;
    if (!writable_) return;
    std::ofstream out(file_, std::ios::app);
    if (!out) return;
    nlohmann::json j{{"n1", c.n1}, {"n2", c.n2}, {"n3", c.n3}};
    out << key << '\t' << j.dump() << '\t' << kEngineVersion << '\n';
}

std::string resolve_cache_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("CPFORGE_CACHE"); env && *env)
        return env;
    if (const char* home = std::getenv("HOME"); home && *home)
        return std::string(home) + "/.cache/cpforge";
    return {};
}

int resolve_threads(int flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("CPFORGE_THREADS"); env && *env) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

std::vector<CellResult> run_cells(const TableSpec& spec, bool want_counts,
                                  bool want_pred, int threads,
                                  ResultCache* cache) {
    size_t nk = spec.k_list.size(), nd = spec.d_list.size();
    std::vector<CellResult> cells(nk * nd);
    for (size_t i = 0; i < nk; ++i)
        for (size_t j = 0; j < nd; ++j) {
            auto& cell = cells[i * nd + j];
            cell.k = spec.k_list[i];
            cell.D = spec.d_list[j];
            cell.excluded = is_excluded(cell.k, cell.D);
            cell.e = quadfield::e_factor(cell.k, cell.D);
        }

    if (want_counts) {
        i64 n = (i64)cells.size();
        bool cells_parallel = n >= 2 * threads;
        std::vector<size_t> missing;
        for (size_t idx = 0; idx < cells.size(); ++idx) {
            SearchParams p{cells[idx].k, cells[idx].D, spec.rho_num,
                           spec.rho_den, spec.r_min, spec.r_max};
            if (cache) {
                if (auto hit = cache->lookup(p)) {
                    cells[idx].counts = *hit;
                    cells[idx].has_counts = true;
                    continue;
                }
            }
            missing.push_back(idx);
        }
        i64 nm = (i64)missing.size();
        if (cells_parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
            for (i64 m = 0; m < nm; ++m) {
                auto& cell = cells[missing[(size_t)m]];
                SearchParams p{cell.k, cell.D, spec.rho_num, spec.rho_den,
                               spec.r_min, spec.r_max};
                cell.counts = cockspinch::count_triples(p, 1);
                cell.has_counts = true;
            }
        } else {
            for (i64 m = 0; m < nm; ++m) {
                auto& cell = cells[missing[(size_t)m]];
                SearchParams p{cell.k, cell.D, spec.rho_num, spec.rho_den,
                               spec.r_min, spec.r_max};
                cell.counts = cockspinch::count_triples(p, threads);
                cell.has_counts = true;
            }
        }
        if (cache) {
            for (size_t idx : missing) {
                auto& cell = cells[idx];
                SearchParams p{cell.k, cell.D, spec.rho_num, spec.rho_den,
                               spec.r_min, spec.r_max};
                cache->store(p, cell.counts);
            }
        }
    }

    if (want_pred) {
        double rho = (double)spec.rho_num / (double)spec.rho_den;
        for (auto& cell : cells) {
            cell.pred = heuristics::predicted_count(
                cell.k, cell.D, rho, (double)spec.r_min, (double)spec.r_max);
            cell.has_pred = true;
        }
    }
    return cells;
}

namespace {

TableSpec spec_from_options(const GridOptions& opt) {
    TableSpec spec;
    for (i64 k : parse_int_list(opt.k)) {
        if (k < 3) throw std::invalid_argument("k must be at least 3");
        spec.k_list.push_back((u64)k);
    }
    spec.d_list = parse_int_list(opt.d);
    auto rho = parse_rho(opt.rho);
    spec.rho_num = rho.num;
    spec.rho_den = rho.den;
    std::tie(spec.r_min, spec.r_max) = parse_r_range(opt.r);
    // Validate each cell's parameters up front.
    for (u64 k : spec.k_list)
        for (i64 d : spec.d_list)
            cockspinch::validate_params(
                {k, d, spec.rho_num, spec.rho_den, spec.r_min, spec.r_max});
    if (opt.format != "md" && opt.format != "csv")
        throw std::invalid_argument("format must be md or csv");
    return spec;
}

const CellResult& cell_at(const std::vector<CellResult>& cells, size_t nd,
                          size_t i, size_t j) {
    return cells[i * nd + j];
}

std::string csv_rows(const TableSpec& spec,
                     const std::vector<CellResult>& cells, bool with_counts,
                     bool with_pred, bool blank_excluded) {
    std::ostringstream os;
    os << "k,D,rho,r_min,r_max,n1,n2,n3,i,i1,i2,i3,e,excluded\n";
    size_t nd = spec.d_list.size();
    for (size_t i = 0; i < spec.k_list.size(); ++i) {
        for (size_t j = 0; j < nd; ++j) {
            const auto& c = cell_at(cells, nd, i, j);
            bool blank = blank_excluded && c.excluded;
            os << c.k << ',' << c.D << ','
               << format_rho(spec.rho_num, spec.rho_den) << ',' << spec.r_min
               << ',' << spec.r_max << ',';
            if (with_counts && c.has_counts && !blank)
                os << c.counts.n1 << ',' << c.counts.n2 << ',' << c.counts.n3;
            else
                os << ",,";
            os << ',';
            if (with_pred && c.has_pred && !blank)
                os << format_fixed4(c.pred.I) << ','
                   << format_fixed4(c.pred.I1) << ','
                   << format_fixed4(c.pred.I2) << ','
                   << format_fixed4(c.pred.I3);
            else
                os << ",,,";
            os << ',' << c.e << ',' << (c.excluded ? "true" : "false") << '\n';
        }
    }
    return os.str();
}

std::string md_header_row(const std::vector<i64>& d_list) {
    std::ostringstream os;
    os << "| k \\ D |";
    for (i64 d : d_list) os << ' ' << d << " |";
    os << "\n|---|";
    for (size_t j = 0; j < d_list.size(); ++j) os << "---|";
    os << '\n';
    return os.str();
}

std::string range_caption(const TableSpec& spec) {
    std::ostringstream os;
    os << "rho = " << format_rho(spec.rho_num, spec.rho_den) << ", r in ["
       << spec.r_min << ", " << spec.r_max << "]";
    return os.str();
}

}  // namespace

CommandResult cmd_count(const GridOptions& opt) {
    CommandResult res;
    TableSpec spec;
    try {
        spec = spec_from_options(opt);
    } catch (const std::exception& ex) {
        res.exit_code = 2;
        res.err = std::string("usage error: ") + ex.what() + "\n";
        return res;
    }
    int threads = resolve_threads(opt.threads);
    std::optional<ResultCache> cache;
    if (!opt.no_cache) cache.emplace(resolve_cache_dir(opt.cache_dir));
    std::vector<CellResult> cells;
    try {
        cells = run_cells(spec, true, false, threads,
                          cache ? &*cache : nullptr);
    } catch (const std::exception& ex) {
        res.exit_code = 2;
        res.err = std::string("usage error: ") + ex.what() + "\n";
        return res;
    }
    size_t nd = spec.d_list.size();
    std::ostringstream os;
    if (opt.format == "csv") {
        os << csv_rows(spec, cells, true, false, false);
    } else {
        const char* names[3] = {"N1", "N2", "N3"};
        for (int which = 0; which < 3; ++which) {
            os << "## " << names[which] << "  (" << range_caption(spec)
               << ")\n\n";
            os << md_header_row(spec.d_list);
            for (size_t i = 0; i < spec.k_list.size(); ++i) {
                os << "| " << spec.k_list[i] << " |";
                for (size_t j = 0; j < nd; ++j) {
                    const auto& c = cell_at(cells, nd, i, j);
                    if (c.excluded) {
                        os << "  |";
                        continue;
                    }
                    u64 v = which == 0   ? c.counts.n1
                            : which == 1 ? c.counts.n2
                                         : c.counts.n3;
                    os << ' ' << v << " |";
                }
                os << '\n';
            }
            os << '\n';
        }
    }
    res.out = os.str();
    return res;
}

CommandResult cmd_predict(const GridOptions& opt) {
    CommandResult res;
    TableSpec spec;
    try {
        spec = spec_from_options(opt);
    } catch (const std::exception& ex) {
        res.exit_code = 2;
        res.err = std::string("usage error: ") + ex.what() + "\n";
        return res;
    }
    std::vector<CellResult> cells;
    try {
        cells = run_cells(spec, false, true, 1, nullptr);
    } catch (const std::exception& ex) {
        res.exit_code = 2;
        res.err = std::string("usage error: ") + ex.what() + "\n";
        return res;
    }
    size_t nd = spec.d_list.size();
    std::ostringstream os;
    if (opt.format == "csv") {
        os << csv_rows(spec, cells, false, true, false);
    } else {
        os << "## Predictions  (" << range_caption(spec) << ")\n\n";
        os << "| row |";
        for (i64 d : spec.d_list) os << ' ' << d << " |";
        os << "\n|---|";
        for (size_t j = 0; j < nd; ++j) os << "---|";
        os << '\n';
        // Header rows are k-independent: I1 and the ratio-scaled I2/I3.
        const char* names[3] = {"I1", "I2", "I3"};
        for (int which = 0; which < 3; ++which) {
            os << "| " << names[which] << " |";
            for (size_t j = 0; j < nd; ++j) {
                const auto& p = cell_at(cells, nd, 0, j).pred;
                double v = which == 0   ? p.I1
                           : which == 1 ? p.ratio2 * p.I1
                                        : p.ratio3 * p.I1;
                os << ' ' << round_half_away(v) << " |";
            }
            os << '\n';
        }
        os << "\n### I per cell (doubled where e(k,D) = 2)\n\n";
        os << md_header_row(spec.d_list);
        for (size_t i = 0; i < spec.k_list.size(); ++i) {
            os << "| " << spec.k_list[i] << " |";
            for (size_t j = 0; j < nd; ++j) {
                const auto& c = cell_at(cells, nd, i, j);
                os << ' ' << round_half_away(c.pred.I) << " |";
            }
            os << '\n';
        }
        os << '\n';
    }
    res.out = os.str();
    return res;
}

CommandResult cmd_compare(const GridOptions& opt) {
    CommandResult res;
    TableSpec spec;
    try {
        spec = spec_from_options(opt);
    } catch (const std::exception& ex) {
        res.exit_code = 2;
        res.err = std::string("usage error: ") + ex.what() + "\n";
        return res;
    }
    int threads = resolve_threads(opt.threads);
    std::optional<ResultCache> cache;
    if (!opt.no_cache) cache.emplace(resolve_cache_dir(opt.cache_dir));
    std::vector<CellResult> cells;
    try {
        cells = run_cells(spec, true, true, threads,
                          cache ? &*cache : nullptr);
    } catch (const std::exception& ex) {
        res.exit_code = 2;
        res.err = std::string("usage error: ") + ex.what() + "\n";
        return res;
    }
    size_t nd = spec.d_list.size();
    size_t nk = spec.k_list.size();

    std::vector<double> avg_obs(nd, 0.0);
    std::vector<size_t> avg_cnt(nd, 0);
    for (size_t j = 0; j < nd; ++j) {
        for (size_t i = 0; i < nk; ++i) {
            const auto& c = cell_at(cells, nd, i, j);
            if (c.excluded) continue;
            double v = (double)c.counts.n1;
            avg_obs[j] += c.e == 2 ? v / 2.0 : v;
            ++avg_cnt[j];
        }
        if (avg_cnt[j]) avg_obs[j] /= (double)avg_cnt[j];
    }

    std::vector<std::string> flags;
    double rho = (double)spec.rho_num / (double)spec.rho_den;
    for (size_t i = 0; i < nk; ++i)
        for (size_t j = 0; j < nd; ++j) {
            const auto& c = cell_at(cells, nd, i, j);
            if (c.k == 12 && c.D == 3 && rho <= 1.25 && !c.excluded) {
                std::ostringstream f;
                f << "flag: (k=12, D=3) at rho = "
                  << format_rho(spec.rho_num, spec.rho_den)
                  << ": predicted I = " << round_half_away(c.pred.I)
                  << " far below observed N1 = " << c.counts.n1
                  << "; the complete Barreto-Naehrig family sits near "
                     "rho-value 1 and dominates this range";
                flags.push_back(f.str());
            }
        }

    std::ostringstream os;
    if (opt.format == "csv") {
        os << csv_rows(spec, cells, true, true, true);
        for (size_t j = 0; j < nd; ++j) {
            os << "# avg,D=" << spec.d_list[j]
               << ",observed=" << format_fixed4(avg_obs[j])
               << ",predicted_i1="
               << format_fixed4(cell_at(cells, nd, 0, j).pred.I1)
               << ",ratio="
               << format_fixed4(avg_obs[j] /
                                cell_at(cells, nd, 0, j).pred.I1)
               << '\n';
        }
        for (const auto& f : flags) os << "# " << f << '\n';
    } else {
        os << "## Observed N1 vs predicted I  (" << range_caption(spec)
           << ")\n\n";
        os << "Cells where e(k,D) = 2 are marked `e2` and count with weight "
              "1/2 in the average; the pairs (3,3), (4,1), (6,3) are left "
              "blank.\n\n";
        os << md_header_row(spec.d_list);
        os << "| I1 |";
        for (size_t j = 0; j < nd; ++j)
            os << ' ' << round_half_away(cell_at(cells, nd, 0, j).pred.I1)
               << " |";
        os << '\n';
        for (size_t i = 0; i < nk; ++i) {
            os << "| " << spec.k_list[i] << " |";
            for (size_t j = 0; j < nd; ++j) {
                const auto& c = cell_at(cells, nd, i, j);
                if (c.excluded) {
                    os << "  |";
                } else {
                    os << ' ' << c.counts.n1;
                    if (c.e == 2) os << " e2";
                    os << " |";
                }
            }
            os << '\n';
        }
        os << "| Avg |";
        for (size_t j = 0; j < nd; ++j)
            os << ' ' << round_half_away(avg_obs[j]) << " |";
        os << '\n';
        os << "| Avg/I1 |";
        for (size_t j = 0; j < nd; ++j)
            os << ' '
               << format_fixed4(avg_obs[j] /
                                cell_at(cells, nd, 0, j).pred.I1)
               << " |";
        os << '\n';
        os << '\n';
        for (const auto& f : flags) os << f << '\n';
    }
    res.out = os.str();
    return res;
}

CommandResult cmd_generate(const GenerateOptions& opt) {
    CommandResult res;
    std::optional<cockspinch::Triple> tr;
    try {
        auto rho = parse_rho(opt.rho);
        tr = cockspinch::generate_one((u64)opt.k, opt.d, opt.rbits, rho.num,
                                      rho.den, opt.seed, opt.budget);
    } catch (const std::exception& ex) {
        res.exit_code = 2;
        res.err = std::string("usage error: ") + ex.what() + "\n";
        return res;
    }
    if (!tr) {
        res.exit_code = 1;
        res.err = "no parameters found within the attempt budget; raise "
                  "--budget or relax --rho\n";
        return res;
    }
    std::ostringstream os;
    double rho_value = rho_value_of(*tr);
    os << "r=" << tr->r << '\n'
       << "t=" << tr->t << '\n'
       << "u=" << tr->u_abs << '\n'
       << "q=" << u128_to_string(tr->q) << '\n'
       << "k=" << tr->k << '\n'
       << "D=" << tr->D << '\n'
       << "rho_value=" << format_fixed4(rho_value) << '\n';
    res.out = os.str();
    return res;
}

CommandResult cmd_curve(const GenerateOptions& opt) {
    CommandResult res;
    try {
        if (quadfield::class_number(opt.d) != 1) {
            res.exit_code = 2;
            res.err = "usage error: --d must have class number one for "
                      "curve construction\n";
            return res;
        }
    } catch (const std::exception& ex) {
        res.exit_code = 2;
        res.err = std::string("usage error: ") + ex.what() + "\n";
        return res;
    }
    std::optional<cockspinch::Triple> tr;
    try {
        auto rho = parse_rho(opt.rho);
        tr = cockspinch::generate_one((u64)opt.k, opt.d, opt.rbits, rho.num,
                                      rho.den, opt.seed, opt.budget);
    } catch (const std::exception& ex) {
        res.exit_code = 2;
        res.err = std::string("usage error: ") + ex.what() + "\n";
        return res;
    }
    if (!tr) {
        res.exit_code = 1;
        res.err = "no parameters found within the attempt budget\n";
        return res;
    }
    try {
        auto curve = cmcurves::build_curve(*tr);
        double rho_value = rho_value_of(*tr);
        std::ostringstream os;
        os << "r=" << tr->r << '\n'
           << "t=" << tr->t << '\n'
           << "u=" << tr->u_abs << '\n'
           << "q=" << u128_to_string(tr->q) << '\n'
           << "k=" << tr->k << '\n'
           << "D=" << tr->D << '\n'
           << "rho_value=" << format_fixed4(rho_value) << '\n'
           << "a4=" << curve.a4 << '\n'
           << "a6=" << curve.a6 << '\n'
           << "order=" << curve.order << '\n'
           << "j=" << curve.j << '\n';
        res.out = os.str();
    } catch (const std::exception& ex) {
        res.exit_code = 1;
        res.err = std::string("curve construction failed: ") + ex.what() +
                  "\n";
        return res;
    }
    return res;
}

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"Cocks-Pinch pairing-friendly parameter forge"};
    app.require_subcommand(1);

    GridOptions grid;
    GenerateOptions gen;

    auto add_grid_flags = [&](CLI::App* sub) {
        sub->add_option("--k", grid.k, "embedding degrees: 3..18 or 3,5,7");
        sub->add_option("--d", grid.d, "CM discriminants: list or range");
        sub->add_option("--rho", grid.rho, "rho bound: 9/5 or 1.8");
        sub->add_option("--r", grid.r, "prime range min:max");
        sub->add_option("--format", grid.format, "md or csv");
        sub->add_option("--threads", grid.threads, "worker count");
        sub->add_option("--cache-dir", grid.cache_dir, "census cache directory");
        sub->add_flag("--no-cache", grid.no_cache, "recompute everything");
    };
    auto add_gen_flags = [&](CLI::App* sub) {
        sub->add_option("--k", gen.k, "embedding degree")->required();
        sub->add_option("--d", gen.d, "CM discriminant")->required();
        sub->add_option("--rbits", gen.rbits, "bit length of r");
        sub->add_option("--rho", gen.rho, "maximum rho-value");
        sub->add_option("--seed", gen.seed, "PRNG seed");
        sub->add_option("--budget", gen.budget, "sampling attempt budget");
    };

    auto* count = app.add_subcommand("count", "exhaustive triple census");
    add_grid_flags(count);
    auto* predict = app.add_subcommand("predict", "heuristic predictions");
    add_grid_flags(predict);
    auto* compare = app.add_subcommand("compare", "census vs prediction");
    add_grid_flags(compare);
    auto* generate = app.add_subcommand("generate", "one parameter set");
    add_gen_flags(generate);
    auto* curve = app.add_subcommand("curve", "one parameter set with curve");
    add_gen_flags(curve);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // CLI11 treats --help as a zero-exit parse error; everything else
        // is a usage problem.
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    CommandResult res;
    if (count->parsed()) res = cmd_count(grid);
    else if (predict->parsed()) res = cmd_predict(grid);
    else if (compare->parsed()) res = cmd_compare(grid);
    else if (generate->parsed()) res = cmd_generate(gen);
    else res = cmd_curve(gen);

    if (!res.out.empty()) std::fputs(res.out.c_str(), stdout);
    if (!res.err.empty()) std::fputs(res.err.c_str(), stderr);
    return res.exit_code;
}

}  // namespace cpforge::cli
