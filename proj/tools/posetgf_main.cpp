#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "posetgf/census_io.hpp"
#include "posetgf/cli.hpp"

namespace {

using namespace posetgf;

std::string default_cache_path() {
    const char* dir = std::getenv("POSETGF_CACHE_DIR");
    if (!dir || !*dir) return {};
    return std::string(dir) + "/census.txt";
}

struct CommonOpts {
    std::string family = "graded_semiorder";
    std::string kind = "unlabeled_ogf";
    std::string method = "closed_form";
    std::string format = "table";
    int n_max = 8;
    int height = -1;
    int offset = 0;
    int threads = 0;
    int oracle_limit = oracle::kDefaultMaxN;
    std::string cache = default_cache_path();
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_method) {
    cmd->add_option("--family", o.family, "poset family")->capture_default_str();
    cmd->add_option("--kind", o.kind, "labeled_egf | unlabeled_ogf | seed_egf")
        ->capture_default_str();
    if (with_method)
        cmd->add_option("--method", o.method,
                        "transfer | closed_form | assembled | oracle | trictionary-from:<kind>")
            ->capture_default_str();
    cmd->add_option("--n-max", o.n_max, "largest size to report")->capture_default_str();
    cmd->add_option("--height", o.height, "restrict to one height (transfer engines only)");
    cmd->add_option("--format", o.format, "table | json | bfile")->capture_default_str();
    cmd->add_option("--offset", o.offset, "b-file index of the n=0 entry")->capture_default_str();
    cmd->add_option("--cache", o.cache, "census cache file (default from POSETGF_CACHE_DIR)")
        ->capture_default_str();
    cmd->add_option("--threads", o.threads, "oracle worker threads (0 = all cores)");
    cmd->add_option("--oracle-limit", o.oracle_limit,
                    "largest size the oracle may enumerate (7 needs minutes)")
        ->capture_default_str();
}

int build_config(const CommonOpts& o, bool need_method, cli::RunConfig& cfg, std::ostream& err) {
    auto fam = parse_family(o.family);
    if (!fam) {
        err << "error: unknown family: " << o.family << "\n";
        return 2;
    }
    auto kind = cli::parse_kind(o.kind);
    if (!kind) {
        err << "error: unknown kind: " << o.kind << "\n";
        return 2;
    }
    cfg.family = *fam;
    cfg.kind = *kind;
    if (need_method) {
        auto m = cli::parse_method(o.method);
        if (!m) {
            err << "error: unknown method: " << o.method << "\n";
            return 2;
        }
        cfg.method = *m;
    }
    auto fmt = cli::parse_format(o.format);
    if (!fmt) {
        err << "error: unknown format: " << o.format << "\n";
        return 2;
    }
    cfg.format = *fmt;
    cfg.n_max = o.n_max;
    if (o.height >= 0) cfg.height = o.height;
    cfg.cache_path = o.cache;
    cfg.bfile_offset = o.offset;
    cfg.threads = o.threads;
    if (o.oracle_limit > oracle::kHardMaxN) {
        err << "error: oracle limit capped at " << oracle::kHardMaxN << "\n";
        return 2;
    }
    cfg.oracle_limit = o.oracle_limit;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact enumeration of graded poset families: transfer matrices, closed forms, "
                 "and a brute-force census, cross-checked against each other"};
    app.set_config("--config");
    app.require_subcommand(1);

    CommonOpts count_opts, cross_opts, bfile_opts;
    std::string cross_families = "graded_semiorder,graded_interval,graded,graded_31,"
                                 "interval_order,semiorder,weak_gradings";

    CLI::App* count = app.add_subcommand("count", "print one sequence by one method");
    add_common(count, count_opts, true);

    CLI::App* cross = app.add_subcommand("crosscheck",
                                         "compute every available method per family and compare");
    add_common(cross, cross_opts, false);
    cross->add_option("--families", cross_families, "comma-separated family list")
        ->capture_default_str();

    CLI::App* bfile = app.add_subcommand("bfile", "print a sequence in OEIS b-file form");
    add_common(bfile, bfile_opts, true);

    CLI::App* cache = app.add_subcommand("cache", "build, inspect or verify the census cache");
    std::string cache_action = "show";
    CommonOpts cache_opts;
    cache->add_option("action", cache_action, "build | show | verify | export-json | import-json");
    cache->add_option("--n-max", cache_opts.n_max, "census size for build")->capture_default_str();
    cache->add_option("--cache", cache_opts.cache, "cache file path")->capture_default_str();
    cache->add_option("--threads", cache_opts.threads, "worker threads");
    std::string cache_json_path;
    cache->add_option("--json", cache_json_path, "json file for export-json/import-json");

    CLI11_PARSE(app, argc, argv);

    if (count->parsed() || bfile->parsed()) {
        const CommonOpts& o = count->parsed() ? count_opts : bfile_opts;
        cli::RunConfig cfg;
        if (int rc = build_config(o, true, cfg, std::cerr)) return rc;
        if (bfile->parsed()) cfg.format = cli::Format::Bfile;
        return cli::cmd_count(cfg, std::cout, std::cerr);
    }
    if (cross->parsed()) {
        cli::RunConfig cfg;
        if (int rc = build_config(cross_opts, false, cfg, std::cerr)) return rc;
        std::vector<posetgf::Family> fams;
        std::stringstream ss(cross_families);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty()) continue;
            auto f = parse_family(tok);
            if (!f) {
                std::cerr << "error: unknown family: " << tok << "\n";
                return 2;
            }
            fams.push_back(*f);
        }
        return cli::cmd_crosscheck(fams, cfg, std::cout, std::cerr);
    }
    if (cache->parsed()) {
        try {
            if (cache_opts.cache.empty()) {
                std::cerr << "error: no cache path (flag --cache or POSETGF_CACHE_DIR)\n";
                return 2;
            }
            if (cache_action == "build") {
                oracle::CensusTable t = oracle::census(cache_opts.n_max, cache_opts.threads);
                oracle::save_census(t, cache_opts.cache);
                std::cout << "census written: " << cache_opts.cache << " (n_max=" << t.n_max
                          << ")\n";
                return 0;
            }
            if (cache_action == "show") {
                oracle::CensusTable t = oracle::load_census(cache_opts.cache);
                std::cout << oracle::census_to_text(t);
                return 0;
            }
            if (cache_action == "verify") {
                oracle::CensusTable t = oracle::load_census(cache_opts.cache);
                std::cout << "ok: n_max=" << t.n_max << " method=" << t.method << "\n";
                return 0;
            }
            if (cache_action == "export-json") {
                oracle::CensusTable t = oracle::load_census(cache_opts.cache);
                std::ofstream out(cache_json_path);
                if (!out) {
                    std::cerr << "error: cannot write " << cache_json_path << "\n";
                    return 2;
                }
                out << oracle::census_to_json(t);
                return 0;
            }
            if (cache_action == "import-json") {
                std::ifstream in(cache_json_path);
                if (!in) {
                    std::cerr << "error: cannot read " << cache_json_path << "\n";
                    return 2;
                }
                std::ostringstream ss2;
                ss2 << in.rdbuf();
                oracle::CensusTable t = oracle::census_from_json(ss2.str());
                oracle::save_census(t, cache_opts.cache);
                return 0;
            }
            std::cerr << "error: unknown cache action: " << cache_action << "\n";
            return 2;
        } catch (const posetgf::PosetError& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 2;
        }
    }
    return 2;
}
