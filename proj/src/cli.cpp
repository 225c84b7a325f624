#include "posetgf/cli.hpp"

#include <filesystem>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "posetgf/census_io.hpp"
#include "posetgf/engines.hpp"
#include "posetgf/seeds.hpp"

namespace posetgf::cli {

const char* kind_name(Kind k) {
    switch (k) {
        case Kind::LabeledEgf: return "labeled_egf";
        case Kind::UnlabeledOgf: return "unlabeled_ogf";
        case Kind::SeedEgf: return "seed_egf";
    }
    return "?";
}

std::optional<Kind> parse_kind(std::string_view s) {
    if (s == "labeled_egf") return Kind::LabeledEgf;
    if (s == "unlabeled_ogf") return Kind::UnlabeledOgf;
    if (s == "seed_egf") return Kind::SeedEgf;
    return std::nullopt;
}

std::string method_name(const MethodSpec& m) {
    switch (m.base) {
        case MethodSpec::Base::Transfer: return "transfer";
        case MethodSpec::Base::ClosedForm: return "closed_form";
        case MethodSpec::Base::Assembled: return "assembled";
        case MethodSpec::Base::Oracle: return "oracle";
        case MethodSpec::Base::TrictionaryFrom:
            return std::string("trictionary-from:") + kind_name(m.source);
    }
    return "?";
}

std::optional<MethodSpec> parse_method(std::string_view s) {
    if (s == "transfer") return MethodSpec{MethodSpec::Base::Transfer, {}};
    if (s == "closed_form") return MethodSpec{MethodSpec::Base::ClosedForm, {}};
    if (s == "assembled") return MethodSpec{MethodSpec::Base::Assembled, {}};
    if (s == "oracle") return MethodSpec{MethodSpec::Base::Oracle, {}};
    constexpr std::string_view prefix = "trictionary-from:";
    if (s.substr(0, prefix.size()) == prefix) {
        auto k = parse_kind(s.substr(prefix.size()));
        if (!k) return std::nullopt;
        return MethodSpec{MethodSpec::Base::TrictionaryFrom, *k};
    }
    return std::nullopt;
}

std::optional<Format> parse_format(std::string_view s) {
    if (s == "table") return Format::Table;
    if (s == "json") return Format::Json;
    if (s == "bfile") return Format::Bfile;
    return std::nullopt;
}

CensusProvider::CensusProvider(std::string cache_path, int threads, int limit)
    : cache_path_(std::move(cache_path)), threads_(threads), limit_(limit) {}

const oracle::CensusTable& CensusProvider::get(int n_max) {
    if (n_max > limit_) throw oracle::LimitExceeded(n_max);
    if (table_ && table_->n_max >= n_max) return *table_;
    if (!cache_path_.empty()) {
        try {
            oracle::CensusTable loaded = oracle::load_census(cache_path_);
            if (loaded.n_max >= n_max) {
                table_ = std::move(loaded);
                return *table_;
            }
        } catch (const oracle::CacheNotFound&) {
            // fall through to a fresh computation
        }
    }
    table_ = oracle::census(n_max, threads_);
    if (!cache_path_.empty()) oracle::save_census(*table_, cache_path_);
    return *table_;
}

namespace {

bool is_22_avoiding_family(Family f) {
    return f == Family::GradedSemiorder || f == Family::GradedInterval ||
           f == Family::IntervalOrder || f == Family::Semiorder;
}

std::optional<PowerSeries> closed_form_series(Family family, Kind kind, int order) {
    using engines::LiteratureGf;
    switch (family) {
        case Family::GradedSemiorder:
            if (kind == Kind::UnlabeledOgf) return engines::graded_semiorder_ogf(order);
            if (kind == Kind::SeedEgf) return engines::graded_semiorder_seed_egf(order);
            return std::nullopt;
        case Family::Graded31:
            if (kind == Kind::LabeledEgf) return engines::graded_31_egf(order);
            return std::nullopt;
        case Family::IntervalOrder:
            if (kind == Kind::LabeledEgf) return engines::literature_gf(LiteratureGf::Zagier, order);
            if (kind == Kind::UnlabeledOgf)
                return engines::literature_gf(LiteratureGf::BousquetMelou, order);
            if (kind == Kind::SeedEgf)
                return engines::literature_gf(LiteratureGf::IntervalSeed, order);
            return std::nullopt;
        case Family::Semiorder:
            if (kind == Kind::LabeledEgf)
                return engines::literature_gf(LiteratureGf::StanleySemi, order);
            if (kind == Kind::UnlabeledOgf)
                return engines::literature_gf(LiteratureGf::WineFreund, order);
            return std::nullopt;
        default: return std::nullopt;
    }
}

std::optional<PowerSeries> transfer_series(Family family, Kind kind, int order,
                                           std::optional<int> height) {
    engines::TransferOptions opts;
    opts.height = height;
    if (kind != Kind::LabeledEgf) return std::nullopt;
    switch (family) {
        case Family::Graded: return engines::all_graded_egf(order, opts);
        case Family::WeakGradings: return engines::weakly_graded_egf(order, opts);
        case Family::GradedInterval: return engines::graded_interval_egf(order, opts);
        default: return std::nullopt;
    }
}

seeds::Trictionary substitution(Kind source, Kind target) {
    using seeds::Trictionary;
    if (source == Kind::SeedEgf && target == Kind::LabeledEgf) return Trictionary::SeedToEgf;
    if (source == Kind::SeedEgf && target == Kind::UnlabeledOgf) return Trictionary::SeedToOgf;
    if (source == Kind::UnlabeledOgf && target == Kind::LabeledEgf) return Trictionary::OgfToEgf;
    if (source == Kind::LabeledEgf && target == Kind::UnlabeledOgf) return Trictionary::EgfToOgf;
    if (source == Kind::UnlabeledOgf && target == Kind::SeedEgf) return Trictionary::OgfToSeed;
    if (source == Kind::LabeledEgf && target == Kind::SeedEgf) return Trictionary::EgfToSeed;
    throw ConfigError("no substitution between identical kinds");
}

std::vector<Int> counts_from_series(const PowerSeries& s, Kind kind) {
    return kind == Kind::UnlabeledOgf ? ogf_counts(s) : egf_counts(s);
}

}  // namespace

std::optional<PowerSeries> formula_series(Family family, Kind kind, int order,
                                          std::optional<int> height) {
    if (auto s = transfer_series(family, kind, order, height)) return s;
    if (!height)
        if (auto s = closed_form_series(family, kind, order)) return s;
    return std::nullopt;
}

Sequence compute_sequence(const RunConfig& cfg, CensusProvider& census) {
    const int order = cfg.n_max;
    const Family family = cfg.family;
    const Kind kind = cfg.kind;
    auto unsupported = [&]() -> UnsupportedMethod {
        return UnsupportedMethod(std::string(family_name(family)) + "/" + kind_name(kind) + "/" +
                                 method_name(cfg.method));
    };
    switch (cfg.method.base) {
        case MethodSpec::Base::Transfer: {
            auto s = transfer_series(family, kind, order, cfg.height);
            if (!s) throw unsupported();
            return {method_name(cfg.method), counts_from_series(*s, kind)};
        }
        case MethodSpec::Base::ClosedForm: {
            if (cfg.height) throw ConfigError("closed forms have no height filter");
            auto s = closed_form_series(family, kind, order);
            if (!s) throw unsupported();
            return {method_name(cfg.method), counts_from_series(*s, kind)};
        }
        case MethodSpec::Base::Assembled: {
            if (family != Family::GradedSemiorder || kind != Kind::UnlabeledOgf) throw unsupported();
            return {method_name(cfg.method),
                    counts_from_series(engines::graded_semiorder_assembled_ogf(order), kind)};
        }
        case MethodSpec::Base::TrictionaryFrom: {
            if (!is_22_avoiding_family(family)) throw unsupported();
            if (cfg.method.source == kind) throw ConfigError("trictionary source equals target kind");
            auto src = formula_series(family, cfg.method.source, order, std::nullopt);
            if (!src) throw unsupported();
            PowerSeries out = seeds::trictionary(*src, substitution(cfg.method.source, kind));
            return {method_name(cfg.method), counts_from_series(out, kind)};
        }
        case MethodSpec::Base::Oracle: {
            if (cfg.height) throw ConfigError("the oracle has no height filter");
            const oracle::CensusTable& t = census.get(cfg.n_max);
            std::vector<Int> values;
            if (family == Family::WeakGradings) {
                if (kind != Kind::LabeledEgf) throw unsupported();
                for (int n = 0; n <= cfg.n_max; ++n)
                    values.push_back(t.at(Family::WeakGradings, n).labeled);
                return {"oracle", values};
            }
            for (int n = 0; n <= cfg.n_max; ++n) {
                const oracle::FamilyCounts& c = t.at(family, n);
                switch (kind) {
                    case Kind::LabeledEgf: values.push_back(c.labeled); break;
                    case Kind::UnlabeledOgf: values.push_back(c.unlabeled); break;
                    case Kind::SeedEgf:
                        // labeled seed count; seeds of (2+2)-avoiding families
                        // are primitive, so each class has n! labelings
                        if (!is_22_avoiding_family(family)) throw unsupported();
                        values.push_back(c.seeds * factorial(n));
                        break;
                }
            }
            return {"oracle", values};
        }
    }
    throw unsupported();
}

std::vector<Sequence> all_routes(Family family, Kind kind, int n_max, std::optional<int> height,
                                 CensusProvider& census, int oracle_limit) {
    std::vector<Sequence> routes;
    RunConfig cfg;
    cfg.family = family;
    cfg.kind = kind;
    cfg.n_max = n_max;
    cfg.height = height;
    cfg.oracle_limit = oracle_limit;
    auto try_method = [&](MethodSpec m, int clamp_n = -1) {
        RunConfig c = cfg;
        c.method = m;
        if (clamp_n >= 0) c.n_max = std::min(n_max, clamp_n);
        try {
            routes.push_back(compute_sequence(c, census));
        } catch (const UnsupportedMethod&) {
        } catch (const ConfigError&) {
        }
    };
    try_method({MethodSpec::Base::Transfer, {}});
    try_method({MethodSpec::Base::ClosedForm, {}});
    try_method({MethodSpec::Base::Assembled, {}});
    for (Kind src : {Kind::LabeledEgf, Kind::UnlabeledOgf, Kind::SeedEgf}) {
        if (src == kind) continue;
        try_method({MethodSpec::Base::TrictionaryFrom, src});
    }
    if (!height) try_method({MethodSpec::Base::Oracle, {}}, oracle_limit);
    return routes;
}

void render_sequence(const Sequence& seq, const RunConfig& cfg, std::ostream& out) {
    switch (cfg.format) {
        case Format::Table: {
            out << "# " << family_name(cfg.family) << " " << kind_name(cfg.kind) << " "
                << seq.route << "\n";
            for (size_t n = 0; n < seq.values.size(); ++n)
                out << n << "\t" << seq.values[n] << "\n";
            break;
        }
        case Format::Json: {
            nlohmann::json j;
            j["family"] = family_name(cfg.family);
            j["kind"] = kind_name(cfg.kind);
            j["method"] = seq.route;
            nlohmann::json vals = nlohmann::json::array();
            for (size_t n = 0; n < seq.values.size(); ++n) {
                nlohmann::json row;
                row["n"] = n;
                row["count"] = seq.values[n].str();
                vals.push_back(row);
            }
            j["values"] = vals;
            out << j.dump(2) << "\n";
            break;
        }
        case Format::Bfile: {
            for (size_t n = 0; n < seq.values.size(); ++n)
                out << (static_cast<long long>(n) + cfg.bfile_offset) << " " << seq.values[n] << "\n";
            break;
        }
    }
}

int cmd_count(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        CensusProvider census(cfg.cache_path, cfg.threads, cfg.oracle_limit);
        Sequence seq = compute_sequence(cfg, census);
        render_sequence(seq, cfg, out);
        return 0;
    } catch (const PosetError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const SeriesError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

int cmd_bfile(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    RunConfig c = cfg;
    c.format = Format::Bfile;
    return cmd_count(c, out, err);
}

int cmd_crosscheck(const std::vector<Family>& families, const RunConfig& cfg, std::ostream& out,
                   std::ostream& err) {
    try {
        CensusProvider census(cfg.cache_path, cfg.threads, cfg.oracle_limit);
        bool all_ok = true;
        nlohmann::json jfams = nlohmann::json::array();
        for (Family family : families) {
            for (Kind kind : {Kind::LabeledEgf, Kind::UnlabeledOgf, Kind::SeedEgf}) {
                auto routes = all_routes(family, kind, cfg.n_max, cfg.height, census,
                                         cfg.oracle_limit);
                if (routes.size() < 2) continue;
                // compare every route against the first on the common range
                bool ok = true;
                std::string detail;
                for (size_t r = 1; r < routes.size(); ++r) {
                    size_t m = std::min(routes[0].values.size(), routes[r].values.size());
                    for (size_t n = 0; n < m; ++n) {
                        if (routes[0].values[n] != routes[r].values[n]) {
                            ok = false;
                            detail = "n=" + std::to_string(n) + ": " + routes[0].route + "=" +
                                     routes[0].values[n].str() + " vs " + routes[r].route + "=" +
                                     routes[r].values[n].str();
                            break;
                        }
                    }
                    if (!ok) break;
                }
                all_ok = all_ok && ok;
                if (cfg.format == Format::Json) {
                    nlohmann::json jf;
                    jf["family"] = family_name(family);
                    jf["kind"] = kind_name(kind);
                    jf["agree"] = ok;
                    nlohmann::json jroutes = nlohmann::json::array();
                    for (const auto& r : routes) {
                        nlohmann::json jr;
                        jr["method"] = r.route;
                        nlohmann::json vals = nlohmann::json::array();
                        for (const Int& v : r.values) vals.push_back(v.str());
                        jr["values"] = vals;
                        jroutes.push_back(jr);
                    }
                    jf["routes"] = jroutes;
                    if (!ok) jf["mismatch"] = detail;
                    jfams.push_back(jf);
                } else {
                    out << family_name(family) << " " << kind_name(kind) << ": ";
                    for (size_t r = 0; r < routes.size(); ++r)
                        out << (r ? ", " : "") << routes[r].route << "[0.."
                            << routes[r].values.size() - 1 << "]";
                    out << (ok ? " -- agree" : " -- MISMATCH " + detail) << "\n";
                }
            }
        }
        if (cfg.format == Format::Json) out << jfams.dump(2) << "\n";
        return all_ok ? 0 : 1;
    } catch (const PosetError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace posetgf::cli
