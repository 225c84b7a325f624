#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "posetgf/families.hpp"
#include "posetgf/oracle.hpp"
#include "posetgf/series.hpp"

namespace posetgf::cli {

struct UnsupportedMethod : PosetError {
    explicit UnsupportedMethod(const std::string& what) : PosetError("unsupported method: " + what) {}
};
struct ConfigError : PosetError {
    using PosetError::PosetError;
};

enum class Kind { LabeledEgf, UnlabeledOgf, SeedEgf };
const char* kind_name(Kind k);
std::optional<Kind> parse_kind(std::string_view s);

struct MethodSpec {
    enum class Base { Transfer, ClosedForm, Assembled, Oracle, TrictionaryFrom };
    Base base = Base::ClosedForm;
    Kind source = Kind::UnlabeledOgf;  // for TrictionaryFrom
};
std::string method_name(const MethodSpec& m);
std::optional<MethodSpec> parse_method(std::string_view s);

enum class Format { Table, Json, Bfile };
std::optional<Format> parse_format(std::string_view s);

struct RunConfig {
    Family family = Family::GradedSemiorder;
    Kind kind = Kind::UnlabeledOgf;
    MethodSpec method;
    int n_max = 8;
    std::optional<int> height;
    Format format = Format::Table;
    std::string cache_path;
    int bfile_offset = 0;
    int threads = 0;
    int oracle_limit = oracle::kDefaultMaxN;
};

// Lazily computed census, backed by the cache file when one is given.
class CensusProvider {
public:
    CensusProvider(std::string cache_path, int threads, int limit);
    const oracle::CensusTable& get(int n_max);

private:
    std::string cache_path_;
    int threads_;
    int limit_;
    std::optional<oracle::CensusTable> table_;
};

struct Sequence {
    std::string route;
    std::vector<Int> values;  // index n
};

// Direct formula series for a family/kind, when one exists (EGF-normalized
// coefficients for the EGF kinds, plain for the OGF kind).
std::optional<PowerSeries> formula_series(Family family, Kind kind, int order,
                                          std::optional<int> height);

Sequence compute_sequence(const RunConfig& cfg, CensusProvider& census);

// Every route available for the family/kind pair at this size, oracle
// included when within limits.
std::vector<Sequence> all_routes(Family family, Kind kind, int n_max, std::optional<int> height,
                                 CensusProvider& census, int oracle_limit);

int cmd_count(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_crosscheck(const std::vector<Family>& families, const RunConfig& cfg, std::ostream& out,
                   std::ostream& err);
int cmd_bfile(const RunConfig& cfg, std::ostream& out, std::ostream& err);

void render_sequence(const Sequence& seq, const RunConfig& cfg, std::ostream& out);

}  // namespace posetgf::cli
