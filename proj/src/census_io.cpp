#include "posetgf/census_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace posetgf::oracle {

namespace {

uint64_t fnv1a(const std::string& s) {
    uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string hex64(uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[static_cast<size_t>(i)] = digits[v & 0xf];
        v >>= 4;
    }
    return s;
}

Int parse_int(const std::string& s) {
    try {
        return Int(s);
    } catch (const std::exception&) {
        throw CorruptCache("bad integer: " + s);
    }
}

}  // namespace

std::string census_to_text(const CensusTable& t) {
    std::ostringstream os;
    os << "posetgf-census v1\n";
    os << "method " << t.method << "\n";
    os << "created " << t.created << "\n";
    os << "nmax " << t.n_max << "\n";
    for (const auto& [key, c] : t.counts) {
        os << "count " << family_name(key.first) << " " << key.second << " " << c.labeled << " "
           << c.unlabeled << " " << c.seeds << "\n";
    }
    std::string body = os.str();
    return body + "checksum " + hex64(fnv1a(body)) + "\n";
}

CensusTable census_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    CensusTable t;
    std::string body;
    bool have_checksum = false;
    bool first = true;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        ls >> tok;
        if (first) {
            std::string ver;
            ls >> ver;
            if (tok != "posetgf-census" || ver != "v1") throw CorruptCache("bad header");
            first = false;
            body += line + "\n";
            continue;
        }
        if (tok == "checksum") {
            std::string sum;
            ls >> sum;
            if (sum != hex64(fnv1a(body))) throw CorruptCache("checksum mismatch");
            have_checksum = true;
            break;
        }
        body += line + "\n";
        if (tok == "method") {
            ls >> t.method;
        } else if (tok == "created") {
            ls >> t.created;
        } else if (tok == "nmax") {
            ls >> t.n_max;
        } else if (tok == "count") {
            std::string fam;
            int n;
            std::string a, b, c;
            if (!(ls >> fam >> n >> a >> b >> c)) throw CorruptCache("short count record");
            auto f = parse_family(fam);
            if (!f) throw CorruptCache("unknown family: " + fam);
            t.counts[{*f, n}] = FamilyCounts{parse_int(a), parse_int(b), parse_int(c)};
        } else if (!tok.empty()) {
            throw CorruptCache("unknown record: " + tok);
        }
    }
    if (first) throw CorruptCache("empty file");
    if (!have_checksum) throw CorruptCache("missing checksum");
    if (t.n_max < 0) throw CorruptCache("missing nmax");
    for (int n = 0; n <= t.n_max; ++n)
        for (Family f : kCensusFamilies)
            if (!t.has(f, n)) throw CorruptCache("missing count record");
    try {
        check_table(t);
    } catch (const PosetError& e) {
        throw CorruptCache(e.what());
    }
    return t;
}

void save_census(const CensusTable& t, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw PosetError("cannot write census cache: " + path);
    out << census_to_text(t);
}

CensusTable load_census(const std::string& path) {
    if (!std::filesystem::exists(path)) throw CacheNotFound(path);
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CacheNotFound(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return census_from_text(ss.str());
}

std::string census_to_json(const CensusTable& t) {
    nlohmann::json j;
    j["format"] = "posetgf-census";
    j["version"] = 1;
    j["method"] = t.method;
    j["created"] = t.created;
    j["n_max"] = t.n_max;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& [key, c] : t.counts) {
        nlohmann::json row;
        row["family"] = family_name(key.first);
        row["n"] = key.second;
        row["labeled"] = c.labeled.str();
        row["unlabeled"] = c.unlabeled.str();
        row["seeds"] = c.seeds.str();
        rows.push_back(row);
    }
    j["counts"] = rows;
    return j.dump(2);
}

CensusTable census_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw CorruptCache(std::string("bad json: ") + e.what());
    }
    if (j.value("format", "") != "posetgf-census" || j.value("version", 0) != 1)
        throw CorruptCache("bad json header");
    CensusTable t;
    t.method = j.value("method", "");
    t.created = j.value("created", "");
    t.n_max = j.value("n_max", -1);
    for (const auto& row : j.at("counts")) {
        auto f = parse_family(row.at("family").get<std::string>());
        if (!f) throw CorruptCache("unknown family in json");
        int n = row.at("n").get<int>();
        t.counts[{*f, n}] = FamilyCounts{parse_int(row.at("labeled").get<std::string>()),
                                         parse_int(row.at("unlabeled").get<std::string>()),
                                         parse_int(row.at("seeds").get<std::string>())};
    }
    for (int n = 0; n <= t.n_max; ++n)
        for (Family f : kCensusFamilies)
            if (!t.has(f, n)) throw CorruptCache("missing count record in json");
    try {
        check_table(t);
    } catch (const PosetError& e) {
        throw CorruptCache(e.what());
    }
    return t;
}

}  // namespace posetgf::oracle
