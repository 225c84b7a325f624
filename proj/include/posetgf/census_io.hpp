#pragma once

#include <string>

#include "posetgf/oracle.hpp"

namespace posetgf::oracle {

struct CacheNotFound : PosetError {
    explicit CacheNotFound(const std::string& path) : PosetError("census cache not found: " + path) {}
};
struct CorruptCache : PosetError {
    explicit CorruptCache(const std::string& why) : PosetError("corrupt census cache: " + why) {}
};

// Versioned text format, one record per family/size:
//   posetgf-census v1
//   method <tag>
//   created <timestamp>
//   nmax <n>
//   count <family> <n> <labeled> <unlabeled> <seeds>
//   ...
//   checksum <16 hex digits>
// The checksum covers every preceding line; loading verifies it and the
// table invariants before returning.
void save_census(const CensusTable& t, const std::string& path);
CensusTable load_census(const std::string& path);

std::string census_to_text(const CensusTable& t);
CensusTable census_from_text(const std::string& text);

std::string census_to_json(const CensusTable& t);
CensusTable census_from_json(const std::string& text);

}  // namespace posetgf::oracle
