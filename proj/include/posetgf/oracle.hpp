#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "posetgf/families.hpp"
#include "posetgf/poset.hpp"

namespace posetgf::oracle {

struct LimitExceeded : PosetError {
    explicit LimitExceeded(int n)
        : PosetError("exhaustive enumeration limited to n <= 7, requested n = " + std::to_string(n)) {}
};

// Practical enumeration bounds: 6 runs in seconds, 7 in minutes.
inline constexpr int kDefaultMaxN = 6;
inline constexpr int kHardMaxN = 7;

// Every labeled poset on {0..n-1} exactly once, in a deterministic order.
// Method: all upper-triangular transitive strict orders, closed under vertex
// relabelings, deduplicated on the packed relation matrix.
void for_each_labeled(int n, const std::function<void(const Poset&)>& fn, int threads = 0);
std::vector<Poset> labeled_posets(int n);
Int count_labeled(int n);

// Family membership via the naive checks only (grading + chain-sum
// containment search); the locality shortcuts are never consulted here.
struct Flags {
    bool weakly_graded = false;
    bool graded = false;
    bool avoids_22 = false;
    bool avoids_31 = false;
};
Flags classify(const Poset& p);
bool in_family(Family f, const Flags& flags);

// Number of weak gradings of p: rank functions (up to translation) whose
// level sets tile a gap-free range. 0 when p admits none.
Int count_weak_gradings(const Poset& p);

struct ClassEntry {
    Poset rep;
    std::string canonical;
    Int aut;
    bool seed = false;
    Flags flags;
    Int weak_gradings;
};

struct SizeData {
    int n = 0;
    std::vector<ClassEntry> classes;          // sorted by canonical key
    std::map<Family, Int> labeled_direct;     // census families, from the labeled stream
    Int weak_gradings_labeled;                // labeled (poset, grading) pairs
};

SizeData analyze_size(int n, int threads = 0);

struct FamilyCounts {
    Int labeled;
    Int unlabeled;
    Int seeds;  // unlabeled members that are seeds
};

struct CensusTable {
    int n_max = -1;
    std::string method;
    std::string created;
    // Census families carry all three counts; the WeakGradings rows carry the
    // labeled (poset, grading) pair count with zero unlabeled/seed columns.
    std::map<std::pair<Family, int>, FamilyCounts> counts;

    const FamilyCounts& at(Family f, int n) const;
    bool has(Family f, int n) const;
};

// Builds the census and verifies, per family and size, that the direct
// labeled count equals sum over classes of n!/|Aut|, plus the containment
// relations between families. Throws on any violation.
CensusTable census(int n_max, int threads = 0);

// Cheap consistency checks usable on a loaded table (containment chains,
// base row, labeled >= unlabeled >= seeds).
void check_table(const CensusTable& t);

}  // namespace posetgf::oracle
