#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "posetgf/rational.hpp"

namespace posetgf {

struct PosetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct CycleDetected : PosetError {
    CycleDetected() : PosetError("cover relation contains a cycle") {}
};
struct PosetParseError : PosetError {
    using PosetError::PosetError;
};

// Finite strict partial order on vertices 0..n-1, stored as bitmask rows of
// the full relation (u < v). Sizes are small throughout; n <= 31.
class Poset {
public:
    Poset() = default;

    // Transitive closure of the given cover pairs (u below v); rejects cycles.
    // Duplicate pairs are tolerated.
    static Poset from_covers(int n, const std::vector<std::pair<int, int>>& covers);
    // Validates irreflexivity, antisymmetry and transitivity.
    static Poset from_relation(int n, std::vector<uint32_t> up);
    static Poset chain(int n);
    static Poset antichain(int n);
    // Disjoint union of incomparable chains (the pattern (a1+...+am) itself).
    static Poset chain_sum(const std::vector<int>& lengths);

    int size() const { return n_; }
    bool less(int u, int v) const { return (up_[static_cast<size_t>(u)] >> v) & 1u; }
    bool comparable(int u, int v) const { return less(u, v) || less(v, u); }
    uint32_t above(int u) const { return up_[static_cast<size_t>(u)]; }
    uint32_t below(int u) const { return down_[static_cast<size_t>(u)]; }
    uint32_t cover_up(int u) const;
    uint32_t cover_down(int u) const;
    std::vector<std::pair<int, int>> cover_pairs() const;

    // perm[old] = new vertex index.
    Poset relabeled(const std::vector<int>& perm) const;
    Poset induced(uint32_t vertex_mask) const;

    // Packed relation matrix, row-major; valid for n <= 8.
    uint64_t relation_key() const;

    friend bool operator==(const Poset& a, const Poset& b) {
        return a.n_ == b.n_ && a.up_ == b.up_;
    }

private:
    int n_ = 0;
    std::vector<uint32_t> up_;
    std::vector<uint32_t> down_;
    void rebuild_down();
};

// --- gradedness -------------------------------------------------------------

enum class Gradedness { NotGraded, Weak, Strong };

// A poset together with a rank function. Covers raise rank by exactly one;
// ranks are normalized so each connected component has minimum rank 0.
// strong means all maximal chains have the same length (every minimal vertex
// at rank 0 and every maximal vertex at rank height-1).
struct RankedPoset {
    Poset poset;
    std::vector<int> rank;
    int height = 0;  // number of ranks; 0 for the empty poset
    bool strong = false;

    std::vector<std::vector<int>> levels() const;
    uint32_t level_mask(int r) const;
};

struct GradingResult {
    Gradedness kind = Gradedness::NotGraded;
    std::optional<RankedPoset> ranked;
};

GradingResult grading(const Poset& p);

// --- chain-sum patterns -----------------------------------------------------

// Pattern (a1+...+am), optionally with rank offsets [b1,...,bm].
struct ChainSumPattern {
    std::vector<int> parts;
    std::optional<std::vector<int>> offsets;

    static ChainSumPattern plain(std::vector<int> parts);
    static ChainSumPattern with_offsets(std::vector<int> parts, std::vector<int> offsets);
};

// Naive containment: m vertex-disjoint chains of the given lengths, pairwise
// fully incomparable, found by exhaustive backtracking.
bool contains(const Poset& p, const ChainSumPattern& pattern);

// Grade-containment: chain i occupies consecutive ranks starting at
// offsets[i] + b for some common shift b.
bool grade_contains(const RankedPoset& p, const ChainSumPattern& pattern);

// The finite offset list for an (x+y) pattern: all (x[bx] + y[by]) with
// min(bx, by) = 0, bx < y, by < x, deduplicated for x == y.
std::vector<ChainSumPattern> grade_pattern_list(int x, int y);

// --- seeing and locality ----------------------------------------------------

struct Seeing {
    bool up = false;
    bool down = false;
};

Seeing seeing(const RankedPoset& p, int v);
bool is_all_seeing(const RankedPoset& p, int v);

// Local criteria, each equivalent to the corresponding naive avoidance on
// strongly graded posets: (2+2), (3+1), and both at once.
bool avoids_22_local(const RankedPoset& p);
bool avoids_31_local(const RankedPoset& p);
bool avoids_both_local(const RankedPoset& p);

// --- canonical forms and automorphisms ---------------------------------------

// Minimum relation-matrix encoding over vertex permutations, with
// invariant-based pruning. Equal strings iff isomorphic. Practical to n <= 9.
std::string canonical_form(const Poset& p);

struct CanonicalResult {
    std::string key;
    Int aut_order;
};
CanonicalResult canonical_form_with_aut(const Poset& p);

Int automorphism_count(const Poset& p);
std::vector<std::vector<int>> automorphisms(const Poset& p);

// --- text format --------------------------------------------------------------

// First line `n`, following lines `u < v` cover pairs; whitespace-insensitive,
// `#` starts a comment.
Poset parse_poset(const std::string& text);
Poset load_poset(const std::string& path);
std::string poset_to_text(const Poset& p);

}  // namespace posetgf
