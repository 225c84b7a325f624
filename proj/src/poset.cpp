#include "posetgf/poset.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <bit>
#include <fstream>
#include <map>
#include <sstream>

namespace posetgf {

namespace {
int popcount(uint32_t x) { return std::popcount(x); }
}  // namespace

void Poset::rebuild_down() {
    down_.assign(static_cast<size_t>(n_), 0);
    for (int u = 0; u < n_; ++u)
        for (int v = 0; v < n_; ++v)
            if (less(u, v)) down_[static_cast<size_t>(v)] |= 1u << u;
}

Poset Poset::from_covers(int n, const std::vector<std::pair<int, int>>& covers) {
    Poset p;
    p.n_ = n;
    p.up_.assign(static_cast<size_t>(n), 0);
    for (auto [u, v] : covers) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw PosetError("cover pair out of range");
        p.up_[static_cast<size_t>(u)] |= 1u << v;
    }
    // bitwise Warshall closure
    for (int k = 0; k < n; ++k)
        for (int u = 0; u < n; ++u)
            if ((p.up_[static_cast<size_t>(u)] >> k) & 1u) p.up_[static_cast<size_t>(u)] |= p.up_[static_cast<size_t>(k)];
    for (int u = 0; u < n; ++u)
        if ((p.up_[static_cast<size_t>(u)] >> u) & 1u) throw CycleDetected();
    p.rebuild_down();
    return p;
}

Poset Poset::from_relation(int n, std::vector<uint32_t> up) {
    Poset p;
    p.n_ = n;
    p.up_ = std::move(up);
    for (int u = 0; u < n; ++u) {
        if ((p.up_[static_cast<size_t>(u)] >> u) & 1u) throw PosetError("relation not irreflexive");
        for (int v = 0; v < n; ++v)
            if (p.less(u, v)) {
                if (p.less(v, u)) throw PosetError("relation not antisymmetric");
                if (p.up_[static_cast<size_t>(v)] & ~p.up_[static_cast<size_t>(u)])
                    throw PosetError("relation not transitive");
            }
    }
    p.rebuild_down();
    return p;
}

Poset Poset::chain(int n) {
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i + 1 < n; ++i) covers.emplace_back(i, i + 1);
    return from_covers(n, covers);
}

Poset Poset::antichain(int n) { return from_covers(n, {}); }

Poset Poset::chain_sum(const std::vector<int>& lengths) {
    std::vector<std::pair<int, int>> covers;
    int base = 0;
    for (int len : lengths) {
        for (int i = 0; i + 1 < len; ++i) covers.emplace_back(base + i, base + i + 1);
        base += len;
    }
    return from_covers(base, covers);
}

uint32_t Poset::cover_up(int u) const {
    uint32_t result = 0;
    uint32_t ups = above(u);
    for (int v = 0; v < n_; ++v)
        if ((ups >> v) & 1u) {
            // v covers u iff nothing lies strictly between
            if ((above(u) & below(v)) == 0) result |= 1u << v;
        }
    return result;
}

uint32_t Poset::cover_down(int u) const {
    uint32_t result = 0;
    uint32_t downs = below(u);
    for (int v = 0; v < n_; ++v)
        if ((downs >> v) & 1u) {
            if ((above(v) & below(u)) == 0) result |= 1u << v;
        }
    return result;
}

std::vector<std::pair<int, int>> Poset::cover_pairs() const {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n_; ++u) {
        uint32_t c = cover_up(u);
        for (int v = 0; v < n_; ++v)
            if ((c >> v) & 1u) pairs.emplace_back(u, v);
    }
    return pairs;
}

Poset Poset::relabeled(const std::vector<int>& perm) const {
    std::vector<uint32_t> up(static_cast<size_t>(n_), 0);
    for (int u = 0; u < n_; ++u)
        for (int v = 0; v < n_; ++v)
            if (less(u, v)) up[static_cast<size_t>(perm[static_cast<size_t>(u)])] |=
                1u << perm[static_cast<size_t>(v)];
    Poset p;
    p.n_ = n_;
    p.up_ = std::move(up);
    p.rebuild_down();
    return p;
}

Poset Poset::induced(uint32_t vertex_mask) const {
    std::vector<int> verts;
    for (int v = 0; v < n_; ++v)
        if ((vertex_mask >> v) & 1u) verts.push_back(v);
    int m = static_cast<int>(verts.size());
    std::vector<uint32_t> up(static_cast<size_t>(m), 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (less(verts[static_cast<size_t>(i)], verts[static_cast<size_t>(j)]))
                up[static_cast<size_t>(i)] |= 1u << j;
    Poset p;
    p.n_ = m;
    p.up_ = std::move(up);
    p.rebuild_down();
    return p;
}

uint64_t Poset::relation_key() const {
    uint64_t key = 0;
    for (int u = 0; u < n_; ++u)
        for (int v = 0; v < n_; ++v)
            if (less(u, v)) key |= uint64_t(1) << (u * n_ + v);
    return key;
}

// --- gradedness -------------------------------------------------------------

GradingResult grading(const Poset& p) {
    int n = p.size();
    if (n == 0) {
        RankedPoset rp{p, {}, 0, true};
        return {Gradedness::Strong, rp};
    }
    std::vector<int> rank(static_cast<size_t>(n), 0);
    std::vector<int> comp(static_cast<size_t>(n), -1);
    std::vector<std::pair<int, int>> covers = p.cover_pairs();
    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<size_t>(n));  // (nbr, delta)
    for (auto [u, v] : covers) {
        adj[static_cast<size_t>(u)].emplace_back(v, +1);
        adj[static_cast<size_t>(v)].emplace_back(u, -1);
    }
    int ncomp = 0;
    for (int root = 0; root < n; ++root) {
        if (comp[static_cast<size_t>(root)] != -1) continue;
        int c = ncomp++;
        comp[static_cast<size_t>(root)] = c;
        rank[static_cast<size_t>(root)] = 0;
        std::vector<int> stack{root};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (auto [v, d] : adj[static_cast<size_t>(u)]) {
                int rv = rank[static_cast<size_t>(u)] + d;
                if (comp[static_cast<size_t>(v)] == -1) {
                    comp[static_cast<size_t>(v)] = c;
                    rank[static_cast<size_t>(v)] = rv;
                    stack.push_back(v);
                } else if (rank[static_cast<size_t>(v)] != rv) {
                    return {Gradedness::NotGraded, std::nullopt};
                }
            }
        }
    }
    // normalize each component to minimum rank 0
    std::vector<int> cmin(static_cast<size_t>(ncomp), INT32_MAX);
    for (int v = 0; v < n; ++v)
        cmin[static_cast<size_t>(comp[static_cast<size_t>(v)])] =
            std::min(cmin[static_cast<size_t>(comp[static_cast<size_t>(v)])], rank[static_cast<size_t>(v)]);
    for (int v = 0; v < n; ++v) rank[static_cast<size_t>(v)] -= cmin[static_cast<size_t>(comp[static_cast<size_t>(v)])];
    int height = 0;
    for (int v = 0; v < n; ++v) height = std::max(height, rank[static_cast<size_t>(v)] + 1);

    // strong: every minimal vertex at rank 0, every maximal vertex at the top
    // rank, consistently across components
    bool strong = true;
    std::vector<int> cmax(static_cast<size_t>(ncomp), 0);
    for (int v = 0; v < n; ++v)
        cmax[static_cast<size_t>(comp[static_cast<size_t>(v)])] =
            std::max(cmax[static_cast<size_t>(comp[static_cast<size_t>(v)])], rank[static_cast<size_t>(v)]);
    for (int c = 0; c < ncomp; ++c)
        if (cmax[static_cast<size_t>(c)] != height - 1) strong = false;
    for (int v = 0; v < n && strong; ++v) {
        if (p.below(v) == 0 && rank[static_cast<size_t>(v)] != 0) strong = false;
        if (p.above(v) == 0 && rank[static_cast<size_t>(v)] != height - 1) strong = false;
    }
    RankedPoset rp{p, rank, height, strong};
    return {strong ? Gradedness::Strong : Gradedness::Weak, rp};
}

std::vector<std::vector<int>> RankedPoset::levels() const {
    std::vector<std::vector<int>> lv(static_cast<size_t>(height));
    for (int v = 0; v < poset.size(); ++v) lv[static_cast<size_t>(rank[static_cast<size_t>(v)])].push_back(v);
    return lv;
}

uint32_t RankedPoset::level_mask(int r) const {
    uint32_t m = 0;
    if (r < 0 || r >= height) return 0;
    for (int v = 0; v < poset.size(); ++v)
        if (rank[static_cast<size_t>(v)] == r) m |= 1u << v;
    return m;
}

// --- chain-sum patterns -----------------------------------------------------

ChainSumPattern ChainSumPattern::plain(std::vector<int> parts) {
    for (int a : parts)
        if (a < 1) throw PosetError("pattern parts must be positive");
    return ChainSumPattern{std::move(parts), std::nullopt};
}

ChainSumPattern ChainSumPattern::with_offsets(std::vector<int> parts, std::vector<int> offsets) {
    if (parts.size() != offsets.size()) throw PosetError("pattern offsets size mismatch");
    for (int a : parts)
        if (a < 1) throw PosetError("pattern parts must be positive");
    int mn = INT32_MAX;
    for (int b : offsets) {
        if (b < 0) throw PosetError("pattern offsets must be nonnegative");
        mn = std::min(mn, b);
    }
    if (!offsets.empty() && mn != 0) throw PosetError("pattern offsets must include 0");
    return ChainSumPattern{std::move(parts), std::move(offsets)};
}

namespace {

// Backtracking over chains: place chain `ci` as an increasing sequence,
// all vertices incomparable to previously used ones.
bool contains_search(const Poset& p, const std::vector<int>& parts, size_t ci, uint32_t used,
                     uint32_t incomp_constraint) {
    if (ci == parts.size()) return true;
    int len = parts[ci];
    int n = p.size();
    // chain vertices chosen one at a time; next element must be above prev
    std::vector<int> chosen;
    std::function<bool(int, uint32_t)> place = [&](int depth, uint32_t used_now) -> bool {
        if (depth == len) {
            uint32_t chain_mask = used_now & ~used;
            uint32_t next_constraint = incomp_constraint | chain_mask;
            return contains_search(p, parts, ci + 1, used_now, next_constraint);
        }
        for (int v = 0; v < n; ++v) {
            if ((used_now >> v) & 1u) continue;
            if (depth > 0 && !p.less(chosen.back(), v)) continue;
            // must be incomparable to all earlier chains
            bool ok = true;
            uint32_t others = incomp_constraint;
            if ((p.above(v) & others) || (p.below(v) & others)) ok = false;
            if (!ok) continue;
            chosen.push_back(v);
            if (place(depth + 1, used_now | (1u << v))) return true;
            chosen.pop_back();
        }
        return false;
    };
    return place(0, used);
}

}  // namespace

bool contains(const Poset& p, const ChainSumPattern& pattern) {
    int total = 0;
    for (int a : pattern.parts) total += a;
    if (total > p.size()) return false;
    // search longer chains first
    std::vector<int> parts = pattern.parts;
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return contains_search(p, parts, 0, 0, 0);
}

namespace {

bool grade_place(const RankedPoset& rp, const std::vector<int>& parts,
                 const std::vector<int>& start_rank, size_t ci, uint32_t used,
                 uint32_t incomp_constraint) {
    if (ci == parts.size()) return true;
    const Poset& p = rp.poset;
    int len = parts[ci];
    std::vector<int> chosen;
    std::function<bool(int, uint32_t)> place = [&](int depth, uint32_t used_now) -> bool {
        if (depth == len) {
            uint32_t chain_mask = used_now & ~used;
            return grade_place(rp, parts, start_rank, ci + 1, used_now,
                               incomp_constraint | chain_mask);
        }
        int want_rank = start_rank[ci] + depth;
        for (int v = 0; v < p.size(); ++v) {
            if ((used_now >> v) & 1u) continue;
            if (rp.rank[static_cast<size_t>(v)] != want_rank) continue;
            if (depth > 0 && !p.less(chosen.back(), v)) continue;
            if ((p.above(v) & incomp_constraint) || (p.below(v) & incomp_constraint)) continue;
            chosen.push_back(v);
            if (place(depth + 1, used_now | (1u << v))) return true;
            chosen.pop_back();
        }
        return false;
    };
    return place(0, used);
}

}  // namespace

bool grade_contains(const RankedPoset& rp, const ChainSumPattern& pattern) {
    if (!pattern.offsets) throw PosetError("grade_contains needs a pattern with offsets");
    const std::vector<int>& parts = pattern.parts;
    const std::vector<int>& offs = *pattern.offsets;
    int m = static_cast<int>(parts.size());
    int span = 0;
    for (int i = 0; i < m; ++i) span = std::max(span, offs[static_cast<size_t>(i)] + parts[static_cast<size_t>(i)]);
    for (int shift = 0; shift + span <= rp.height; ++shift) {
        std::vector<int> start(static_cast<size_t>(m));
        for (int i = 0; i < m; ++i) start[static_cast<size_t>(i)] = offs[static_cast<size_t>(i)] + shift;
        if (grade_place(rp, parts, start, 0, 0, 0)) return true;
    }
    return false;
}

std::vector<ChainSumPattern> grade_pattern_list(int x, int y) {
    std::vector<ChainSumPattern> out;
    auto add = [&](int bx, int by) {
        out.push_back(ChainSumPattern::with_offsets({x, y}, {bx, by}));
    };
    for (int bx = 0; bx < y; ++bx)
        for (int by = 0; by < x; ++by) {
            if (std::min(bx, by) != 0) continue;
            if (x == y && bx > by) continue;  // symmetric duplicate
            add(bx, by);
        }
    return out;
}

// --- seeing and locality ----------------------------------------------------

Seeing seeing(const RankedPoset& rp, int v) {
    int r = rp.rank[static_cast<size_t>(v)];
    uint32_t up_level = rp.level_mask(r + 1);
    uint32_t down_level = rp.level_mask(r - 1);
    Seeing s;
    s.up = rp.poset.cover_up(v) == up_level;
    s.down = rp.poset.cover_down(v) == down_level;
    return s;
}

bool is_all_seeing(const RankedPoset& rp, int v) {
    Seeing s = seeing(rp, v);
    return s.up && s.down;
}

namespace {

// Up-sets of one level form a chain under inclusion.
bool upsets_chain(const RankedPoset& rp, int level) {
    std::vector<uint32_t> upsets;
    for (int v = 0; v < rp.poset.size(); ++v)
        if (rp.rank[static_cast<size_t>(v)] == level) upsets.push_back(rp.poset.cover_up(v));
    for (size_t i = 0; i < upsets.size(); ++i)
        for (size_t j = i + 1; j < upsets.size(); ++j) {
            uint32_t a = upsets[i], b = upsets[j];
            if ((a & b) != a && (a & b) != b) return false;
        }
    return true;
}

bool every_level_has_all_seeing(const RankedPoset& rp) {
    for (int r = 0; r < rp.height; ++r) {
        bool found = false;
        for (int v = 0; v < rp.poset.size() && !found; ++v)
            if (rp.rank[static_cast<size_t>(v)] == r && is_all_seeing(rp, v)) found = true;
        if (!found) return false;
    }
    return true;
}

}  // namespace

bool avoids_22_local(const RankedPoset& rp) {
    for (int r = 0; r + 1 < rp.height; ++r)
        if (!upsets_chain(rp, r)) return false;
    return every_level_has_all_seeing(rp);
}

bool avoids_31_local(const RankedPoset& rp) {
    for (int v = 0; v < rp.poset.size(); ++v) {
        Seeing s = seeing(rp, v);
        if (!s.up && !s.down) return false;
    }
    for (int r = 0; r + 2 < rp.height; ++r) {
        uint32_t lo = rp.level_mask(r), hi = rp.level_mask(r + 2);
        for (int v = 0; v < rp.poset.size(); ++v) {
            if (!((lo >> v) & 1u)) continue;
            if ((rp.poset.above(v) & hi) != hi) return false;
        }
    }
    return true;
}

bool avoids_both_local(const RankedPoset& rp) {
    if (grade_contains(rp, ChainSumPattern::with_offsets({2, 2}, {0, 0}))) return false;
    for (int v = 0; v < rp.poset.size(); ++v) {
        Seeing s = seeing(rp, v);
        if (!s.up && !s.down) return false;
    }
    return every_level_has_all_seeing(rp);
}

// --- canonical form and automorphisms ----------------------------------------

namespace {

// Iteratively refined vertex invariant; isomorphism-invariant by construction.
std::vector<uint64_t> vertex_colors(const Poset& p) {
    int n = p.size();
    std::vector<uint64_t> color(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v)
        color[static_cast<size_t>(v)] =
            (uint64_t(popcount(p.below(v))) << 24) | (uint64_t(popcount(p.above(v))) << 16) |
            (uint64_t(popcount(p.cover_down(v))) << 8) | uint64_t(popcount(p.cover_up(v)));
    for (int round = 0; round < 3; ++round) {
        std::vector<uint64_t> next(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) {
            std::vector<uint64_t> ups, downs;
            for (int w = 0; w < n; ++w) {
                if (p.less(v, w)) ups.push_back(color[static_cast<size_t>(w)]);
                if (p.less(w, v)) downs.push_back(color[static_cast<size_t>(w)]);
            }
            std::sort(ups.begin(), ups.end());
            std::sort(downs.begin(), downs.end());
            uint64_t h = color[static_cast<size_t>(v)] * 1099511628211ULL + 14695981039346656037ULL;
            for (uint64_t x : ups) h = h * 1099511628211ULL + x + 1;
            h = h * 1099511628211ULL + 0xabcdef;
            for (uint64_t x : downs) h = h * 1099511628211ULL + x + 2;
            next[static_cast<size_t>(v)] = h;
        }
        color = next;
    }
    // compress to ranks of the sorted distinct values
    std::vector<uint64_t> sorted = color;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<uint64_t> ranks(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v)
        ranks[static_cast<size_t>(v)] = static_cast<uint64_t>(
            std::lower_bound(sorted.begin(), sorted.end(), color[static_cast<size_t>(v)]) - sorted.begin());
    return ranks;
}

// Branch-and-bound minimal relation matrix. The bit stream appends, for each
// position p, the bits (0,p),(1,p),...,(p-1,p),(p,0),...,(p,p-1) of the
// permuted matrix, so every DFS step extends a comparable prefix.
struct CanonSearch {
    const Poset& p;
    int n;
    std::vector<uint64_t> color;
    std::vector<uint64_t> sorted_color;
    std::vector<uint8_t> best;  // 2 = not yet determined
    Int ties = 0;
    std::vector<int> chosen;
    std::vector<char> used;

    explicit CanonSearch(const Poset& poset)
        : p(poset), n(poset.size()), color(vertex_colors(poset)) {
        sorted_color.assign(color.begin(), color.end());
        std::sort(sorted_color.begin(), sorted_color.end());
        best.assign(static_cast<size_t>(n) * static_cast<size_t>(n - 1), 2);
        used.assign(static_cast<size_t>(n), 0);
        chosen.reserve(static_cast<size_t>(n));
    }

    void run() { dfs(0, 0); }

    void dfs(int pos, size_t stream_off) {
        if (pos == n) {
            ties += 1;
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[static_cast<size_t>(v)]) continue;
            if (color[static_cast<size_t>(v)] != sorted_color[static_cast<size_t>(pos)]) continue;
            // bits added by placing v at position pos
            std::array<uint8_t, 62> seg{};
            int len = 0;
            for (int i = 0; i < pos; ++i)
                seg[static_cast<size_t>(len++)] = p.less(chosen[static_cast<size_t>(i)], v) ? 1 : 0;
            for (int i = 0; i < pos; ++i)
                seg[static_cast<size_t>(len++)] = p.less(v, chosen[static_cast<size_t>(i)]) ? 1 : 0;
            int cmp = 0;  // -1 better, 0 equal, 1 worse
            for (int i = 0; i < len; ++i) {
                uint8_t b = best[stream_off + static_cast<size_t>(i)];
                if (seg[static_cast<size_t>(i)] < b) {
                    cmp = -1;
                    break;
                }
                if (seg[static_cast<size_t>(i)] > b) {
                    cmp = 1;
                    break;
                }
            }
            if (cmp == 1) continue;
            if (cmp == -1) {
                for (int i = 0; i < len; ++i) best[stream_off + static_cast<size_t>(i)] = seg[static_cast<size_t>(i)];
                std::fill(best.begin() + static_cast<long>(stream_off) + len, best.end(), 2);
                ties = 0;
            }
            used[static_cast<size_t>(v)] = 1;
            chosen.push_back(v);
            dfs(pos + 1, stream_off + static_cast<size_t>(len));
            chosen.pop_back();
            used[static_cast<size_t>(v)] = 0;
        }
    }
};

}  // namespace

CanonicalResult canonical_form_with_aut(const Poset& p) {
    int n = p.size();
    if (n == 0) return {std::string(1, '\0'), 1};
    CanonSearch search(p);
    search.run();
    std::string key;
    key.push_back(static_cast<char>(n));
    uint8_t acc = 0;
    int nbits = 0;
    for (size_t i = 0; i < search.best.size(); ++i) {
        // the finished stream holds only 0/1 bits; a leftover sentinel would
        // mean no leaf was reached
        if (search.best[i] > 1) throw PosetError("canonical search did not complete");
        acc = static_cast<uint8_t>((acc << 1) | search.best[i]);
        if (++nbits == 8) {
            key.push_back(static_cast<char>(acc));
            acc = 0;
            nbits = 0;
        }
    }
    if (nbits) key.push_back(static_cast<char>(acc << (8 - nbits)));
    return {key, search.ties};
}

std::string canonical_form(const Poset& p) { return canonical_form_with_aut(p).key; }

Int automorphism_count(const Poset& p) { return canonical_form_with_aut(p).aut_order; }

namespace {

void aut_dfs(const Poset& p, const std::vector<uint64_t>& color, std::vector<int>& perm,
             std::vector<char>& used, int v, std::vector<std::vector<int>>& out) {
    int n = p.size();
    if (v == n) {
        out.push_back(perm);
        return;
    }
    for (int w = 0; w < n; ++w) {
        if (used[static_cast<size_t>(w)]) continue;
        if (color[static_cast<size_t>(w)] != color[static_cast<size_t>(v)]) continue;
        bool ok = true;
        for (int u = 0; u < v && ok; ++u) {
            if (p.less(u, v) != p.less(perm[static_cast<size_t>(u)], w)) ok = false;
            if (p.less(v, u) != p.less(w, perm[static_cast<size_t>(u)])) ok = false;
        }
        if (!ok) continue;
        perm[static_cast<size_t>(v)] = w;
        used[static_cast<size_t>(w)] = 1;
        aut_dfs(p, color, perm, used, v + 1, out);
        used[static_cast<size_t>(w)] = 0;
    }
}

}  // namespace

std::vector<std::vector<int>> automorphisms(const Poset& p) {
    int n = p.size();
    std::vector<std::vector<int>> out;
    if (n == 0) {
        out.push_back({});
        return out;
    }
    std::vector<uint64_t> color = vertex_colors(p);
    std::vector<int> perm(static_cast<size_t>(n), -1);
    std::vector<char> used(static_cast<size_t>(n), 0);
    aut_dfs(p, color, perm, used, 0, out);
    return out;
}

// --- text format --------------------------------------------------------------

Poset parse_poset(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = -1;
    std::vector<std::pair<int, int>> covers;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        if (n < 0) {
            if (ls >> n) {
                if (n < 0 || n > 31) throw PosetParseError("vertex count out of range");
                continue;
            }
            std::string junk;
            if (ls >> junk) throw PosetParseError("expected vertex count on first line");
            continue;  // blank line before the header
        }
        int u, v;
        std::string op;
        if (!(ls >> u)) continue;  // blank line
        if (!(ls >> op >> v) || op != "<") throw PosetParseError("expected `u < v` line");
        std::string junk;
        if (ls >> junk) throw PosetParseError("trailing tokens on cover line");
        covers.emplace_back(u, v);
    }
    if (n < 0) throw PosetParseError("missing vertex count");
    return Poset::from_covers(n, covers);
}

Poset load_poset(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PosetError("cannot open poset file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_poset(ss.str());
}

std::string poset_to_text(const Poset& p) {
    std::ostringstream os;
    os << p.size() << "\n";
    for (auto [u, v] : p.cover_pairs()) os << u << " < " << v << "\n";
    return os.str();
}

}  // namespace posetgf
