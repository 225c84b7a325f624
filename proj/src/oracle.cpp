#include "posetgf/oracle.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <thread>

#include "posetgf/seeds.hpp"

namespace posetgf::oracle {

namespace {

// Insert-only open-addressing set of nonzero uint64 keys. The enumeration
// inserts each labeled relation matrix many times (once per linear extension
// of an upper-triangular representative), so probe cost dominates.
class FlatSet64 {
public:
    explicit FlatSet64(size_t expected = 1024) { rehash(slots_for(expected)); }

    bool insert(uint64_t key) {
        ++key;  // keys are raised by one so 0 can mean "empty slot"
        if (size_ * 10 >= cap_ * 7) rehash(cap_ * 2);
        size_t i = probe(key);
        if (table_[i] == key) return false;
        table_[i] = key;
        ++size_;
        return true;
    }

    template <class Fn>
    void for_each(Fn&& fn) const {
        for (uint64_t v : table_)
            if (v) fn(v - 1);
    }

    size_t size() const { return size_; }

private:
    static size_t slots_for(size_t expected) {
        size_t c = 64;
        while (c * 7 < expected * 10) c *= 2;
        return c;
    }
    size_t probe(uint64_t key) const {
        size_t mask = cap_ - 1;
        size_t i = (key * 0x9e3779b97f4a7c15ULL) & mask;
        while (table_[i] != 0 && table_[i] != key) i = (i + 1) & mask;
        return i;
    }
    void rehash(size_t new_cap) {
        std::vector<uint64_t> old = std::move(table_);
        cap_ = new_cap;
        table_.assign(cap_, 0);
        for (uint64_t v : old)
            if (v) {
                size_t mask = cap_ - 1;
                size_t i = (v * 0x9e3779b97f4a7c15ULL) & mask;
                while (table_[i] != 0) i = (i + 1) & mask;
                table_[i] = v;
            }
    }
    std::vector<uint64_t> table_;
    size_t cap_ = 0;
    size_t size_ = 0;
};

struct PairTable {
    std::vector<int> us, vs;  // pair index -> (u, v), u < v
    int count = 0;
};

PairTable ut_pairs(int n) {
    PairTable t;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            t.us.push_back(u);
            t.vs.push_back(v);
        }
    t.count = static_cast<int>(t.us.size());
    return t;
}

// Visit every transitive upper-triangular strict order whose pair mask lies
// in [lo, hi).
template <class Fn>
void for_each_ut_order(int n, uint64_t lo, uint64_t hi, Fn&& fn) {
    PairTable pt = ut_pairs(n);
    std::vector<uint32_t> up(static_cast<size_t>(n));
    for (uint64_t mask = lo; mask < hi; ++mask) {
        std::fill(up.begin(), up.end(), 0u);
        uint64_t m = mask;
        while (m) {
            int t = std::countr_zero(m);
            m &= m - 1;
            up[static_cast<size_t>(pt.us[static_cast<size_t>(t)])] |= 1u << pt.vs[static_cast<size_t>(t)];
        }
        bool ok = true;
        for (int u = 0; u < n && ok; ++u) {
            uint32_t ups = up[static_cast<size_t>(u)];
            while (ups) {
                int v = std::countr_zero(ups);
                ups &= ups - 1;
                if (up[static_cast<size_t>(v)] & ~up[static_cast<size_t>(u)]) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) fn(up);
    }
}

std::vector<std::vector<int>> all_perms(int n) {
    std::vector<int> p(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<size_t>(i)] = i;
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

Poset poset_from_key(int n, uint64_t key) {
    std::vector<uint32_t> up(static_cast<size_t>(n), 0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if ((key >> (u * n + v)) & 1u) up[static_cast<size_t>(u)] |= 1u << v;
    return Poset::from_relation(n, std::move(up));
}

int default_threads(int requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

// All distinct labeled relation keys on [n], sorted.
std::vector<uint64_t> labeled_keys(int n, int threads) {
    if (n > kHardMaxN) throw LimitExceeded(n);
    if (n == 0) return {0};
    PairTable pt = ut_pairs(n);
    auto perms = all_perms(n);
    // bit position of pair t under permutation s
    std::vector<std::vector<int>> bitpos(perms.size(), std::vector<int>(static_cast<size_t>(pt.count)));
    for (size_t s = 0; s < perms.size(); ++s)
        for (int t = 0; t < pt.count; ++t)
            bitpos[s][static_cast<size_t>(t)] =
                perms[s][static_cast<size_t>(pt.us[static_cast<size_t>(t)])] * n +
                perms[s][static_cast<size_t>(pt.vs[static_cast<size_t>(t)])];

    uint64_t space = uint64_t(1) << pt.count;
    int nthreads = n >= 6 ? default_threads(threads) : 1;
    std::vector<FlatSet64> partial(static_cast<size_t>(nthreads), FlatSet64(1 << 12));
    auto worker = [&](int w) {
        uint64_t lo = space * static_cast<uint64_t>(w) / static_cast<uint64_t>(nthreads);
        uint64_t hi = space * static_cast<uint64_t>(w + 1) / static_cast<uint64_t>(nthreads);
        FlatSet64& set = partial[static_cast<size_t>(w)];
        for_each_ut_order(n, lo, hi, [&](const std::vector<uint32_t>& up) {
            uint64_t base = 0;
            for (int u = 0; u < n; ++u) {
                uint32_t ups = up[static_cast<size_t>(u)];
                while (ups) {
                    int v = std::countr_zero(ups);
                    ups &= ups - 1;
                    base |= uint64_t(1) << (u * n + v);
                }
            }
            for (size_t s = 0; s < perms.size(); ++s) {
                uint64_t img = 0;
                uint64_t m = base;
                // remap via the pair table: iterate set pairs of the UT mask
                for (int t = 0; t < pt.count; ++t) {
                    int u = pt.us[static_cast<size_t>(t)], v = pt.vs[static_cast<size_t>(t)];
                    if ((m >> (u * n + v)) & 1u) img |= uint64_t(1) << bitpos[s][static_cast<size_t>(t)];
                }
                set.insert(img);
            }
        });
    };
    if (nthreads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < nthreads; ++w) pool.emplace_back(worker, w);
        for (auto& th : pool) th.join();
    }
    std::vector<uint64_t> keys;
    for (auto& set : partial) set.for_each([&](uint64_t k) { keys.push_back(k); });
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    return keys;
}

}  // namespace

void for_each_labeled(int n, const std::function<void(const Poset&)>& fn, int threads) {
    for (uint64_t key : labeled_keys(n, threads)) fn(poset_from_key(n, key));
}

std::vector<Poset> labeled_posets(int n) {
    std::vector<Poset> out;
    for_each_labeled(n, [&](const Poset& p) { out.push_back(p); });
    return out;
}

Int count_labeled(int n) { return Int(labeled_keys(n, 0).size()); }

Flags classify(const Poset& p) {
    Flags f;
    GradingResult g = grading(p);
    f.weakly_graded = g.kind != Gradedness::NotGraded;
    f.graded = g.kind == Gradedness::Strong;
    f.avoids_22 = !contains(p, ChainSumPattern::plain({2, 2}));
    f.avoids_31 = !contains(p, ChainSumPattern::plain({3, 1}));
    return f;
}

bool in_family(Family f, const Flags& x) {
    switch (f) {
        case Family::AllPosets: return true;
        case Family::WeaklyGraded: return x.weakly_graded;
        case Family::Graded: return x.graded;
        case Family::GradedSemiorder: return x.graded && x.avoids_22 && x.avoids_31;
        case Family::GradedInterval: return x.graded && x.avoids_22;
        case Family::Graded31: return x.graded && x.avoids_31;
        case Family::IntervalOrder: return x.avoids_22;
        case Family::Semiorder: return x.avoids_22 && x.avoids_31;
        case Family::WeakGradings: throw PosetError("weak gradings are not a poset family");
    }
    return false;
}

Int count_weak_gradings(const Poset& p) {
    int n = p.size();
    if (n == 0) return 1;
    GradingResult g = grading(p);
    if (g.kind == Gradedness::NotGraded) return 0;
    const RankedPoset& rp = *g.ranked;
    // identify components of the comparability graph
    std::vector<int> comp(static_cast<size_t>(n), -1);
    int ncomp = 0;
    for (int root = 0; root < n; ++root) {
        if (comp[static_cast<size_t>(root)] != -1) continue;
        int c = ncomp++;
        std::vector<int> stack{root};
        comp[static_cast<size_t>(root)] = c;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            uint32_t nbrs = p.above(u) | p.below(u);
            while (nbrs) {
                int v = std::countr_zero(nbrs);
                nbrs &= nbrs - 1;
                if (comp[static_cast<size_t>(v)] == -1) {
                    comp[static_cast<size_t>(v)] = c;
                    stack.push_back(v);
                }
            }
        }
    }
    // ranks are fixed per component up to a shift; the first component is
    // pinned and the rest range over all shifts giving a gap-free union
    std::vector<std::vector<int>> comp_ranks(static_cast<size_t>(ncomp));
    for (int v = 0; v < n; ++v)
        comp_ranks[static_cast<size_t>(comp[static_cast<size_t>(v)])].push_back(rp.rank[static_cast<size_t>(v)]);
    Int total = 0;
    std::vector<int> shift(static_cast<size_t>(ncomp), 0);
    std::function<void(int)> rec = [&](int c) {
        if (c == ncomp) {
            // check the union of shifted ranks is an interval
            int lo = INT32_MAX, hi = INT32_MIN;
            uint32_t seen = 0;  // ranks fit well inside [-(n), n]; offset by n
            for (int cc = 0; cc < ncomp; ++cc)
                for (int r : comp_ranks[static_cast<size_t>(cc)]) {
                    int x = r + shift[static_cast<size_t>(cc)] + n;
                    seen |= 1u << x;
                    lo = std::min(lo, x);
                    hi = std::max(hi, x);
                }
            for (int x = lo; x <= hi; ++x)
                if (!((seen >> x) & 1u)) return;
            total += 1;
            return;
        }
        for (int s = -n; s <= n; ++s) {
            shift[static_cast<size_t>(c)] = s;
            rec(c + 1);
        }
        shift[static_cast<size_t>(c)] = 0;
    };
    if (ncomp == 1) return 1;
    shift[0] = 0;
    std::function<void(int)> start = rec;
    rec(1);
    return total;
}

SizeData analyze_size(int n, int threads) {
    if (n > kHardMaxN) throw LimitExceeded(n);
    SizeData data;
    data.n = n;
    data.weak_gradings_labeled = 0;

    // unlabeled classes from canonicalized upper-triangular representatives
    std::map<std::string, ClassEntry> classes;
    if (n == 0) {
        Poset empty;
        ClassEntry e{empty, canonical_form(empty), 1, true, classify(empty), 1};
        classes.emplace(e.canonical, e);
    } else {
        PairTable pt = ut_pairs(n);
        uint64_t space = uint64_t(1) << pt.count;
        for_each_ut_order(n, 0, space, [&](const std::vector<uint32_t>& up) {
            Poset p = Poset::from_relation(n, up);
            CanonicalResult canon = canonical_form_with_aut(p);
            if (classes.count(canon.key)) return;
            ClassEntry e{p, canon.key, canon.aut_order, seeds::is_seed(p), classify(p),
                         count_weak_gradings(p)};
            classes.emplace(canon.key, e);
        });
    }
    Int nf = factorial(n);
    for (auto& [key, e] : classes) {
        data.classes.push_back(e);
        data.weak_gradings_labeled += e.weak_gradings * (nf / e.aut);
    }

    // direct labeled counts per family
    for (Family f : kCensusFamilies) data.labeled_direct[f] = 0;
    for_each_labeled(n, [&](const Poset& p) {
        Flags flags = classify(p);
        for (Family f : kCensusFamilies)
            if (in_family(f, flags)) data.labeled_direct[f] += 1;
    }, threads);
    return data;
}

const FamilyCounts& CensusTable::at(Family f, int n) const {
    auto it = counts.find({f, n});
    if (it == counts.end()) throw PosetError("census table has no entry for requested family/size");
    return it->second;
}

bool CensusTable::has(Family f, int n) const { return counts.count({f, n}) > 0; }

CensusTable census(int n_max, int threads) {
    CensusTable t;
    t.n_max = n_max;
    t.method = "oracle/ut-relabel-v1";
    {
        char buf[64];
        std::time_t now = std::time(nullptr);
        std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
        t.created = buf;
    }
    for (int n = 0; n <= n_max; ++n) {
        SizeData d = analyze_size(n, threads);
        Int nf = factorial(n);
        for (Family f : kCensusFamilies) {
            FamilyCounts c;
            c.labeled = 0;
            c.unlabeled = 0;
            c.seeds = 0;
            Int from_classes = 0;
            for (const ClassEntry& e : d.classes) {
                if (!in_family(f, e.flags)) continue;
                c.unlabeled += 1;
                if (e.seed) c.seeds += 1;
                from_classes += nf / e.aut;
            }
            c.labeled = d.labeled_direct.at(f);
            if (c.labeled != from_classes)
                throw PosetError(std::string("labeled count mismatch for ") + family_name(f) +
                                 " at n=" + std::to_string(n) + ": direct " + c.labeled.str() +
                                 " vs sum n!/|Aut| " + from_classes.str());
            t.counts[{f, n}] = c;
        }
        t.counts[{Family::WeakGradings, n}] = FamilyCounts{d.weak_gradings_labeled, 0, 0};
    }
    check_table(t);
    return t;
}

void check_table(const CensusTable& t) {
    auto le = [](const Int& a, const Int& b) { return a <= b; };
    for (int n = 0; n <= t.n_max; ++n) {
        for (Family f : kCensusFamilies) {
            const FamilyCounts& c = t.at(f, n);
            if (c.labeled < 0 || c.unlabeled < 0 || c.seeds < 0)
                throw PosetError("census count negative");
            if (!le(c.seeds, c.unlabeled) || !le(c.unlabeled, c.labeled))
                throw PosetError("census counts not nested (seeds <= unlabeled <= labeled)");
            if (n == 0 && (c.labeled != 1 || c.unlabeled != 1 || c.seeds != 1))
                throw PosetError("empty poset row must be all ones");
        }
        auto chain_le = [&](Family a, Family b) {
            if (t.at(a, n).labeled > t.at(b, n).labeled ||
                t.at(a, n).unlabeled > t.at(b, n).unlabeled)
                throw PosetError(std::string("containment violated: ") + family_name(a) +
                                 " exceeds " + family_name(b) + " at n=" + std::to_string(n));
        };
        chain_le(Family::GradedSemiorder, Family::GradedInterval);
        chain_le(Family::GradedInterval, Family::Graded);
        chain_le(Family::GradedSemiorder, Family::Graded31);
        chain_le(Family::Graded31, Family::Graded);
        chain_le(Family::Semiorder, Family::IntervalOrder);
        chain_le(Family::IntervalOrder, Family::AllPosets);
        chain_le(Family::Graded, Family::WeaklyGraded);
        chain_le(Family::WeaklyGraded, Family::AllPosets);
        if (t.has(Family::WeakGradings, n)) {
            if (t.at(Family::WeakGradings, n).labeled < t.at(Family::Graded, n).labeled)
                throw PosetError("weak gradings fewer than graded posets");
        }
    }
}

}  // namespace posetgf::oracle
