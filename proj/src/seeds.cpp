#include "posetgf/seeds.hpp"

#include <algorithm>

namespace posetgf::seeds {

std::vector<std::pair<int, int>> exchangeable_pairs(const Poset& p) {
    std::vector<std::pair<int, int>> pairs;
    int n = p.size();
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            if (p.comparable(x, y)) continue;
            uint32_t clear = ~((1u << x) | (1u << y));
            if ((p.above(x) & clear) == (p.above(y) & clear) &&
                (p.below(x) & clear) == (p.below(y) & clear))
                pairs.emplace_back(x, y);
        }
    return pairs;
}

bool is_seed(const Poset& p) { return exchangeable_pairs(p).empty(); }

Poset clone_vertex(const Poset& p, int v) {
    int n = p.size();
    std::vector<std::pair<int, int>> covers;
    for (int u = 0; u < n; ++u)
        for (int w = 0; w < n; ++w)
            if (p.less(u, w) ) covers.emplace_back(u, w);
    // the clone gets exactly v's comparabilities (transitive closure keeps them)
    for (int w = 0; w < n; ++w) {
        if (p.less(v, w)) covers.emplace_back(n, w);
        if (p.less(w, v)) covers.emplace_back(w, n);
    }
    return Poset::from_covers(n + 1, covers);
}

Poset declone_vertex(const Poset& p, int v) {
    bool has_partner = false;
    for (auto [a, b] : exchangeable_pairs(p))
        if (a == v || b == v) has_partner = true;
    if (!has_partner) throw NotExchangeable();
    uint32_t mask = 0;
    for (int u = 0; u < p.size(); ++u)
        if (u != v) mask |= 1u << u;
    return p.induced(mask);
}

SeedDecomposition seed_of(const Poset& p) {
    Poset cur = p;
    std::vector<int> mult(static_cast<size_t>(p.size()), 1);
    for (;;) {
        auto pairs = exchangeable_pairs(cur);
        if (pairs.empty()) break;
        auto [keep, drop] = pairs.front();
        mult[static_cast<size_t>(keep)] += mult[static_cast<size_t>(drop)];
        mult.erase(mult.begin() + drop);
        uint32_t mask = 0;
        for (int u = 0; u < cur.size(); ++u)
            if (u != drop) mask |= 1u << u;
        cur = cur.induced(mask);
    }
    return {cur, mult};
}

bool is_primitive(const Poset& p) { return automorphism_count(p) == 1; }

CycleIndex cycle_index(const Poset& p) {
    auto auts = automorphisms(p);
    CycleIndex z;
    Rational w = Rational(1, static_cast<long>(auts.size()));
    for (const auto& g : auts) {
        std::vector<int> type;
        std::vector<char> seen(g.size(), 0);
        for (size_t v = 0; v < g.size(); ++v) {
            if (seen[v]) continue;
            int len = 0;
            size_t u = v;
            while (!seen[u]) {
                seen[u] = 1;
                ++len;
                u = static_cast<size_t>(g[u]);
            }
            type.push_back(len);
        }
        std::sort(type.begin(), type.end(), std::greater<>());
        z.terms[type] += w;
    }
    return z;
}

PowerSeries cycle_index_substitute(const CycleIndex& z, int order,
                                   const std::vector<PowerSeries>& power_sum_values) {
    PowerSeries total(order);
    for (const auto& [type, weight] : z.terms) {
        PowerSeries term = PowerSeries::one(order);
        for (int len : type) term *= power_sum_values.at(static_cast<size_t>(len));
        total += weight * term;
    }
    return total;
}

PowerSeries power_sum_ogf(int i, int order) {
    PowerSeries s(order);
    for (int k = i; k <= order; k += i) s.coeff_mut(k) = 1;
    return s;
}

PowerSeries power_sum_egf(int i, int order) {
    PowerSeries s(order);
    Int jf = 1;
    for (int j = 1; i * j <= order; ++j) {
        jf *= j;
        s.coeff_mut(i * j) = Rational(1) / Rational(int_pow(jf, static_cast<unsigned>(i)));
    }
    return s;
}

namespace {

std::vector<PowerSeries> power_sum_table(int max_i, int order,
                                         PowerSeries (*make)(int, int)) {
    std::vector<PowerSeries> table;
    table.reserve(static_cast<size_t>(max_i) + 1);
    table.emplace_back(order);  // p_0 unused
    for (int i = 1; i <= max_i; ++i) table.push_back(make(i, order));
    return table;
}

}  // namespace

PowerSeries sprout_ogf(const Poset& seed, int order) {
    if (!is_seed(seed)) throw NotASeed();
    CycleIndex z = cycle_index(seed);
    auto table = power_sum_table(std::max(seed.size(), 1), order, &power_sum_ogf);
    return cycle_index_substitute(z, order, table);
}

PowerSeries sprout_egf(const Poset& seed, int order) {
    if (!is_seed(seed)) throw NotASeed();
    PowerSeries base = exp_minus_one(order);
    PowerSeries out = PowerSeries::one(order);
    for (int i = 0; i < seed.size(); ++i) out *= base;
    Rational inv_aut = Rational(1) / Rational(automorphism_count(seed));
    return inv_aut * out;
}

uint32_t faithful_part(const Poset& p) {
    uint32_t moved = 0;
    for (const auto& g : automorphisms(p))
        for (int v = 0; v < p.size(); ++v)
            if (g[static_cast<size_t>(v)] != v) moved |= 1u << v;
    return moved;
}

PowerSeries r_k_factor(const Poset& seed, int order) {
    if (!is_seed(seed)) throw NotASeed();
    auto auts = automorphisms(seed);
    uint32_t moved = 0;
    for (const auto& g : auts)
        for (int v = 0; v < seed.size(); ++v)
            if (g[static_cast<size_t>(v)] != v) moved |= 1u << v;
    int k = std::popcount(moved);
    if (k == 0) return PowerSeries::one(order);
    int work = order + k;
    auto table = power_sum_table(seed.size(), work, &power_sum_ogf);
    // numerator: sum over g of the product of p_len over the cycles of g
    // lying inside the faithful part (valuation k for every g)
    PowerSeries num(work);
    for (const auto& g : auts) {
        PowerSeries term = PowerSeries::one(work);
        std::vector<char> seen(g.size(), 0);
        for (size_t v = 0; v < g.size(); ++v) {
            if (seen[v] || !((moved >> v) & 1u)) continue;
            int len = 0;
            size_t u = v;
            while (!seen[u]) {
                seen[u] = 1;
                ++len;
                u = static_cast<size_t>(g[u]);
            }
            term *= table[static_cast<size_t>(len)];
        }
        num += term;
    }
    PowerSeries den = PowerSeries::one(work);
    for (int i = 0; i < k; ++i) den *= table[1];
    PowerSeries ratio = num.shift_divide(k) * den.shift_divide(k).inverse();
    return (Rational(1, static_cast<long>(auts.size())) * ratio).truncated(order);
}

PowerSeries trictionary(const PowerSeries& input, Trictionary direction) {
    int order = input.order();
    switch (direction) {
        case Trictionary::SeedToEgf: return input.compose(exp_minus_one(order));
        case Trictionary::SeedToOgf: return input.compose(geometric_x(order));
        case Trictionary::OgfToEgf: return input.compose(one_minus_exp_neg(order));
        case Trictionary::EgfToOgf: return input.compose(neg_log_one_minus(order));
        case Trictionary::OgfToSeed: {
            PowerSeries inner(order);  // x/(1+x)
            for (int kk = 1; kk <= order; ++kk) inner.coeff_mut(kk) = (kk % 2) ? 1 : -1;
            return input.compose(inner);
        }
        case Trictionary::EgfToSeed: {
            PowerSeries inner(order);  // log(1+x)
            for (int kk = 1; kk <= order; ++kk)
                inner.coeff_mut(kk) = Rational((kk % 2) ? 1 : -1, kk);
            return input.compose(inner);
        }
    }
    throw SeriesError("unknown trictionary direction");
}

}  // namespace posetgf::seeds
