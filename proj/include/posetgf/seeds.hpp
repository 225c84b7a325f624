#pragma once

#include <map>
#include <vector>

#include "posetgf/poset.hpp"
#include "posetgf/series.hpp"

namespace posetgf {

struct NotExchangeable : PosetError {
    NotExchangeable() : PosetError("vertex has no exchangeable partner") {}
};
struct NotASeed : PosetError {
    NotASeed() : PosetError("poset has an exchangeable pair, not a seed") {}
};

namespace seeds {

// Unordered pairs {x, x'} of incomparable vertices with identical
// comparabilities to every third vertex.
std::vector<std::pair<int, int>> exchangeable_pairs(const Poset& p);
bool is_seed(const Poset& p);

Poset clone_vertex(const Poset& p, int v);
Poset declone_vertex(const Poset& p, int v);  // throws NotExchangeable

struct SeedDecomposition {
    Poset seed;
    std::vector<int> multiplicity;  // per seed vertex, >= 1
};

// Repeatedly declones until no exchangeable pair remains. Deterministic:
// always removes the larger vertex of the first exchangeable pair.
SeedDecomposition seed_of(const Poset& p);

bool is_primitive(const Poset& p);

// Cycle index of Aut(p) acting on vertices: map from cycle type (partition,
// sorted descending) to rational weight; weights sum to 1.
struct CycleIndex {
    std::map<std::vector<int>, Rational> terms;
};
CycleIndex cycle_index(const Poset& p);

// Substitute the power sum p_i by the given per-i series and expand.
PowerSeries cycle_index_substitute(const CycleIndex& z, int order,
                                   const std::vector<PowerSeries>& power_sum_values);
// p_i -> x^i/(1-x^i) (each clone-count j contributes weight x^j).
PowerSeries power_sum_ogf(int i, int order);
// p_i -> sum_j x^{ij}/(j!)^i (clone-count j carries weight x^j/j!).
PowerSeries power_sum_egf(int i, int order);

// OGF of unlabeled sprouts of a seed; (x/(1-x))^m for a primitive seed.
PowerSeries sprout_ogf(const Poset& seed, int order);
// EGF of labeled sprouts of a seed: (e^x-1)^m / |Aut|.
PowerSeries sprout_egf(const Poset& seed, int order);

// Correction factor from the faithful part (vertices moved by at least one
// automorphism): sprout_ogf = (x/(1-x))^m * r_k_factor. Equals 1 for
// primitive seeds.
PowerSeries r_k_factor(const Poset& seed, int order);
uint32_t faithful_part(const Poset& p);

// The substitutions relating seed EGF, unlabeled OGF and labeled EGF of a
// garden whose seeds are all primitive, plus their inverses.
enum class Trictionary {
    SeedToEgf,  // E(x) = S(e^x - 1)
    SeedToOgf,  // O(x) = S(x/(1-x))
    OgfToEgf,   // E(x) = O(1 - e^{-x})
    EgfToOgf,   // O(x) = E(-log(1-x))
    OgfToSeed,  // S(x) = O(x/(1+x))
    EgfToSeed,  // S(x) = E(log(1+x))
};
PowerSeries trictionary(const PowerSeries& input, Trictionary direction);

}  // namespace seeds
}  // namespace posetgf
