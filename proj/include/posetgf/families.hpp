#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace posetgf {

// The poset families the census and the engines know about. WeakGradings is
// the family of posets *equipped with* a weak grading (what the weakly-graded
// transfer matrix enumerates); it is not a census family because its members
// are poset/rank-function pairs rather than posets.
enum class Family {
    AllPosets,
    WeaklyGraded,
    Graded,
    GradedSemiorder,
    GradedInterval,
    Graded31,
    IntervalOrder,
    Semiorder,
    WeakGradings,
};

inline constexpr std::array<Family, 9> kAllFamilies = {
    Family::AllPosets,      Family::WeaklyGraded,  Family::Graded,
    Family::GradedSemiorder, Family::GradedInterval, Family::Graded31,
    Family::IntervalOrder,  Family::Semiorder,     Family::WeakGradings,
};

inline constexpr std::array<Family, 8> kCensusFamilies = {
    Family::AllPosets,      Family::WeaklyGraded,  Family::Graded,
    Family::GradedSemiorder, Family::GradedInterval, Family::Graded31,
    Family::IntervalOrder,  Family::Semiorder,
};

inline const char* family_name(Family f) {
    switch (f) {
        case Family::AllPosets: return "all_posets";
        case Family::WeaklyGraded: return "weakly_graded";
        case Family::Graded: return "graded";
        case Family::GradedSemiorder: return "graded_semiorder";
        case Family::GradedInterval: return "graded_interval";
        case Family::Graded31: return "graded_31";
        case Family::IntervalOrder: return "interval_order";
        case Family::Semiorder: return "semiorder";
        case Family::WeakGradings: return "weak_gradings";
    }
    return "?";
}

inline std::optional<Family> parse_family(std::string_view s) {
    for (Family f : kAllFamilies)
        if (s == family_name(f)) return f;
    if (s == "all_graded") return Family::Graded;
    if (s == "graded_31_avoiding") return Family::Graded31;
    return std::nullopt;
}

}  // namespace posetgf
