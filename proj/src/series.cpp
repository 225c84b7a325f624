#include "posetgf/series.hpp"

#include <sstream>

namespace posetgf {

PowerSeries PowerSeries::inverse() const {
    if (c_[0] == 0) throw ZeroConstantTerm();
    int n = order();
    PowerSeries r(n);
    r.c_[0] = Rational(1) / c_[0];
    for (int k = 1; k <= n; ++k) {
        Rational acc = 0;
        for (int j = 1; j <= k; ++j) acc += c_[j] * r.c_[k - j];
        r.c_[k] = -acc / c_[0];
    }
    return r;
}

PowerSeries PowerSeries::compose(const PowerSeries& inner) const {
    if (inner.c_[0] != 0) throw NonzeroInnerConstant();
    int n = std::min(order(), inner.order());
    PowerSeries g = inner.truncated(n);
    PowerSeries r = PowerSeries::constant(n, c_[static_cast<size_t>(n)]);
    for (int k = n - 1; k >= 0; --k) {
        r = r * g;
        r.c_[0] += c_[static_cast<size_t>(k)];
    }
    return r;
}

PowerSeries PowerSeries::sqrt() const {
    if (c_[0] != 1) throw BadConstantTerm();
    int n = order();
    PowerSeries r(n);
    r.c_[0] = 1;
    for (int k = 1; k <= n; ++k) {
        Rational acc = c_[k];
        for (int i = 1; i < k; ++i) acc -= r.c_[i] * r.c_[k - i];
        r.c_[k] = acc / 2;
    }
    return r;
}

PowerSeries PowerSeries::shift_divide(int k) const {
    if (k == 0) return *this;
    if (k > order()) throw NonzeroLowOrderTerm();
    for (int i = 0; i < k; ++i)
        if (c_[i] != 0) throw NonzeroLowOrderTerm();
    PowerSeries r(order() - k);
    for (int i = 0; i <= r.order(); ++i) r.c_[i] = c_[i + k];
    return r;
}

PowerSeries PowerSeries::shift_multiply(int k) const {
    PowerSeries r(order());
    for (int i = 0; i + k <= order(); ++i) r.c_[i + k] = c_[i];
    return r;
}

std::string PowerSeries::str() const {
    std::ostringstream os;
    os << "[";
    for (int k = 0; k <= order(); ++k) {
        if (k) os << ", ";
        os << c_[k];
    }
    os << "]";
    return os.str();
}

PowerSeries exp_series(int order) {
    PowerSeries s(order);
    Rational c = 1;
    s.coeff_mut(0) = 1;
    for (int n = 1; n <= order; ++n) {
        c /= n;
        s.coeff_mut(n) = c;
    }
    return s;
}

PowerSeries exp_minus_one(int order) {
    PowerSeries s = exp_series(order);
    s.coeff_mut(0) = 0;
    return s;
}

PowerSeries one_minus_exp_neg(int order) {
    PowerSeries s(order);
    Rational c = 1;
    for (int n = 1; n <= order; ++n) {
        c /= n;
        s.coeff_mut(n) = (n % 2 == 1) ? c : -c;
    }
    return s;
}

PowerSeries geometric_x(int order) {
    PowerSeries s(order);
    for (int n = 1; n <= order; ++n) s.coeff_mut(n) = 1;
    return s;
}

PowerSeries neg_log_one_minus(int order) {
    PowerSeries s(order);
    for (int n = 1; n <= order; ++n) s.coeff_mut(n) = Rational(1, n);
    return s;
}

PowerSeries named_series(NamedSeries which, int order) {
    switch (which) {
        case NamedSeries::Exp: return exp_series(order);
        case NamedSeries::ExpMinusOne: return exp_minus_one(order);
        case NamedSeries::OneMinusExpNeg: return one_minus_exp_neg(order);
        case NamedSeries::Geom: return geometric_x(order);
        case NamedSeries::NegLogOneMinus: return neg_log_one_minus(order);
    }
    throw SeriesError("unknown named series");
}

PowerSeries scale_by_factorials(const PowerSeries& s) {
    PowerSeries r(s.order());
    Int f = 1;
    for (int n = 0; n <= s.order(); ++n) {
        if (n) f *= n;
        r.coeff_mut(n) = s.coeff(n) * Rational(f);
    }
    return r;
}

PowerSeries scale_by_inverse_factorials(const PowerSeries& s) {
    PowerSeries r(s.order());
    Int f = 1;
    for (int n = 0; n <= s.order(); ++n) {
        if (n) f *= n;
        r.coeff_mut(n) = s.coeff(n) / Rational(f);
    }
    return r;
}

std::vector<Int> egf_counts(const PowerSeries& s) {
    std::vector<Int> counts;
    counts.reserve(static_cast<size_t>(s.order()) + 1);
    Int f = 1;
    for (int n = 0; n <= s.order(); ++n) {
        if (n) f *= n;
        Rational v = s.coeff(n) * Rational(f);
        if (!is_integer(v)) throw NonIntegerCount();
        counts.push_back(to_integer(v));
    }
    return counts;
}

std::vector<Int> ogf_counts(const PowerSeries& s) {
    std::vector<Int> counts;
    counts.reserve(static_cast<size_t>(s.order()) + 1);
    for (int n = 0; n <= s.order(); ++n) {
        if (!is_integer(s.coeff(n))) throw NonIntegerCount();
        counts.push_back(to_integer(s.coeff(n)));
    }
    return counts;
}

PowerSeries egf_from_counts(const std::vector<Int>& counts) {
    PowerSeries s(static_cast<int>(counts.size()) - 1);
    Int f = 1;
    for (int n = 0; n < static_cast<int>(counts.size()); ++n) {
        if (n) f *= n;
        s.coeff_mut(n) = Rational(counts[static_cast<size_t>(n)]) / Rational(f);
    }
    return s;
}

PowerSeries ogf_from_counts(const std::vector<Int>& counts) {
    PowerSeries s(static_cast<int>(counts.size()) - 1);
    for (int n = 0; n < static_cast<int>(counts.size()); ++n)
        s.coeff_mut(n) = Rational(counts[static_cast<size_t>(n)]);
    return s;
}

}  // namespace posetgf
