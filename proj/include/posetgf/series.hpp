#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "posetgf/rational.hpp"

namespace posetgf {

struct SeriesError : std::domain_error {
    using std::domain_error::domain_error;
};
struct ZeroConstantTerm : SeriesError {
    ZeroConstantTerm() : SeriesError("series has zero constant term, not invertible") {}
};
struct NonzeroInnerConstant : SeriesError {
    NonzeroInnerConstant() : SeriesError("inner series of a composition must have zero constant term") {}
};
struct BadConstantTerm : SeriesError {
    BadConstantTerm() : SeriesError("series square root requires constant term 1") {}
};
struct NonzeroLowOrderTerm : SeriesError {
    NonzeroLowOrderTerm() : SeriesError("cannot divide by x^k: low-order coefficients are nonzero") {}
};
struct NonIntegerCount : SeriesError {
    NonIntegerCount() : SeriesError("coefficient does not scale to an integer count") {}
};

// Truncated formal power series over exact rationals. A series of order N
// stores coefficients of x^0..x^N; everything above is unknown, not zero.
// Binary operations truncate to the smaller order of the two operands.
class PowerSeries {
public:
    explicit PowerSeries(int order) : c_(static_cast<size_t>(order) + 1) {}
    PowerSeries(int order, std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
        c_.resize(static_cast<size_t>(order) + 1);
    }

    static PowerSeries constant(int order, const Rational& value) {
        PowerSeries s(order);
        s.c_[0] = value;
        return s;
    }
    static PowerSeries one(int order) { return constant(order, 1); }
    static PowerSeries monomial(int order, int k, const Rational& value = 1) {
        PowerSeries s(order);
        if (k <= order) s.c_[static_cast<size_t>(k)] = value;
        return s;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& coeff(int k) const { return c_.at(static_cast<size_t>(k)); }
    Rational& coeff_mut(int k) { return c_.at(static_cast<size_t>(k)); }

    // First index with a nonzero coefficient; order()+1 when all stored
    // coefficients vanish.
    int valuation() const {
        for (int k = 0; k <= order(); ++k)
            if (c_[static_cast<size_t>(k)] != 0) return k;
        return order() + 1;
    }

    PowerSeries truncated(int new_order) const {
        if (new_order >= order()) return *this;
        std::vector<Rational> c(c_.begin(), c_.begin() + new_order + 1);
        return PowerSeries(new_order, std::move(c));
    }

    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
        int n = std::min(a.order(), b.order());
        PowerSeries r(n);
        for (int k = 0; k <= n; ++k) r.c_[k] = a.c_[k] + b.c_[k];
        return r;
    }
    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
        int n = std::min(a.order(), b.order());
        PowerSeries r(n);
        for (int k = 0; k <= n; ++k) r.c_[k] = a.c_[k] - b.c_[k];
        return r;
    }
    PowerSeries operator-() const {
        PowerSeries r(order());
        for (int k = 0; k <= order(); ++k) r.c_[k] = -c_[k];
        return r;
    }
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
        int n = std::min(a.order(), b.order());
        PowerSeries r(n);
        for (int i = 0; i <= n; ++i) {
            if (a.c_[i] == 0) continue;
            for (int j = 0; i + j <= n; ++j) {
                if (b.c_[j] == 0) continue;
                r.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return r;
    }
    friend PowerSeries operator*(const Rational& s, const PowerSeries& a) {
        PowerSeries r(a.order());
        for (int k = 0; k <= a.order(); ++k) r.c_[k] = s * a.c_[k];
        return r;
    }
    PowerSeries& operator+=(const PowerSeries& b) { return *this = *this + b; }
    PowerSeries& operator-=(const PowerSeries& b) { return *this = *this - b; }
    PowerSeries& operator*=(const PowerSeries& b) { return *this = *this * b; }

    // Equal iff coefficient-wise equal up to the smaller truncation order.
    friend bool operator==(const PowerSeries& a, const PowerSeries& b) {
        int n = std::min(a.order(), b.order());
        for (int k = 0; k <= n; ++k)
            if (a.c_[k] != b.c_[k]) return false;
        return true;
    }
    friend bool operator!=(const PowerSeries& a, const PowerSeries& b) { return !(a == b); }

    PowerSeries inverse() const;
    PowerSeries compose(const PowerSeries& inner) const;
    PowerSeries sqrt() const;
    PowerSeries shift_divide(int k) const;  // a(x)/x^k, order drops by k
    PowerSeries shift_multiply(int k) const;

    std::string str() const;

private:
    std::vector<Rational> c_;
};

enum class NamedSeries { Exp, ExpMinusOne, OneMinusExpNeg, Geom, NegLogOneMinus };

PowerSeries named_series(NamedSeries which, int order);
PowerSeries exp_series(int order);
PowerSeries exp_minus_one(int order);
PowerSeries one_minus_exp_neg(int order);  // 1 - e^{-x}
PowerSeries geometric_x(int order);        // x/(1-x)
PowerSeries neg_log_one_minus(int order);  // -log(1-x)

// EGF/OGF are a convention at call sites; these helpers move between the
// coefficient normalizations and extract integer counts.
PowerSeries scale_by_factorials(const PowerSeries& s);          // c_n -> c_n * n!
PowerSeries scale_by_inverse_factorials(const PowerSeries& s);  // c_n -> c_n / n!
std::vector<Int> egf_counts(const PowerSeries& s);              // c_n * n!, must be integral
std::vector<Int> ogf_counts(const PowerSeries& s);              // c_n, must be integral
PowerSeries egf_from_counts(const std::vector<Int>& counts);
PowerSeries ogf_from_counts(const std::vector<Int>& counts);

}  // namespace posetgf
