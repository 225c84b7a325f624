#pragma once

#include <vector>

#include "posetgf/series.hpp"

namespace posetgf {

// Truncated bivariate series with the EGF normalization fixed by convention:
// at(m, n) is the coefficient of x^m y^n / (m! n!), for 0 <= m, n <= order.
class BivariateSeries {
public:
    explicit BivariateSeries(int order)
        : order_(order), c_(static_cast<size_t>(order + 1) * static_cast<size_t>(order + 1)) {}

    int order() const { return order_; }
    const Rational& at(int m, int n) const { return c_[idx(m, n)]; }
    Rational& at(int m, int n) { return c_[idx(m, n)]; }

    // e^{a x + b y}: the (m, n) entry is a^m b^n.
    static BivariateSeries exp_linear(int order, int a, int b) {
        BivariateSeries s(order);
        for (int m = 0; m <= order; ++m)
            for (int n = 0; n <= order; ++n)
                s.at(m, n) = Rational(int_pow(Int(a), static_cast<unsigned>(m)) *
                                      int_pow(Int(b), static_cast<unsigned>(n)));
        return s;
    }

    friend BivariateSeries operator+(const BivariateSeries& a, const BivariateSeries& b);
    friend BivariateSeries operator-(const BivariateSeries& a, const BivariateSeries& b);
    friend BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b);
    friend bool operator==(const BivariateSeries& a, const BivariateSeries& b);

    BivariateSeries inverse() const;  // requires at(0,0) != 0

    // f(x, x) as a univariate series with plain (non-EGF) coefficients.
    PowerSeries diagonal() const;

private:
    size_t idx(int m, int n) const {
        return static_cast<size_t>(m) * static_cast<size_t>(order_ + 1) + static_cast<size_t>(n);
    }
    int order_;
    std::vector<Rational> c_;
};

}  // namespace posetgf
