#include "posetgf/bivariate.hpp"

#include <algorithm>

namespace posetgf {

BivariateSeries operator+(const BivariateSeries& a, const BivariateSeries& b) {
    int n = std::min(a.order(), b.order());
    BivariateSeries r(n);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) r.at(i, j) = a.at(i, j) + b.at(i, j);
    return r;
}

BivariateSeries operator-(const BivariateSeries& a, const BivariateSeries& b) {
    int n = std::min(a.order(), b.order());
    BivariateSeries r(n);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) r.at(i, j) = a.at(i, j) - b.at(i, j);
    return r;
}

// EGF product rule: c(m,n) = sum C(m,i) C(n,j) a(i,j) b(m-i,n-j).
BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b) {
    int n = std::min(a.order(), b.order());
    BivariateSeries r(n);
    for (int m = 0; m <= n; ++m)
        for (int k = 0; k <= n; ++k) {
            Rational acc = 0;
            for (int i = 0; i <= m; ++i) {
                Int bm = binomial(m, i);
                for (int j = 0; j <= k; ++j) {
                    const Rational& av = a.at(i, j);
                    if (av == 0) continue;
                    const Rational& bv = b.at(m - i, k - j);
                    if (bv == 0) continue;
                    acc += Rational(bm * binomial(k, j)) * av * bv;
                }
            }
            r.at(m, k) = acc;
        }
    return r;
}

bool operator==(const BivariateSeries& a, const BivariateSeries& b) {
    int n = std::min(a.order(), b.order());
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
            if (a.at(i, j) != b.at(i, j)) return false;
    return true;
}

BivariateSeries BivariateSeries::inverse() const {
    if (at(0, 0) == 0) throw ZeroConstantTerm();
    int n = order_;
    // Work with plain monomial coefficients, solve graded by (m+n), then
    // convert back to the EGF normalization.
    auto fact = [](int k) { return factorial(k); };
    std::vector<std::vector<Rational>> pa(n + 1, std::vector<Rational>(n + 1)),
        pb(n + 1, std::vector<Rational>(n + 1));
    for (int m = 0; m <= n; ++m)
        for (int k = 0; k <= n; ++k) pa[m][k] = at(m, k) / Rational(fact(m) * fact(k));
    pb[0][0] = Rational(1) / pa[0][0];
    for (int deg = 1; deg <= 2 * n; ++deg) {
        for (int m = std::max(0, deg - n); m <= std::min(n, deg); ++m) {
            int k = deg - m;
            Rational acc = 0;
            for (int i = 0; i <= m; ++i)
                for (int j = 0; j <= k; ++j) {
                    if (i == 0 && j == 0) continue;
                    if (pa[i][j] == 0) continue;
                    acc += pa[i][j] * pb[m - i][k - j];
                }
            pb[m][k] = -acc / pa[0][0];
        }
    }
    BivariateSeries r(n);
    for (int m = 0; m <= n; ++m)
        for (int k = 0; k <= n; ++k) r.at(m, k) = pb[m][k] * Rational(fact(m) * fact(k));
    return r;
}

PowerSeries BivariateSeries::diagonal() const {
    PowerSeries s(order_);
    for (int m = 0; m <= order_; ++m)
        for (int n = 0; m + n <= order_; ++n)
            s.coeff_mut(m + n) += at(m, n) / Rational(factorial(m) * factorial(n));
    return s;
}

}  // namespace posetgf
