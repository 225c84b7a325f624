#include "posetgf/engines.hpp"

#include <functional>
#include <vector>

namespace posetgf::engines {

Int stirling2(int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    std::vector<std::vector<Int>> s(static_cast<size_t>(n) + 1,
                                    std::vector<Int>(static_cast<size_t>(n) + 1, 0));
    s[0][0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= i; ++j)
            s[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                s[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] +
                Int(j) * s[static_cast<size_t>(i - 1)][static_cast<size_t>(j)];
    return s[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

Int psi_w(int m, int n) { return int_pow(Int(2), static_cast<unsigned>(m * n)); }

// inclusion-exclusion over isolated vertices on both sides
Int psi_s(int m, int n) {
    Int total = 0;
    for (int j = 0; j <= m; ++j)
        for (int k = 0; k <= n; ++k) {
            Int term = binomial(m, j) * binomial(n, k) * int_pow(Int(2), static_cast<unsigned>(j * k));
            if ((m - j + n - k) % 2) total -= term;
            else total += term;
        }
    return total;
}

Int psi_22(int m, int n) {
    Int total = 0;
    for (int j = 0; j <= std::min(m, n); ++j) {
        Int jf = factorial(j);
        total += jf * jf * stirling2(n, j) * stirling2(m, j);
    }
    return total;
}

BivariateSeries bivariate_psi(PsiKind kind, int order) {
    BivariateSeries s(order);
    for (int m = 0; m <= order; ++m)
        for (int n = 0; n <= order; ++n) {
            switch (kind) {
                case PsiKind::Weak: s.at(m, n) = Rational(psi_w(m, n)); break;
                case PsiKind::Strong: s.at(m, n) = Rational(psi_s(m, n)); break;
                case PsiKind::TwoTwo: s.at(m, n) = Rational(psi_22(m, n)); break;
            }
        }
    return s;
}

BivariateSeries psi_22_closed_form(int order) {
    BivariateSeries ex = BivariateSeries::exp_linear(order, 1, 0);   // e^x
    BivariateSeries ey = BivariateSeries::exp_linear(order, 0, 1);   // e^y
    BivariateSeries exy = BivariateSeries::exp_linear(order, 1, 1);  // e^{x+y}
    return (ex + ey - exy).inverse();
}

PowerSeries psi_w_diagonal(int order) {
    PowerSeries s(order);
    for (int m = 0; m <= order; ++m)
        for (int n = 0; m + n <= order; ++n)
            s.coeff_mut(m + n) += Rational(psi_w(m, n)) / Rational(factorial(m) * factorial(n));
    return s;
}

namespace {

// Asymmetric transfer step for the all-graded/weakly-graded engines:
// row vector u_i = x^i/i! (i = 1..R), step matrix M_{ij} = psi(i,j) x^j/j!.
// Height h contributes u . M^{h-1} . ones; every step adds at least one
// factor of x, so the height sum terminates at the truncation order.
PowerSeries graded_transfer(int order, TransferOptions opts, Int (*psi)(int, int)) {
    int R = opts.matrix_dim.value_or(order);
    if (R < 0) R = 0;
    std::vector<Rational> xi(static_cast<size_t>(R) + 1);  // x^i/i! coefficient
    Int f = 1;
    for (int i = 1; i <= R; ++i) {
        f *= i;
        xi[static_cast<size_t>(i)] = Rational(1, 1) / Rational(f);
    }
    // current row vector of series, indexed 1..R
    std::vector<PowerSeries> u(static_cast<size_t>(R) + 1, PowerSeries(order));
    for (int i = 1; i <= R && i <= order; ++i) u[static_cast<size_t>(i)] = PowerSeries::monomial(order, i, xi[static_cast<size_t>(i)]);

    auto row_sum = [&](const std::vector<PowerSeries>& v) {
        PowerSeries s(order);
        for (int i = 1; i <= R; ++i) s += v[static_cast<size_t>(i)];
        return s;
    };
    auto row_is_zero = [&](const std::vector<PowerSeries>& v) {
        for (int i = 1; i <= R; ++i)
            if (v[static_cast<size_t>(i)].valuation() <= order) return false;
        return true;
    };
    auto step = [&](const std::vector<PowerSeries>& v) {
        std::vector<PowerSeries> next(static_cast<size_t>(R) + 1, PowerSeries(order));
        for (int j = 1; j <= R; ++j) {
            PowerSeries acc(order);
            for (int i = 1; i <= R; ++i) {
                if (v[static_cast<size_t>(i)].valuation() > order) continue;
                acc += Rational(psi(i, j)) * v[static_cast<size_t>(i)];
            }
            // multiply by x^j/j!
            next[static_cast<size_t>(j)] = (xi[static_cast<size_t>(j)] * acc).shift_multiply(j);
        }
        return next;
    };

    if (opts.height) {
        int k = *opts.height;
        if (k < 1) throw SeriesError("height must be >= 1");
        for (int s = 1; s < k; ++s) {
            if (row_is_zero(u)) break;
            u = step(u);
        }
        return row_sum(u);
    }
    PowerSeries total = PowerSeries::one(order);  // empty poset
    while (!row_is_zero(u)) {
        total += row_sum(u);
        u = step(u);
    }
    return total;
}

}  // namespace

PowerSeries all_graded_egf(int order, TransferOptions opts) {
    return graded_transfer(order, opts, &psi_s);
}

PowerSeries weakly_graded_egf(int order, TransferOptions opts) {
    return graded_transfer(order, opts, &psi_w);
}

PowerSeries interval_graded_matrix_entry(int m, int n, int order) {
    PowerSeries a(order);
    Int nf = factorial(n);
    Int lf = 1;
    for (int l = 0; l + n <= order; ++l) {
        if (l) lf *= l;
        Int inner = 0;
        for (int mp = 0; mp <= m; ++mp) inner += binomial(m, mp) * psi_22(n, l + mp);
        a.coeff_mut(l + n) += Rational(inner) / Rational(lf * nf);
    }
    return a;
}

PowerSeries graded_interval_egf(int order, TransferOptions opts) {
    int R = opts.matrix_dim.value_or(order + 1);
    if (R < 1) R = 1;
    std::vector<std::vector<PowerSeries>> A(
        static_cast<size_t>(R), std::vector<PowerSeries>(static_cast<size_t>(R), PowerSeries(order)));
    for (int m = 0; m < R; ++m)
        for (int n = 0; n < R; ++n) A[static_cast<size_t>(m)][static_cast<size_t>(n)] = interval_graded_matrix_entry(m, n, order);
    PowerSeries em1 = exp_minus_one(order);

    // w_k = A^k e_0, entry by entry; P_k = (e^x-1)^k * w_k[0]
    std::vector<PowerSeries> w(static_cast<size_t>(R), PowerSeries(order));
    w[0] = PowerSeries::one(order);
    PowerSeries em1_pow = PowerSeries::one(order);

    auto apply = [&](const std::vector<PowerSeries>& v) {
        std::vector<PowerSeries> next(static_cast<size_t>(R), PowerSeries(order));
        for (int i = 0; i < R; ++i) {
            PowerSeries acc(order);
            for (int j = 0; j < R; ++j) {
                if (v[static_cast<size_t>(j)].valuation() > order) continue;
                acc += A[static_cast<size_t>(i)][static_cast<size_t>(j)] * v[static_cast<size_t>(j)];
            }
            next[static_cast<size_t>(i)] = acc;
        }
        return next;
    };

    if (opts.height) {
        int k = *opts.height;
        if (k < 1) throw SeriesError("height must be >= 1");
        for (int s = 0; s < k; ++s) {
            w = apply(w);
            em1_pow *= em1;
        }
        return em1_pow * w[0];
    }
    PowerSeries total = PowerSeries::one(order);  // empty poset
    for (int k = 1; k <= order; ++k) {
        w = apply(w);
        em1_pow *= em1;
        if (em1_pow.valuation() > order) break;
        total += em1_pow * w[0];
    }
    return total;
}

namespace {

PowerSeries poly(int order, std::vector<Rational> coeffs) {
    PowerSeries s(order);
    for (int i = 0; i < static_cast<int>(coeffs.size()) && i <= order; ++i)
        s.coeff_mut(i) = coeffs[static_cast<size_t>(i)];
    return s;
}

}  // namespace

PowerSeries graded_semiorder_ogf(int order) {
    // (1 - 3x + 2x^2 - x^3) / ((1-x)(1 - 3x + x^2))
    PowerSeries num = poly(order, {1, -3, 2, -1});
    PowerSeries den = poly(order, {1, -1}) * poly(order, {1, -3, 1});
    return num * den.inverse();
}

PowerSeries faceoff_ogf(int order) {
    // (1-x)^2 / (1-2x)
    PowerSeries num = poly(order, {1, -2, 1});
    return num * poly(order, {1, -2}).inverse();
}

PowerSeries graded_semiorder_assembled_ogf(int order) {
    PowerSeries z = geometric_x(order);
    PowerSeries t = faceoff_ogf(order);
    PowerSeries zt = z * t;
    PowerSeries one = PowerSeries::one(order);
    return one + z * (one - zt).inverse();
}

PowerSeries graded_semiorder_seed_egf(int order) {
    // 1 + x + x^2/(1 - x - x^2)
    PowerSeries head = poly(order, {1, 1});
    PowerSeries fib = poly(order, {1, -1, -1}).inverse();
    return head + fib.shift_multiply(2);
}

PowerSeries graded_31_egf(int order) {
    PowerSeries w = psi_w_diagonal(order);
    PowerSeries ex = exp_series(order);
    PowerSeries e2x = ex * ex;
    PowerSeries two = PowerSeries::constant(order, 2);
    PowerSeries one = PowerSeries::one(order);
    PowerSeries num = two * ex + (ex - two) * w;
    PowerSeries den = two * e2x + ex + (e2x - two * ex - one) * w;
    return ex - one + num * den.inverse();
}

namespace {

// sum over n of prod_{k=1..n} factor(k), truncated when the next product's
// valuation exceeds the order; every factor has valuation 1.
PowerSeries sum_of_products(int order, const std::function<PowerSeries(int)>& factor) {
    PowerSeries total = PowerSeries::one(order);  // n = 0 empty product
    PowerSeries prod = PowerSeries::one(order);
    for (int n = 1; n <= order; ++n) {
        prod *= factor(n);
        if (prod.valuation() > order) break;
        total += prod;
    }
    return total;
}

PowerSeries one_minus_exp_neg_k(int order, int k) {
    PowerSeries s(order);
    Rational c = 1;
    for (int i = 1; i <= order; ++i) {
        c *= Rational(k, i);
        s.coeff_mut(i) = (i % 2 == 1) ? c : -c;
    }
    return s;
}

PowerSeries binomial_power(int order, Rational base_x_coeff, int k) {
    // (1 + base_x_coeff * x)^k for integer k (negative allowed via inverse)
    PowerSeries lin = PowerSeries::one(order);
    lin.coeff_mut(1) = base_x_coeff;
    PowerSeries out = PowerSeries::one(order);
    int e = k >= 0 ? k : -k;
    for (int i = 0; i < e; ++i) out *= lin;
    return k >= 0 ? out : out.inverse();
}

}  // namespace

PowerSeries literature_gf(LiteratureGf which, int order) {
    switch (which) {
        case LiteratureGf::WineFreund: {
            // (1 - sqrt(1-4x)) / (2x)
            int work = order + 1;
            PowerSeries root = poly(work, {1, -4}).sqrt();
            PowerSeries num = PowerSeries::one(work) - root;
            return (Rational(1, 2) * num.shift_divide(1)).truncated(order);
        }
        case LiteratureGf::StanleySemi: {
            // (1 - sqrt(4e^{-x} - 3)) / (2(1 - e^{-x}))
            int work = order + 1;
            PowerSeries eneg = one_minus_exp_neg(work);  // 1 - e^{-x}
            PowerSeries inner = PowerSeries::constant(work, 4) -
                                Rational(4) * eneg - PowerSeries::constant(work, 3);
            PowerSeries num = PowerSeries::one(work) - inner.sqrt();
            PowerSeries den = Rational(2) * eneg;
            return (num.shift_divide(1) * den.shift_divide(1).inverse()).truncated(order);
        }
        case LiteratureGf::Zagier:
            return sum_of_products(order, [order](int k) {
                return one_minus_exp_neg_k(order, k);  // 1 - e^{-kx}
            });
        case LiteratureGf::BousquetMelou:
            return sum_of_products(order, [order](int k) {
                return PowerSeries::one(order) - binomial_power(order, -1, k);
            });
        case LiteratureGf::IntervalSeed:
            return sum_of_products(order, [order](int k) {
                return PowerSeries::one(order) - binomial_power(order, 1, -k);
            });
    }
    throw SeriesError("unknown literature generating function");
}

}  // namespace posetgf::engines
