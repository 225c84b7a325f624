#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "posetgf/bivariate.hpp"
#include "posetgf/series.hpp"

using namespace posetgf;

namespace {

PowerSeries poly(int order, std::vector<Rational> c) { return PowerSeries(order, std::move(c)); }

// independent oracle: ordered set partitions by the binomial recurrence
// a(n) = sum_{k=1..n} C(n,k) a(n-k)
std::vector<Int> fubini_counts(int n_max) {
    std::vector<Int> a(static_cast<size_t>(n_max) + 1);
    a[0] = 1;
    for (int n = 1; n <= n_max; ++n) {
        Int s = 0;
        for (int k = 1; k <= n; ++k) s += binomial(n, k) * a[static_cast<size_t>(n - k)];
        a[static_cast<size_t>(n)] = s;
    }
    return a;
}

}  // namespace

TEST_CASE("ring operations") {
    PowerSeries one_plus = poly(8, {1, 1});
    PowerSeries one_minus = poly(8, {1, -1});
    CHECK(one_plus + one_minus == PowerSeries::constant(8, 2));
    CHECK(one_plus * one_minus == poly(8, {1, 0, -1}));
    PowerSeries x = PowerSeries::monomial(8, 1);
    CHECK(x * x == PowerSeries::monomial(8, 2));
    for (int k = 3; k <= 8; ++k) CHECK((x * x).coeff(k) == 0);
    CHECK((one_plus - one_plus).valuation() == 9);
}

TEST_CASE("equality compares up to the smaller order") {
    PowerSeries a = poly(5, {1, 2, 3});
    PowerSeries b = poly(3, {1, 2, 3});
    CHECK(a == b);
    PowerSeries c = poly(3, {1, 2, 4});
    CHECK(a != c);
}

TEST_CASE("inverse") {
    PowerSeries geom = poly(10, {1, -1}).inverse();
    for (int k = 0; k <= 10; ++k) CHECK(geom.coeff(k) == 1);
    CHECK(PowerSeries::one(6).inverse() == PowerSeries::one(6));
    CHECK_THROWS_AS(PowerSeries::monomial(4, 1).inverse(), ZeroConstantTerm);

    // 1/(2 - e^x) has Fubini-number EGF coefficients; the figure value 501 at
    // n=5 is a misprint for 541
    PowerSeries fub = (PowerSeries::constant(12, 2) - exp_series(12)).inverse();
    std::vector<Int> expected = fubini_counts(12);
    CHECK(egf_counts(fub) == expected);
    CHECK(expected[5] == 541);
}

TEST_CASE("inverse and multiply are mutually inverse") {
    for (auto& coeffs : {std::vector<Rational>{1, 5, -2, Rational(1, 3)},
                         std::vector<Rational>{2, 0, 7}, std::vector<Rational>{-1, 1, 1, 1}}) {
        PowerSeries a = poly(9, coeffs);
        CHECK(a * a.inverse() == PowerSeries::one(9));
    }
}

TEST_CASE("compose") {
    // 1/(1-x) o (1 - e^{-x}) = e^x
    PowerSeries f = poly(10, {1, -1}).inverse();
    CHECK(f.compose(one_minus_exp_neg(10)) == exp_series(10));
    // identity substitution
    PowerSeries g = poly(10, {0, 1, 4, Rational(1, 2)});
    CHECK(g.compose(PowerSeries::monomial(10, 1)) == g);
    // (1 + x) o (e^x - 1) = e^x
    CHECK(poly(10, {1, 1}).compose(exp_minus_one(10)) == exp_series(10));
    CHECK_THROWS_AS(f.compose(PowerSeries::one(10)), NonzeroInnerConstant);
}

TEST_CASE("compose associativity") {
    std::vector<PowerSeries> outers = {poly(9, {1, 2, 3, 4}), exp_series(9),
                                       poly(9, {0, 1, -1, Rational(2, 5)})};
    std::vector<PowerSeries> inners = {exp_minus_one(9), geometric_x(9),
                                       poly(9, {0, 2, 0, 1})};
    for (const auto& f : outers)
        for (const auto& g : inners)
            for (const auto& h : inners)
                CHECK(f.compose(g).compose(h) == f.compose(g.compose(h)));
}

TEST_CASE("compose round trip through the EGF/OGF substitution pair") {
    PowerSeries f = poly(10, {1, 3, -2, Rational(7, 2), 1});
    PowerSeries round = f.compose(one_minus_exp_neg(10)).compose(neg_log_one_minus(10));
    CHECK(round == f);
    PowerSeries round2 = f.compose(neg_log_one_minus(10)).compose(one_minus_exp_neg(10));
    CHECK(round2 == f);
}

TEST_CASE("sqrt") {
    CHECK(PowerSeries::one(8).sqrt() == PowerSeries::one(8));
    PowerSeries sq = poly(8, {1, 2, 1});
    CHECK(sq.sqrt() == poly(8, {1, 1}));
    // binomial series of (1-4x)^{1/2}
    PowerSeries r = poly(8, {1, -4}).sqrt();
    CHECK(r.coeff(0) == 1);
    CHECK(r.coeff(1) == -2);
    CHECK(r.coeff(2) == -2);
    CHECK(r.coeff(3) == -4);
    CHECK(r.coeff(4) == -10);
    CHECK(r * r == poly(8, {1, -4}));
    CHECK_THROWS_AS(poly(5, {2, 1}).sqrt(), BadConstantTerm);
    // squaring property for a generic series with constant term 1
    PowerSeries a = poly(9, {1, 1, Rational(1, 2), 0, 3});
    CHECK(a.sqrt() * a.sqrt() == a);
}

TEST_CASE("shift_divide") {
    CHECK(PowerSeries::monomial(6, 2).shift_divide(1) == PowerSeries::monomial(5, 1));
    CHECK(PowerSeries(6).shift_divide(1) == PowerSeries(5));
    CHECK_THROWS_AS(poly(6, {0, 1, 1}).shift_divide(2), NonzeroLowOrderTerm);

    // Catalan numbers from (1 - sqrt(1-4x)) / (2x)
    PowerSeries num = PowerSeries::one(9) - poly(9, {1, -4}).sqrt();
    PowerSeries catalan = Rational(1, 2) * num.shift_divide(1);
    std::vector<Int> want = {1, 1, 2, 5, 14, 42, 132, 429};
    for (int k = 0; k <= 7; ++k) CHECK(catalan.coeff(k) == want[static_cast<size_t>(k)]);
}

TEST_CASE("named series coefficients") {
    PowerSeries em1 = named_series(NamedSeries::ExpMinusOne, 6);
    CHECK(em1.coeff(0) == 0);
    CHECK(em1.coeff(1) == 1);
    CHECK(em1.coeff(2) == Rational(1, 2));
    CHECK(em1.coeff(3) == Rational(1, 6));
    PowerSeries omen = named_series(NamedSeries::OneMinusExpNeg, 6);
    CHECK(omen.coeff(0) == 0);
    CHECK(omen.coeff(1) == 1);
    CHECK(omen.coeff(2) == Rational(-1, 2));
    CHECK(omen.coeff(3) == Rational(1, 6));
    PowerSeries geom = named_series(NamedSeries::Geom, 6);
    CHECK(geom.coeff(0) == 0);
    for (int k = 1; k <= 6; ++k) CHECK(geom.coeff(k) == 1);
    CHECK(named_series(NamedSeries::Exp, 6) == exp_series(6));
    CHECK(named_series(NamedSeries::NegLogOneMinus, 6).coeff(3) == Rational(1, 3));
}

TEST_CASE("count extraction guards integrality") {
    PowerSeries s = poly(4, {1, 1, Rational(1, 2)});
    CHECK_THROWS_AS(ogf_counts(s), NonIntegerCount);
    CHECK(egf_counts(s) == std::vector<Int>{1, 1, 1, 0, 0});
    CHECK(scale_by_inverse_factorials(scale_by_factorials(s)) == s);
    CHECK(ogf_counts(ogf_from_counts({3, 1, 4})) == std::vector<Int>{3, 1, 4});
    CHECK(egf_counts(egf_from_counts({1, 2, 6})) == std::vector<Int>{1, 2, 6});
}

TEST_CASE("bivariate arithmetic and inverse") {
    BivariateSeries ex = BivariateSeries::exp_linear(6, 1, 0);
    BivariateSeries ey = BivariateSeries::exp_linear(6, 0, 1);
    BivariateSeries exy = BivariateSeries::exp_linear(6, 1, 1);
    CHECK(ex * ey == exy);  // e^x e^y = e^{x+y}
    BivariateSeries inv = exy.inverse();
    CHECK(inv == BivariateSeries::exp_linear(6, -1, -1));
    // diagonal of e^{x+y} is e^{2x}
    PowerSeries diag = exy.diagonal();
    Rational c = 1;
    for (int k = 0; k <= 6; ++k) {
        if (k) c *= Rational(2, k);
        CHECK(diag.coeff(k) == c);
    }
}
