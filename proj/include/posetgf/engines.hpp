#pragma once

#include <optional>

#include "posetgf/bivariate.hpp"
#include "posetgf/series.hpp"

namespace posetgf::engines {

Int stirling2(int n, int k);

// Edge-level weights: psi_w counts all bipartite graphs on (m bottom, n top),
// psi_s those with no isolated vertex, psi_22 the (2+2)-avoiding ones with no
// all-seeing vertex.
Int psi_w(int m, int n);
Int psi_s(int m, int n);
Int psi_22(int m, int n);

enum class PsiKind { Weak, Strong, TwoTwo };
BivariateSeries bivariate_psi(PsiKind kind, int order);
// 1 / (e^x + e^y - e^{x+y})
BivariateSeries psi_22_closed_form(int order);
// Psi_w(x, x) as a univariate series (plain coefficients)
PowerSeries psi_w_diagonal(int order);

struct TransferOptions {
    std::optional<int> height;      // restrict to one height, >= 1
    std::optional<int> matrix_dim;  // override the transfer-matrix dimension
};

// EGF of strongly graded posets (all heights unless restricted), exact
// through x^order. Uses the asymmetric row-vector form of the transfer
// matrix, so no square roots of monomials appear.
PowerSeries all_graded_egf(int order, TransferOptions opts = {});
// Same with psi_w weights; counts posets equipped with a weak grading.
PowerSeries weakly_graded_egf(int order, TransferOptions opts = {});

// Transfer-matrix entry for graded interval orders:
// A(m, n) = sum_l x^{l+n}/(l! n!) sum_{m'} C(m, m') psi_22(n, l+m').
PowerSeries interval_graded_matrix_entry(int m, int n, int order);
// EGF of graded interval orders, per-height (e^x-1)^k [A^k]_{0,0} summed as
// an x-adically convergent Neumann series.
PowerSeries graded_interval_egf(int order, TransferOptions opts = {});

// Graded semiorders: closed-form OGF, the faceoff OGF T(x) = (1-x)^2/(1-2x),
// the assembled product form sum_k z^k T^{k-1} (z = x/(1-x)), and the seed
// EGF 1 + x + x^2/(1-x-x^2).
PowerSeries graded_semiorder_ogf(int order);
PowerSeries faceoff_ogf(int order);
PowerSeries graded_semiorder_assembled_ogf(int order);
PowerSeries graded_semiorder_seed_egf(int order);

// EGF of (3+1)-avoiding graded posets (closed form in terms of Psi_w(x,x)).
PowerSeries graded_31_egf(int order);

enum class LiteratureGf {
    WineFreund,    // OGF of semiorders (Catalan numbers)
    StanleySemi,   // EGF of semiorders
    Zagier,        // EGF of interval orders
    BousquetMelou, // OGF of interval orders
    IntervalSeed,  // seed EGF of interval orders
};
PowerSeries literature_gf(LiteratureGf which, int order);

}  // namespace posetgf::engines
