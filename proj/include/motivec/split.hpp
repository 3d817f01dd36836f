#pragma once

// Motives of split grassmannians and flag varieties: pure Tate, with
// multiplicities given by Gaussian binomials. The Schubert-cell
// enumeration lives here as an independent brute-force oracle.

#include "motivec/motive.hpp"

#include <set>

namespace motivec {

using CellMultiset = std::multiset<long long>;

namespace detail {

// Expands a Poincare polynomial into Tate terms over a split context.
inline MotiveExpr tate_expr(AlgebraClass context, const QPoly& poly) {
    std::vector<Term> terms;
    const auto& coeffs = poly.coefficients();
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const auto copies = coeffs[i].convert_to<long long>();
        for (long long c = 0; c < copies; ++c)
            terms.push_back({static_cast<long long>(i), Label::tate()});
    }
    return {std::move(context), std::move(terms)};
}

} // namespace detail

// Poincare polynomial of the split flag variety X(dims) in GL_d: the
// product of Gaussian binomials along the chain,
// flag(d, (i_1..i_r)) = gauss(d, i_r) * flag(i_r, (i_1..i_{r-1})).
inline QPoly flag_poincare(long long d, std::vector<long long> dims) {
    dims = detail::checked_flag_dims(d, std::move(dims));
    QPoly poly = QPoly::one();
    long long ambient = d;
    for (std::size_t j = dims.size(); j-- > 0;) {
        poly = poly * gauss_binom(ambient, dims[j]);
        ambient = dims[j];
    }
    return poly;
}

// Motive of the split grassmannian Gr(k, d): one Tate summand per
// coefficient of gauss_binom(d, k). Context records a split algebra of
// degree d at the given prime.
inline MotiveExpr split_grassmannian_motive(long long d, long long k,
                                            Prime p = Prime(2)) {
    if (d < 1)
        throw std::domain_error("split_grassmannian_motive: d must be >= 1");
    if (k < 0 || k > d)
        throw std::domain_error("split_grassmannian_motive: k outside [0, d]");
    return detail::tate_expr(split_algebra(d, std::move(p)),
                             gauss_binom(d, k));
}

// Motive of the split flag variety X(dims) of GL_d.
inline MotiveExpr split_flag_motive(long long d, std::vector<long long> dims,
                                    Prime p = Prime(2)) {
    if (d < 1)
        throw std::domain_error("split_flag_motive: d must be >= 1");
    return detail::tate_expr(split_algebra(d, std::move(p)),
                             flag_poincare(d, std::move(dims)));
}

// Brute-force oracle: weights |lambda| of all partitions fitting in a
// k x (d - k) box, as a multiset. Independent of the q-Pascal route.
inline CellMultiset schubert_cells(long long d, long long k) {
    if (d < 0 || k < 0 || k > d)
        throw std::domain_error("schubert_cells: requires 0 <= k <= d");
    CellMultiset cells;
    const long long width = d - k;
    std::vector<long long> row(static_cast<std::size_t>(k), 0);
    // Weakly decreasing rows, each at most the row above, first at most width.
    auto rec = [&](auto&& self, std::size_t pos, long long cap,
                   long long weight) -> void {
        if (pos == row.size()) {
            cells.insert(weight);
            return;
        }
        for (long long part = cap; part >= 0; --part)
            self(self, pos + 1, part, weight + part);
    };
    rec(rec, 0, width, 0);
    return cells;
}

// Multiset of shifts of an expression, for comparison against cell oracles.
inline CellMultiset shift_multiset(const MotiveExpr& a) {
    CellMultiset shifts;
    for (const auto& t : a.terms()) shifts.insert(t.shift);
    return shifts;
}

} // namespace motivec
