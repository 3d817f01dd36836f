#pragma once

// Canonical p-dimension of products of grassmannians of a p-primary
// algebra: cdim_p = p^m (p^n - p^m) where n = v_p(ind) and m = v_p of the
// generic index, compared against the classical dimension to decide
// incompressibility.

#include "motivec/algebra.hpp"

#include <string>
#include <vector>

namespace motivec {

struct CanDimReport {
    std::string variety;
    long long p = 2;
    int n = 0; // v_p(ind A)
    int m = 0; // v_p(generic index)
    long long cdim_p = 0;
    long long dim = 0;
    bool incompressible = false;

    bool operator==(const CanDimReport&) const = default;
};

// Display form "X(2,4;A) x X(1;A), A: degree 8, index 8, p = 2".
inline std::string variety_descriptor(const ProductVariety& product) {
    std::string out;
    for (const auto& f : product.factors()) {
        if (!out.empty()) out += " x ";
        out += "X(";
        const auto& dims = f.dims();
        for (std::size_t i = 0; i < dims.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(dims[i]);
        }
        out += ";A)";
    }
    const auto& alg = product.algebra();
    out += ", A: degree " + std::to_string(alg.degree()) + ", index " +
           std::to_string(alg.index()) + ", p = " +
           std::to_string(alg.prime().value());
    return out;
}

// Requires ind A = p^n. The formula needs only n and m, but dim and the
// verdict depend on the actual factors.
inline CanDimReport cdim_p(const ProductVariety& product) {
    const auto& alg = product.algebra();
    const Prime& p = alg.prime();
    const long long pv = p.value();
    if (alg.index() != ipow(pv, vp(alg.index(), p)))
        throw std::domain_error("cdim_p: index must be a power of p");
    const int n = vp(alg.index(), p);
    const int m = vp(generic_index(product), p);
    CanDimReport report;
    report.variety = variety_descriptor(product);
    report.p = pv;
    report.n = n;
    report.m = m;
    report.cdim_p = ipow(pv, m) * (ipow(pv, n) - ipow(pv, m));
    report.dim = dim_product(product);
    report.incompressible = report.cdim_p == report.dim;
    if (report.cdim_p > report.dim)
        throw std::logic_error("cdim_p: canonical dimension exceeds dimension");
    return report;
}

// For the division algebra D of degree p^n, one row per grassmannian
// X(p^m; D), m = 0..n. The m = n row is the point X(p^n; D), reported
// directly since a flag needs dims inside (0, deg).
inline std::vector<CanDimReport> incompressibility_table(const Prime& p,
                                                         int n) {
    if (n < 0)
        throw std::domain_error("incompressibility_table: n must be >= 0");
    const long long pv = p.value();
    std::vector<CanDimReport> rows;
    const PPrimaryDivision division(p, n);
    for (int m = 0; m < n; ++m) {
        const ProductVariety product(
            {FlagDescriptor(division.algebra(), {ipow(pv, m)})});
        rows.push_back(cdim_p(product));
    }
    CanDimReport point;
    point.variety = "X(" + std::to_string(division.degree()) +
                    ";A), A: degree " + std::to_string(division.degree()) +
                    ", index " + std::to_string(division.degree()) +
                    ", p = " + std::to_string(pv);
    point.p = pv;
    point.n = n;
    point.m = n;
    point.cdim_p = 0;
    point.dim = 0;
    point.incompressible = true;
    rows.push_back(point);
    return rows;
}

} // namespace motivec
