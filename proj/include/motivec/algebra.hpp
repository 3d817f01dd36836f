#pragma once

// Central simple algebras reduced to the data the motivic computations see:
// (degree, index, distinguished prime). Flag varieties of right ideals and
// finite products of them, with the index-reduction gcd formulas.

#include "motivec/arith.hpp"

#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace motivec {

// Brauer class surrogate. Invariants: degree >= 1, index >= 1,
// index | degree.
class AlgebraClass {
public:
    AlgebraClass(long long degree, long long index, Prime p)
        : degree_(degree), index_(index), p_(p) {
        if (degree < 1)
            throw std::domain_error("AlgebraClass: degree must be positive");
        if (index < 1 || degree % index != 0)
            throw std::domain_error("AlgebraClass: index must divide degree");
    }

    [[nodiscard]] long long degree() const noexcept { return degree_; }
    [[nodiscard]] long long index() const noexcept { return index_; }
    [[nodiscard]] const Prime& prime() const noexcept { return p_; }
    [[nodiscard]] bool is_split() const noexcept { return index_ == 1; }
    [[nodiscard]] bool is_division() const noexcept {
        return index_ == degree_;
    }

    auto operator<=>(const AlgebraClass&) const = default;

private:
    long long degree_;
    long long index_;
    Prime p_;
};

inline AlgebraClass split_algebra(long long degree, Prime p) {
    return {degree, 1, std::move(p)};
}

// Division algebra of p-primary degree p^n (so index = degree = p^n).
class PPrimaryDivision {
public:
    PPrimaryDivision(Prime p, int n) : p_(std::move(p)), n_(n) {
        if (n < 0)
            throw std::domain_error("PPrimaryDivision: n must be >= 0");
    }

    [[nodiscard]] const Prime& prime() const noexcept { return p_; }
    [[nodiscard]] int n() const noexcept { return n_; }
    [[nodiscard]] long long degree() const { return ipow(p_.value(), n_); }
    [[nodiscard]] AlgebraClass algebra() const {
        return {degree(), degree(), p_};
    }

private:
    Prime p_;
    int n_;
};

namespace detail {

// Reduced dimensions of a flag: sorted, distinct, strictly inside
// (0, degree). Rejects duplicates rather than collapsing them.
inline std::vector<long long> checked_flag_dims(long long degree,
                                                std::vector<long long> dims) {
    if (dims.empty())
        throw std::domain_error("flag dims must be nonempty");
    std::sort(dims.begin(), dims.end());
    long long prev = 0;
    for (long long d : dims) {
        if (d <= 0 || d >= degree)
            throw std::domain_error("flag dim " + std::to_string(d) +
                                    " outside (0, " + std::to_string(degree) +
                                    ")");
        if (d == prev)
            throw std::domain_error("flag dims contain duplicate " +
                                    std::to_string(d));
        prev = d;
    }
    return dims;
}

} // namespace detail

// Dimension of the flag variety X(dims; A) for deg A = degree:
// sum over j of dims[j] * (dims[j+1] - dims[j]), reading degree past the
// last entry.
inline long long dim_flag(long long degree, std::vector<long long> dims) {
    dims = detail::checked_flag_dims(degree, std::move(dims));
    long long total = 0;
    for (std::size_t j = 0; j < dims.size(); ++j) {
        const long long next = j + 1 < dims.size() ? dims[j + 1] : degree;
        total += dims[j] * (next - dims[j]);
    }
    return total;
}

// The flag variety X(dims; A) of chains of right ideals with the given
// reduced dimensions.
class FlagDescriptor {
public:
    FlagDescriptor(AlgebraClass algebra, std::vector<long long> dims)
        : algebra_(std::move(algebra)),
          dims_(detail::checked_flag_dims(algebra_.degree(), std::move(dims))) {}

    [[nodiscard]] const AlgebraClass& algebra() const noexcept {
        return algebra_;
    }
    [[nodiscard]] const std::vector<long long>& dims() const noexcept {
        return dims_;
    }
    [[nodiscard]] long long dimension() const {
        return dim_flag(algebra_.degree(), dims_);
    }

    bool operator==(const FlagDescriptor&) const = default;

private:
    AlgebraClass algebra_;
    std::vector<long long> dims_;
};

// A finite product of flag varieties of one and the same algebra class.
class ProductVariety {
public:
    explicit ProductVariety(std::vector<FlagDescriptor> factors)
        : factors_(std::move(factors)) {
        if (factors_.empty())
            throw std::domain_error("ProductVariety: needs at least one factor");
        for (const auto& f : factors_)
            if (!(f.algebra() == factors_.front().algebra()))
                throw std::domain_error(
                    "ProductVariety: factors must share one algebra class");
    }

    [[nodiscard]] const std::vector<FlagDescriptor>& factors() const noexcept {
        return factors_;
    }
    [[nodiscard]] const AlgebraClass& algebra() const noexcept {
        return factors_.front().algebra();
    }

    bool operator==(const ProductVariety&) const = default;

private:
    std::vector<FlagDescriptor> factors_;
};

// Index of A over the function field of X(dims; A):
// gcd(dims[0], ..., dims[r-1], ind A). Order of dims is immaterial.
inline long long index_reduction(const AlgebraClass& alg,
                                 const std::vector<long long>& dims) {
    if (dims.empty())
        throw std::domain_error("index_reduction: dims must be nonempty");
    long long g = alg.index();
    for (long long d : dims) {
        if (d <= 0 || d >= alg.degree())
            throw std::domain_error("index_reduction: dim " +
                                    std::to_string(d) + " outside (0, deg)");
        g = std::gcd(g, d);
    }
    return g;
}

// Index of A over the function field of a product: fold index_reduction
// over the factors.
inline long long generic_index(const ProductVariety& product) {
    long long g = product.algebra().index();
    for (const auto& f : product.factors())
        g = std::gcd(g, index_reduction(f.algebra(), f.dims()));
    return g;
}

// gcd of degrees of closed points of X(dims; A): ind A divided by the
// reduced index.
inline long long closed_point_gcd(const AlgebraClass& alg,
                                  const std::vector<long long>& dims) {
    return alg.index() / index_reduction(alg, dims);
}

inline long long dim_product(const ProductVariety& product) {
    long long total = 0;
    for (const auto& f : product.factors()) total += f.dimension();
    return total;
}

} // namespace motivec
