#pragma once

// Dense polynomials in q with non-negative exact coefficients, and the
// Gaussian binomial coefficients gauss_binom(n, k) built on them.

#include "motivec/arith.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace motivec {

class QPoly {
public:
    // Zero polynomial.
    QPoly() = default;

    // coeffs[i] is the coefficient of q^i; trailing zeros are stripped.
    explicit QPoly(std::vector<Natural> coeffs) : coeffs_(std::move(coeffs)) {
        for (const auto& c : coeffs_)
            if (c < 0)
                throw std::domain_error("QPoly: negative coefficient");
        normalize();
    }

    static QPoly one() { return QPoly({Natural(1)}); }

    static QPoly monomial(Natural c, std::size_t exponent) {
        std::vector<Natural> v(exponent + 1, Natural(0));
        v[exponent] = std::move(c);
        return QPoly(std::move(v));
    }

    [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }

    [[nodiscard]] std::size_t degree() const {
        if (is_zero())
            throw std::domain_error("QPoly::degree: zero polynomial");
        return coeffs_.size() - 1;
    }

    // Coefficient of q^i; zero beyond the degree.
    [[nodiscard]] const Natural& coeff(std::size_t i) const {
        static const Natural zero{0};
        return i < coeffs_.size() ? coeffs_[i] : zero;
    }

    [[nodiscard]] const std::vector<Natural>& coefficients() const noexcept {
        return coeffs_;
    }

    // Multiplication by q^s.
    [[nodiscard]] QPoly shifted(std::size_t s) const {
        if (is_zero()) return {};
        std::vector<Natural> v(coeffs_.size() + s, Natural(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i + s] = coeffs_[i];
        return QPoly(std::move(v));
    }

    // Evaluation at q = 1, i.e. the coefficient sum.
    [[nodiscard]] Natural eval_one() const {
        Natural s = 0;
        for (const auto& c : coeffs_) s += c;
        return s;
    }

    friend QPoly operator+(const QPoly& a, const QPoly& b) {
        std::vector<Natural> v(std::max(a.coeffs_.size(), b.coeffs_.size()),
                               Natural(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
        return QPoly(std::move(v));
    }

    friend QPoly operator*(const QPoly& a, const QPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Natural> v(a.coeffs_.size() + b.coeffs_.size() - 1,
                               Natural(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return QPoly(std::move(v));
    }

    bool operator==(const QPoly&) const = default;

    [[nodiscard]] std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == 0) continue;
            if (!out.empty()) out += " + ";
            const bool unit = coeffs_[i] == 1;
            if (i == 0) {
                out += coeffs_[i].str();
            } else {
                if (!unit) out += coeffs_[i].str() + "*";
                out += i == 1 ? "q" : "q^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Natural> coeffs_;
};

// Gaussian binomial coefficient as a polynomial in q, via the q-Pascal
// recursion gauss(n, k) = gauss(n-1, k-1) + q^k * gauss(n-1, k).
// Zero polynomial outside 0 <= k <= n.
inline QPoly gauss_binom(long long n, long long k) {
    if (n < 0) throw std::domain_error("gauss_binom: n must be non-negative");
    if (k < 0 || k > n) return {};
    std::vector<QPoly> row(static_cast<std::size_t>(k) + 1);
    row[0] = QPoly::one();
    for (long long i = 1; i <= n; ++i) {
        const long long hi = std::min<long long>(i, k);
        for (long long j = hi; j >= 1; --j) {
            const auto uj = static_cast<std::size_t>(j);
            row[uj] = row[uj - 1] + row[uj].shifted(uj);
        }
    }
    return row[static_cast<std::size_t>(k)];
}

} // namespace motivec
