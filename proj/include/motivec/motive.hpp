#pragma once

// Krull-Schmidt multiset algebra of motives with coefficients in Z/p.
// A MotiveExpr is a formal direct sum of shifted indecomposable labels over
// a fixed context algebra; equality of expressions is multiset equality,
// which is what the Krull-Schmidt property licenses.

#include "motivec/algebra.hpp"
#include "motivec/qpoly.hpp"

#include <charconv>
#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace motivec {

// Indecomposable summand label. Three kinds:
//   TATE        the Tate motive (a shift supplies the twist),
//   UPPER(l)    the upper motive of X(p^l; D) for the context division
//               algebra, requires p^l <= ind(context),
//   PRODUCT(d1,...,dk)  the unresolved full motive of a product of
//               grassmannians X(d1) x ... x X(dk) of the context algebra,
//               parts strictly inside (0, deg). Parts are kept sorted.
// Ordering: TATE < UPPER(l) (by l) < PRODUCT (lex on parts).
class Label {
public:
    enum class Kind { tate = 0, upper = 1, product = 2 };

    static Label tate() { return Label(Kind::tate, 0, {}); }

    static Label upper(int level) {
        if (level < 0)
            throw std::domain_error("Label::upper: negative level");
        return Label(Kind::upper, level, {});
    }

    static Label product(std::vector<long long> parts) {
        if (parts.empty())
            throw std::domain_error("Label::product: empty part list");
        std::sort(parts.begin(), parts.end());
        if (parts.front() < 1)
            throw std::domain_error("Label::product: parts must be positive");
        return Label(Kind::product, 0, std::move(parts));
    }

    [[nodiscard]] Kind kind() const noexcept { return kind_; }

    [[nodiscard]] int upper_level() const {
        if (kind_ != Kind::upper)
            throw std::domain_error("Label::upper_level: not an upper label");
        return level_;
    }

    [[nodiscard]] const std::vector<long long>& product_parts() const {
        if (kind_ != Kind::product)
            throw std::domain_error("Label::product_parts: not a product label");
        return parts_;
    }

    auto operator<=>(const Label&) const = default;

    [[nodiscard]] std::string str() const {
        switch (kind_) {
        case Kind::tate:
            return "Tate";
        case Kind::upper:
            return "Upper(" + std::to_string(level_) + ")";
        case Kind::product: {
            std::string out = "Product(";
            for (std::size_t i = 0; i < parts_.size(); ++i) {
                if (i) out += ",";
                out += std::to_string(parts_[i]);
            }
            return out + ")";
        }
        }
        throw std::logic_error("Label::str: bad kind");
    }

    static Label parse(std::string_view s);

private:
    Label(Kind kind, int level, std::vector<long long> parts)
        : kind_(kind), level_(level), parts_(std::move(parts)) {}

    Kind kind_;
    int level_;
    std::vector<long long> parts_;
};

namespace detail {

inline long long parse_ll(std::string_view s, const char* what) {
    long long v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw std::domain_error(std::string(what) + ": bad integer '" +
                                std::string(s) + "'");
    return v;
}

} // namespace detail

inline Label Label::parse(std::string_view s) {
    if (s == "Tate") return tate();
    constexpr std::string_view up = "Upper(";
    constexpr std::string_view pr = "Product(";
    if (s.starts_with(up) && s.ends_with(")")) {
        const auto body = s.substr(up.size(), s.size() - up.size() - 1);
        return upper(static_cast<int>(detail::parse_ll(body, "Label::parse")));
    }
    if (s.starts_with(pr) && s.ends_with(")")) {
        auto body = s.substr(pr.size(), s.size() - pr.size() - 1);
        std::vector<long long> parts;
        while (!body.empty()) {
            const auto comma = body.find(',');
            parts.push_back(detail::parse_ll(body.substr(0, comma),
                                             "Label::parse"));
            body = comma == std::string_view::npos ? std::string_view{}
                                                   : body.substr(comma + 1);
        }
        return product(std::move(parts));
    }
    throw std::domain_error("Label::parse: unrecognized label '" +
                            std::string(s) + "'");
}

// One summand: a label twisted by shift. Canonical order is by
// (shift, label).
struct Term {
    long long shift;
    Label label;

    auto operator<=>(const Term&) const = default;
};

// Normalizes a product label against the context: parts must lie in
// [0, deg]; parts 0 and deg are point factors and are dropped; an empty
// remainder is the Tate label.
inline Label product_label(const AlgebraClass& context,
                           std::vector<long long> parts) {
    std::vector<long long> kept;
    for (long long part : parts) {
        if (part < 0 || part > context.degree())
            throw std::domain_error("product_label: part " +
                                    std::to_string(part) + " outside [0, deg]");
        if (part != 0 && part != context.degree()) kept.push_back(part);
    }
    if (kept.empty()) return Label::tate();
    return Label::product(std::move(kept));
}

// A formal direct sum of terms over one context algebra, kept sorted.
// The empty sum is the zero motive.
class MotiveExpr {
public:
    explicit MotiveExpr(AlgebraClass context) : context_(std::move(context)) {}

    MotiveExpr(AlgebraClass context, std::vector<Term> terms)
        : context_(std::move(context)), terms_(std::move(terms)) {
        canonicalize();
    }

    static MotiveExpr single(AlgebraClass context, Label label,
                             long long shift) {
        return MotiveExpr(std::move(context), {{shift, std::move(label)}});
    }

    [[nodiscard]] const AlgebraClass& context() const noexcept {
        return context_;
    }
    [[nodiscard]] const std::vector<Term>& terms() const noexcept {
        return terms_;
    }
    [[nodiscard]] bool empty() const noexcept { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }

    [[nodiscard]] bool all_tate() const noexcept {
        for (const auto& t : terms_)
            if (t.label.kind() != Label::Kind::tate) return false;
        return true;
    }

    bool operator==(const MotiveExpr&) const = default;

    [[nodiscard]] std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& t : terms_) {
            if (!out.empty()) out += " + ";
            out += t.label.str() + "(" + std::to_string(t.shift) + ")";
        }
        return out;
    }

private:
    void canonicalize() {
        for (const auto& t : terms_) validate(t);
        std::sort(terms_.begin(), terms_.end());
    }

    void validate(const Term& t) const {
        if (t.shift < 0)
            throw std::domain_error("MotiveExpr: negative shift");
        switch (t.label.kind()) {
        case Label::Kind::tate:
            return;
        case Label::Kind::upper: {
            const long long pl =
                ipow(context_.prime().value(), t.label.upper_level());
            if (pl > context_.index())
                throw std::domain_error(
                    "MotiveExpr: upper level exceeds context index");
            return;
        }
        case Label::Kind::product:
            for (long long part : t.label.product_parts())
                if (part <= 0 || part >= context_.degree())
                    throw std::domain_error(
                        "MotiveExpr: product part outside (0, deg)");
            return;
        }
        throw std::logic_error("MotiveExpr: bad label kind");
    }

    AlgebraClass context_;
    std::vector<Term> terms_;
};

namespace detail {

inline void require_same_context(const MotiveExpr& a, const MotiveExpr& b,
                                 const char* op) {
    if (!(a.context() == b.context()))
        throw std::domain_error(std::string(op) + ": context mismatch");
}

// Index of the context as a power of its prime; upper-label ranks are only
// defined over p-primary contexts.
inline int p_primary_exponent(const AlgebraClass& context, const char* op) {
    long long idx = context.index();
    const long long p = context.prime().value();
    int n = 0;
    while (idx % p == 0) {
        idx /= p;
        ++n;
    }
    if (idx != 1)
        throw std::domain_error(std::string(op) +
                                ": context index is not a power of p");
    return n;
}

} // namespace detail

inline MotiveExpr direct_sum(const MotiveExpr& a, const MotiveExpr& b) {
    detail::require_same_context(a, b, "direct_sum");
    std::vector<Term> terms = a.terms();
    terms.insert(terms.end(), b.terms().begin(), b.terms().end());
    return {a.context(), std::move(terms)};
}

inline MotiveExpr shift_by(const MotiveExpr& a, long long s) {
    if (s < 0) throw std::domain_error("shift_by: negative shift");
    std::vector<Term> terms = a.terms();
    for (auto& t : terms) t.shift += s;
    return {a.context(), std::move(terms)};
}

// Tensor product, termwise. Tate acts as twist; a pair of non-Tate
// grassmannian-type labels concatenates into a PRODUCT label (upper level l
// contributes the part p^l).
inline MotiveExpr tensor(const MotiveExpr& a, const MotiveExpr& b) {
    detail::require_same_context(a, b, "tensor");
    const auto& ctx = a.context();
    auto parts_of = [&ctx](const Label& label) -> std::vector<long long> {
        if (label.kind() == Label::Kind::upper)
            return {ipow(ctx.prime().value(), label.upper_level())};
        return label.product_parts();
    };
    std::vector<Term> terms;
    terms.reserve(a.size() * b.size());
    for (const auto& ta : a.terms()) {
        for (const auto& tb : b.terms()) {
            const long long shift = ta.shift + tb.shift;
            if (ta.label.kind() == Label::Kind::tate) {
                terms.push_back({shift, tb.label});
            } else if (tb.label.kind() == Label::Kind::tate) {
                terms.push_back({shift, ta.label});
            } else {
                auto parts = parts_of(ta.label);
                const auto more = parts_of(tb.label);
                parts.insert(parts.end(), more.begin(), more.end());
                terms.push_back({shift, product_label(ctx, std::move(parts))});
            }
        }
    }
    return {a.context(), std::move(terms)};
}

// Rank of one label under the hypothesis that upper motives carry their
// full conjectural rank: TATE has rank 1, UPPER(l) has rank
// binom(ind, p^l), PRODUCT multiplies grassmannian ranks binom(deg, part).
inline Natural hypothesis_rank(const AlgebraClass& context,
                               const Label& label) {
    switch (label.kind()) {
    case Label::Kind::tate:
        return 1;
    case Label::Kind::upper: {
        detail::p_primary_exponent(context, "hypothesis_rank");
        const long long pl =
            ipow(context.prime().value(), label.upper_level());
        return binom(context.index(), pl);
    }
    case Label::Kind::product: {
        Natural r = 1;
        for (long long part : label.product_parts())
            r *= binom(context.degree(), part);
        return r;
    }
    }
    throw std::logic_error("hypothesis_rank: bad label kind");
}

inline Natural hypothesis_rank(const MotiveExpr& a) {
    Natural total = 0;
    for (const auto& t : a.terms())
        total += hypothesis_rank(a.context(), t.label);
    return total;
}

// v_p of the hypothesis rank, at the context prime.
inline int vp_rank(const MotiveExpr& a) {
    const Natural r = hypothesis_rank(a);
    if (r == 0)
        throw std::domain_error("vp_rank: zero rank");
    return vp(r, a.context().prime());
}

// Krull-Schmidt equality: same context and equal term multisets.
inline bool krull_schmidt_equal(const MotiveExpr& a, const MotiveExpr& b) {
    detail::require_same_context(a, b, "krull_schmidt_equal");
    return a.terms() == b.terms();
}

// Poincare duality on a split (all-Tate) expression of dimension d:
// Tate(i) maps to Tate(d - i).
inline MotiveExpr dual(const MotiveExpr& a, long long d) {
    if (d < 0) throw std::domain_error("dual: negative dimension");
    if (!a.all_tate())
        throw std::domain_error("dual: expression must be all Tate");
    std::vector<Term> terms = a.terms();
    for (auto& t : terms) {
        if (t.shift > d)
            throw std::domain_error("dual: shift exceeds dimension");
        t.shift = d - t.shift;
    }
    return {a.context(), std::move(terms)};
}

// A split expression is upper when it contains Tate with shift 0.
inline bool is_upper(const MotiveExpr& a) {
    if (!a.all_tate())
        throw std::domain_error("is_upper: expression must be all Tate");
    for (const auto& t : a.terms())
        if (t.shift == 0) return true;
    return false;
}

// A split expression is lower for dimension d when it contains Tate(d).
inline bool is_lower(const MotiveExpr& a, long long d) {
    if (!a.all_tate())
        throw std::domain_error("is_lower: expression must be all Tate");
    for (const auto& t : a.terms())
        if (t.shift == d) return true;
    return false;
}

// Poincare polynomial of a split expression: coefficient of q^i counts
// Tate summands with shift i.
inline QPoly poincare(const MotiveExpr& a) {
    if (!a.all_tate())
        throw std::domain_error("poincare: expression must be all Tate");
    std::vector<Natural> coeffs;
    for (const auto& t : a.terms()) {
        const auto i = static_cast<std::size_t>(t.shift);
        if (coeffs.size() <= i) coeffs.resize(i + 1, Natural(0));
        coeffs[i] += 1;
    }
    return QPoly(std::move(coeffs));
}

} // namespace motivec
