#pragma once

// One step of the generic splitting tower for a division algebra D of
// degree p^n: over the function field L of the Severi-Brauer variety of D,
// the algebra has index p^{n-1}, and the motive of the grassmannian
// X(p^m; D) base-changed to L decomposes into shifted products of
// grassmannians of the smaller algebra, one term per composition of p^m
// into p parts bounded by p^{n-1}. On top of that sits the replayable
// rank-valuation argument (verify_basic2), the closed-form 2-primary
// decompositions for deg 2^n, and the upper-motive classifier.

#include "motivec/motive.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace motivec {

// An ordered tuple of non-negative parts (one per tensor factor).
struct Composition {
    std::vector<long long> parts;

    [[nodiscard]] long long sum() const {
        long long s = 0;
        for (long long v : parts) s += v;
        return s;
    }

    [[nodiscard]] bool constant() const {
        for (long long v : parts)
            if (v != parts.front()) return false;
        return true;
    }

    [[nodiscard]] Composition rotated() const {
        if (parts.empty()) return *this;
        std::vector<long long> r(parts.begin() + 1, parts.end());
        r.push_back(parts.front());
        return {std::move(r)};
    }

    [[nodiscard]] std::string str() const {
        std::string out;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(parts[i]);
        }
        return out;
    }

    auto operator<=>(const Composition&) const = default;
};

// Visits every tuple in [0, cap]^count with the given sum, in ascending
// lexicographic order, reusing one buffer. fn receives the buffer by
// const reference.
template <class Fn>
void for_each_composition(long long count, long long target, long long cap,
                          Fn&& fn) {
    if (count < 1)
        throw std::domain_error("for_each_composition: count must be >= 1");
    if (target < 0 || cap < 0) return;
    std::vector<long long> buf(static_cast<std::size_t>(count), 0);
    auto rec = [&](auto&& self, std::size_t pos, long long remaining) -> void {
        if (pos + 1 == buf.size()) {
            if (remaining <= cap) {
                buf[pos] = remaining;
                fn(static_cast<const std::vector<long long>&>(buf));
            }
            return;
        }
        const long long hi = std::min(cap, remaining);
        for (long long v = 0; v <= hi; ++v) {
            buf[pos] = v;
            self(self, pos + 1, remaining - v);
        }
    };
    rec(rec, 0, target);
}

// All compositions of target into exactly p parts, each within [0, cap],
// ascending lexicographic.
inline std::vector<Composition> compositions(const Prime& p, long long target,
                                             long long cap) {
    std::vector<Composition> out;
    for_each_composition(p.value(), target, cap,
                         [&](const std::vector<long long>& parts) {
                             out.push_back({parts});
                         });
    return out;
}

// Tate shift attached to the composition term in the one-step
// decomposition over an ambient of dimension-parameter d:
// sum over ordered pairs j < j' of parts[j'] * (d - parts[j]).
inline long long shift_rule(const Composition& c, long long d) {
    long long total = 0;
    for (std::size_t j = 0; j < c.parts.size(); ++j) {
        if (c.parts[j] < 0 || c.parts[j] > d)
            throw std::domain_error("shift_rule: part outside [0, d]");
        for (std::size_t j2 = j + 1; j2 < c.parts.size(); ++j2)
            total += c.parts[j2] * (d - c.parts[j]);
    }
    return total;
}

// An orbit of the cyclic rotation action: lexicographically least member
// and the number of distinct members.
struct OrbitClass {
    Composition representative;
    long long size = 0;

    bool operator==(const OrbitClass&) const = default;
};

// Partitions a rotation-closed, duplicate-free family into rotation
// orbits, ordered by representative. For prime tuple length every orbit
// has size 1 (constant tuples) or exactly the length.
inline std::vector<OrbitClass> cyclic_orbits(
    const std::vector<Composition>& comps) {
    std::map<Composition, long long> by_rep;
    for (const auto& c : comps) {
        Composition rep = c;
        Composition cur = c;
        for (std::size_t i = 1; i < c.parts.size(); ++i) {
            cur = cur.rotated();
            if (cur < rep) rep = cur;
        }
        by_rep[std::move(rep)] += 1;
    }
    std::vector<OrbitClass> orbits;
    orbits.reserve(by_rep.size());
    for (auto& [rep, size] : by_rep) orbits.push_back({rep, size});
    return orbits;
}

// min over nonzero parts of min(v_p(part), n - 1); the valuation the
// splitting tower sees for a term of level n. Requires a nonzero part.
inline int comp_valuation(const Composition& c, const Prime& p, int n) {
    if (n < 1) throw std::domain_error("comp_valuation: n must be >= 1");
    std::optional<int> best;
    for (long long part : c.parts) {
        if (part == 0) continue;
        const int v = std::min(vp(part, p), n - 1);
        if (!best || v < *best) best = v;
    }
    if (!best)
        throw std::domain_error("comp_valuation: all parts are zero");
    return *best;
}

// One splitting step applied to X(p^m; D), deg D = p^n: the terms, one per
// composition of p^m into p parts bounded by p^{n-1}, with their shifts,
// plus the canonical normalized expression over the residual algebra
// (division, degree p^{n-1}).
struct OneStepDecomposition {
    Prime p;
    int n = 1;
    int m = 0;
    long long split_degree = 1; // p^{n-1}, the deg of the residual algebra
    std::vector<std::pair<Composition, long long>> terms; // lex by composition
    MotiveExpr motive;
};

inline OneStepDecomposition one_step(const Prime& p, int n, int m) {
    if (n < 1) throw std::domain_error("one_step: n must be >= 1");
    if (m < 0 || m >= n)
        throw std::domain_error("one_step: requires 0 <= m < n");
    const long long d = ipow(p.value(), n - 1);
    const AlgebraClass context(d, d, p);
    std::vector<std::pair<Composition, long long>> terms;
    std::vector<Term> motive_terms;
    for_each_composition(p.value(), ipow(p.value(), m), d,
                         [&](const std::vector<long long>& parts) {
                             Composition c{parts};
                             const long long shift = shift_rule(c, d);
                             motive_terms.push_back(
                                 {shift, product_label(context, parts)});
                             terms.emplace_back(std::move(c), shift);
                         });
    return {p, n, m, d, std::move(terms),
            MotiveExpr(context, std::move(motive_terms))};
}

// The term whose composition concentrates p^m in the first slot; its
// shift is 0 and it carries the upper motive.
inline std::pair<Composition, long long> upper_term(
    const OneStepDecomposition& step) {
    const long long pm = ipow(step.p.value(), step.m);
    for (const auto& [c, shift] : step.terms) {
        if (c.parts.front() == pm && c.sum() == pm) {
            if (shift != 0)
                throw std::domain_error("upper_term: malformed decomposition");
            return {c, shift};
        }
    }
    throw std::domain_error("upper_term: no source term present");
}

// The mirror term concentrating p^m in the last slot; its shift is
// p^m * (p^n - p^{n-1}).
inline std::pair<Composition, long long> lower_term(
    const OneStepDecomposition& step) {
    const long long pm = ipow(step.p.value(), step.m);
    const long long expected =
        pm * (ipow(step.p.value(), step.n) - step.split_degree);
    for (const auto& [c, shift] : step.terms) {
        if (c.parts.back() == pm && c.sum() == pm) {
            if (shift != expected)
                throw std::domain_error("lower_term: malformed decomposition");
            return {c, shift};
        }
    }
    throw std::domain_error("lower_term: no source term present");
}

// Replayable record of the rank-valuation argument for one m < n.
// The claim: among the composition terms of one_step(p, n, m), exactly p
// are sources of the upper motive; the terms of tower valuation m-1 other
// than the diagonal fall into rotation orbits of size p; the diagonal
// term's rank valuation p*(n-m) exceeds the bound n-m; so the valuation
// v_p(rank) = n-m concluded from the carry count is consistent.
struct Basic2Record {
    int m = 0;
    bool base_case = false; // m == 0: Severi-Brauer base, no orbit step
    Natural composition_count = 0;

    long long source_count = 0;
    bool sources_ok = false; // source_count == p

    // Orbit step (m >= 1): terms with comp_valuation == m-1, diagonal
    // excluded, partitioned under rotation.
    Composition diagonal;
    long long valuation_subset_size = 0;
    std::vector<OrbitClass> orbits;
    bool orbits_all_size_p = false;
    bool subset_divisible_by_p = false;

    // Diagonal term (m >= 1): v_p of rank of M(X(p^{m-1}; C))^{tensor p}.
    int diagonal_rank_vp = 0;
    int rank_vp_bound = 0; // n - m
    bool diagonal_ok = false;

    int kummer_vp = 0; // v_p(binom(p^n, p^m)) by carry counting
    bool kummer_ok = false;

    int concluded_vp = 0; // n - m
    bool pass = false;
};

struct ProofTrace {
    long long p = 2;
    int n = 1;
    std::vector<Basic2Record> records;
    bool pass = false;
};

// Replays the rank-valuation argument for deg D = p^n:
// for every 0 <= m < n checks the source count, the orbit divisibility,
// the diagonal excess valuation and the carry count, and records every
// quantity so the trace is auditable.
inline ProofTrace verify_basic2(const Prime& p, int n) {
    if (n < 1) throw std::domain_error("verify_basic2: n must be >= 1");
    ProofTrace trace{p.value(), n, {}, false};
    const long long pv = p.value();
    for (int m = 0; m < n; ++m) {
        Basic2Record rec;
        rec.m = m;
        rec.base_case = m == 0;
        const long long target = ipow(pv, m);
        const long long cap = ipow(pv, n - 1);

        std::vector<Composition> subset;
        if (m >= 1)
            rec.diagonal.parts.assign(static_cast<std::size_t>(pv),
                                      ipow(pv, m - 1));
        for_each_composition(pv, target, cap,
                             [&](const std::vector<long long>& parts) {
                                 rec.composition_count += 1;
                                 Composition c{parts};
                                 long long nonzero = 0;
                                 for (long long v : parts)
                                     if (v != 0) ++nonzero;
                                 if (nonzero == 1 && c.sum() == target)
                                     rec.source_count += 1;
                                 if (m >= 1 && c != rec.diagonal &&
                                     comp_valuation(c, p, n) == m - 1)
                                     subset.push_back(std::move(c));
                             });
        rec.sources_ok = rec.source_count == pv;

        if (m >= 1) {
            rec.valuation_subset_size =
                static_cast<long long>(subset.size());
            rec.orbits = cyclic_orbits(subset);
            rec.orbits_all_size_p = true;
            for (const auto& o : rec.orbits)
                if (o.size != pv) rec.orbits_all_size_p = false;
            rec.subset_divisible_by_p = rec.valuation_subset_size % pv == 0;

            // rank M(X(p^{m-1}; C))^{tensor p} = binom(p^{n-1}, p^{m-1})^p.
            rec.diagonal_rank_vp =
                static_cast<int>(pv) *
                vp_binom(cap, ipow(pv, m - 1), p);
            rec.rank_vp_bound = n - m;
            rec.diagonal_ok = rec.diagonal_rank_vp > rec.rank_vp_bound;
        }

        rec.kummer_vp = vp_binom(ipow(pv, n), target, p);
        rec.kummer_ok = rec.kummer_vp == n - m;
        rec.concluded_vp = n - m;

        rec.pass = rec.sources_ok && rec.kummer_ok &&
                   (rec.base_case ||
                    (rec.orbits_all_size_p && rec.subset_divisible_by_p &&
                     rec.diagonal_ok));
        trace.records.push_back(std::move(rec));
    }
    trace.pass = true;
    for (const auto& r : trace.records)
        if (!r.pass) trace.pass = false;
    return trace;
}

// The two closed-form decompositions over the first splitting field for a
// division algebra of degree 2^n. Context: division, degree 2^{n-1}.
enum class TwoTwoVariant { x1, x2 };

// x1 (n >= 1): M(X1)_L = U0 + U0(2^{n-1}), where X1 is the Severi-Brauer
// variety of D and U_l abbreviates the upper motive of X(2^l; C).
// x2 (n >= 2): M(X2)_L = U1 + U0(2^{n-1}-1) + ... + U0(2^n-2) + U1(2^n),
// where X2 = X(2; D).
inline MotiveExpr decomposition_2_2n(int n, TwoTwoVariant which) {
    const Prime two(2);
    if (which == TwoTwoVariant::x1) {
        if (n < 1)
            throw std::domain_error("decomposition_2_2n: x1 needs n >= 1");
        const long long d = ipow(2, n - 1);
        const AlgebraClass context(d, d, two);
        return {context,
                {{0, Label::upper(0)}, {d, Label::upper(0)}}};
    }
    if (n < 2)
        throw std::domain_error("decomposition_2_2n: x2 needs n >= 2");
    const long long d = ipow(2, n - 1);
    const AlgebraClass context(d, d, two);
    std::vector<Term> terms;
    terms.push_back({0, Label::upper(1)});
    for (long long k = d - 1; k <= 2 * d - 2; ++k)
        terms.push_back({k, Label::upper(0)});
    terms.push_back({2 * d, Label::upper(1)});
    return {context, std::move(terms)};
}

// Upper-motive labels that can appear in the decomposition of the motive
// of a product of flags of a p-primary-index algebra: 0 through
// v_p(generic index).
inline std::vector<int> upper_labels_allowed(const ProductVariety& product) {
    const int top = vp(generic_index(product), product.algebra().prime());
    std::vector<int> labels(static_cast<std::size_t>(top) + 1);
    for (int l = 0; l <= top; ++l) labels[static_cast<std::size_t>(l)] = l;
    return labels;
}

// The label of the upper summand of one flag variety:
// v_p(gcd(dims, ind A)).
inline int upper_label(const FlagDescriptor& flag) {
    return vp(index_reduction(flag.algebra(), flag.dims()),
              flag.algebra().prime());
}

// Necessary rank condition for a summand of M(X(dims; A)): the gcd of
// closed-point degrees divides enough of the rank,
// v_p(closed_point_gcd) <= v_p(claimed_rank).
inline bool validate_rank_degree(const AlgebraClass& alg,
                                 const std::vector<long long>& dims,
                                 const Natural& claimed_rank) {
    if (claimed_rank < 1)
        throw std::domain_error("validate_rank_degree: rank must be >= 1");
    const int bound = vp(closed_point_gcd(alg, dims), alg.prime());
    return bound <= vp(claimed_rank, alg.prime());
}

} // namespace motivec
