#pragma once

// Command dispatch behind the motivec binary. Kept header-level and
// process-free so the full request/response cycle, including exit codes
// and canonical JSON bodies, is testable in-process.

#include "motivec/json_io.hpp"
#include "motivec/split.hpp"

#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace motivec {

struct Request {
    std::string command;
    std::map<std::string, std::string> params;
};

// exit_code: 0 success, 1 a verify check failed, 2 usage or domain error.
// body is the canonical JSON response; text the human rendering.
struct Response {
    int exit_code = 0;
    Json body;
    std::string text;
};

namespace climpl {

inline long long to_ll(const std::string& v, const std::string& what) {
    return detail::parse_ll(v, what.c_str());
}

inline const std::string& require(const Request& req, const std::string& key) {
    const auto it = req.params.find(key);
    if (it == req.params.end())
        throw std::domain_error("missing required flag --" + key);
    return it->second;
}

inline void allow_only(const Request& req,
                       const std::set<std::string>& allowed) {
    for (const auto& [key, value] : req.params)
        if (!allowed.contains(key))
            throw std::domain_error("flag --" + key +
                                    " not accepted by command '" +
                                    req.command + "'");
}

inline std::vector<long long> parse_dims(const std::string& s) {
    std::vector<long long> dims;
    std::string_view body = s;
    while (!body.empty()) {
        const auto comma = body.find(',');
        dims.push_back(detail::parse_ll(body.substr(0, comma), "dims"));
        body = comma == std::string_view::npos ? std::string_view{}
                                               : body.substr(comma + 1);
    }
    if (dims.empty()) throw std::domain_error("dims list is empty");
    return dims;
}

inline std::vector<std::vector<long long>> parse_factors(const std::string& s) {
    std::vector<std::vector<long long>> factors;
    std::string_view body = s;
    while (true) {
        const auto semi = body.find(';');
        factors.push_back(
            parse_dims(std::string(body.substr(0, semi))));
        if (semi == std::string_view::npos) break;
        body = body.substr(semi + 1);
    }
    return factors;
}

// The one of --dims / --factors that is present; exactly one must be.
inline std::vector<std::vector<long long>> factor_dims(const Request& req) {
    const bool has_dims = req.params.contains("dims");
    const bool has_factors = req.params.contains("factors");
    if (has_dims == has_factors)
        throw std::domain_error(
            "provide exactly one of --dims (single factor) or --factors");
    if (has_dims) return {parse_dims(req.params.at("dims"))};
    return parse_factors(req.params.at("factors"));
}

inline ProductVariety build_product(const AlgebraClass& alg,
                                    const std::vector<std::vector<long long>>& factor_list) {
    std::vector<FlagDescriptor> factors;
    factors.reserve(factor_list.size());
    for (const auto& dims : factor_list) factors.emplace_back(alg, dims);
    return ProductVariety(std::move(factors));
}

inline Json strings_array(const std::vector<long long>& values) {
    Json arr = Json::array();
    for (long long v : values) arr.push_back(std::to_string(v));
    return arr;
}

struct CommandResult {
    Json payload;
    std::string text;
    std::vector<std::string> diagnostics;
    bool verify_failed = false;
};

inline CommandResult cmd_poincare(const Request& req, bool with_coefficients) {
    allow_only(req, {"degree", "dims"});
    const long long degree = to_ll(require(req, "degree"), "degree");
    const auto dims = parse_dims(require(req, "dims"));
    const QPoly poly = flag_poincare(degree, dims);
    const long long dim = dim_flag(degree, dims);
    const Natural rank = poly.eval_one();

    CommandResult result;
    result.payload = {{"degree", jsonio::num(degree)},
                      {"dims", strings_array(dims)},
                      {"dim", jsonio::num(dim)},
                      {"rank", jsonio::num(rank)}};
    std::ostringstream text;
    text << "split flag X(";
    for (std::size_t i = 0; i < dims.size(); ++i)
        text << (i ? "," : "") << dims[i];
    text << ") of degree " << degree << "\n";
    if (with_coefficients) {
        Json coeffs = Json::array();
        for (const auto& c : poly.coefficients()) coeffs.push_back(c.str());
        result.payload["coefficients"] = coeffs;
        text << "poincare: " << poly.str() << "\n";
    }
    text << "rank: " << rank.str() << "\n"
         << "dim: " << dim << "\n";
    result.text = text.str();
    return result;
}

inline CommandResult cmd_decompose(const Request& req) {
    allow_only(req, {"p", "n", "m", "variant", "mode"});
    const Prime p(to_ll(require(req, "p"), "p"));
    const int n = static_cast<int>(to_ll(require(req, "n"), "n"));
    const std::string variant = require(req, "variant");
    const std::string mode = req.params.contains("mode")
                                 ? req.params.at("mode")
                                 : std::string("hypothesis");
    if (mode != "hypothesis" && mode != "constraint")
        throw std::domain_error("mode must be 'hypothesis' or 'constraint'");

    MotiveExpr expr = [&] {
        if (variant == "onestep") {
            const int m = static_cast<int>(to_ll(require(req, "m"), "m"));
            return one_step(p, n, m).motive;
        }
        if (variant == "2-2n-X1" || variant == "2-2n-X2") {
            if (req.params.contains("m"))
                throw std::domain_error("--m does not apply to variant " +
                                        variant);
            if (p.value() != 2)
                throw std::domain_error("variant " + variant +
                                        " requires p = 2");
            return decomposition_2_2n(n, variant == "2-2n-X1"
                                             ? TwoTwoVariant::x1
                                             : TwoTwoVariant::x2);
        }
        throw std::domain_error(
            "variant must be one of onestep, 2-2n-X1, 2-2n-X2");
    }();

    const auto& ctx = expr.context();
    const int n_ctx = vp(ctx.index(), ctx.prime());
    Json terms = Json::array();
    Natural total = 0;
    for (const auto& t : expr.terms()) {
        Json tj{{"label", t.label.str()}, {"shift", jsonio::num(t.shift)}};
        if (mode == "hypothesis") {
            const Natural r = hypothesis_rank(ctx, t.label);
            total += r;
            tj["rank_hypothesis"] = r.str();
        } else {
            // Proven valuations only: upper motives contribute n_ctx - l,
            // Tate and product terms have exact ranks.
            int rank_vp = 0;
            if (t.label.kind() == Label::Kind::upper)
                rank_vp = n_ctx - t.label.upper_level();
            else if (t.label.kind() == Label::Kind::product)
                rank_vp = vp(hypothesis_rank(ctx, t.label), ctx.prime());
            tj["rank_vp"] = std::to_string(rank_vp);
        }
        terms.push_back(std::move(tj));
    }

    CommandResult result;
    result.payload = {{"context", to_json(ctx)},
                      {"mode", mode},
                      {"variant", variant},
                      {"terms", terms}};
    if (mode == "hypothesis") {
        result.payload["total_rank"] = total.str();
        result.diagnostics.push_back(
            "ranks assume upper motives carry their full conjectural rank");
    }
    std::ostringstream text;
    text << "decomposition (" << variant << ", " << mode
         << " mode) over context degree " << ctx.degree() << ", index "
         << ctx.index() << ", p = " << ctx.prime().value() << "\n";
    for (const auto& tj : terms) {
        text << "  " << tj.at("label").get<std::string>() << " @ "
             << tj.at("shift").get<std::string>();
        if (mode == "hypothesis")
            text << "  rank " << tj.at("rank_hypothesis").get<std::string>();
        else
            text << "  v_p(rank) " << tj.at("rank_vp").get<std::string>();
        text << "\n";
    }
    if (mode == "hypothesis") text << "total rank: " << total.str() << "\n";
    result.text = text.str();
    return result;
}

inline CommandResult cmd_candim(const Request& req) {
    allow_only(req, {"p", "degree", "index", "dims", "factors"});
    const Prime p(to_ll(require(req, "p"), "p"));
    const AlgebraClass alg(to_ll(require(req, "degree"), "degree"),
                           to_ll(require(req, "index"), "index"), p);
    const ProductVariety product = build_product(alg, factor_dims(req));
    const CanDimReport report = cdim_p(product);

    CommandResult result;
    result.payload = to_json(report);
    std::ostringstream text;
    text << report.variety << "\n"
         << "cdim_" << report.p << " = " << report.cdim_p
         << ", dim = " << report.dim << "\n"
         << (report.incompressible ? "incompressible" : "compressible")
         << "\n";
    result.text = text.str();
    return result;
}

inline CommandResult cmd_classify(const Request& req) {
    allow_only(req, {"p", "degree", "index", "dims", "factors"});
    const Prime p(to_ll(require(req, "p"), "p"));
    const AlgebraClass alg(to_ll(require(req, "degree"), "degree"),
                           to_ll(require(req, "index"), "index"), p);
    const ProductVariety product = build_product(alg, factor_dims(req));
    const auto labels = upper_labels_allowed(product);

    CommandResult result;
    Json labels_json = Json::array();
    for (int l : labels) labels_json.push_back(std::to_string(l));
    Json factors_json = Json::array();
    for (const auto& f : product.factors())
        factors_json.push_back(
            {{"dims", strings_array(f.dims())},
             {"upper_label", std::to_string(upper_label(f))}});
    result.payload = {{"algebra", to_json(alg)},
                      {"factors", factors_json},
                      {"generic_index", jsonio::num(generic_index(product))},
                      {"labels_allowed", labels_json}};
    std::ostringstream text;
    text << variety_descriptor(product) << "\n"
         << "generic index: " << generic_index(product) << "\n"
         << "upper labels allowed: ";
    for (std::size_t i = 0; i < labels.size(); ++i)
        text << (i ? "," : "") << labels[i];
    text << "\n";
    for (const auto& f : product.factors()) {
        text << "  X(";
        for (std::size_t i = 0; i < f.dims().size(); ++i)
            text << (i ? "," : "") << f.dims()[i];
        text << ") upper label: " << upper_label(f) << "\n";
    }
    result.text = text.str();
    return result;
}

inline CommandResult cmd_verify(const Request& req) {
    allow_only(req, {"p", "n", "check"});
    const Prime p(to_ll(require(req, "p"), "p"));
    const int n = static_cast<int>(to_ll(require(req, "n"), "n"));
    const std::string check = require(req, "check");

    CommandResult result;
    std::ostringstream text;
    if (check == "basic2") {
        const ProofTrace trace = verify_basic2(p, n);
        result.payload = {{"check", check}, {"trace", to_json(trace)}};
        result.verify_failed = !trace.pass;
        text << "rank-valuation replay, p = " << p.value() << ", n = " << n
             << "\n";
        for (const auto& rec : trace.records) {
            text << "  m=" << rec.m << ": "
                 << (rec.pass ? "PASS" : "FAIL") << " (sources "
                 << rec.source_count << "/" << p.value();
            if (!rec.base_case)
                text << ", orbit subset " << rec.valuation_subset_size
                     << ", diagonal vp " << rec.diagonal_rank_vp << " > "
                     << rec.rank_vp_bound;
            text << ", v_p(rank) = " << rec.kummer_vp << ")\n";
        }
        text << "result: " << (trace.pass ? "PASS" : "FAIL") << "\n";
    } else if (check == "poincare-identity") {
        if (n < 1)
            throw std::domain_error("poincare-identity needs n >= 1");
        Json cases = Json::array();
        bool pass = true;
        const long long d = ipow(p.value(), n - 1);
        text << "shift-rule identity, p = " << p.value() << ", n = " << n
             << "\n";
        for (int m = 0; m < n; ++m) {
            QPoly total;
            for_each_composition(
                p.value(), ipow(p.value(), m), d,
                [&](const std::vector<long long>& parts) {
                    QPoly term =
                        QPoly::monomial(1, static_cast<std::size_t>(
                                               shift_rule({parts}, d)));
                    for (long long part : parts)
                        term = term * gauss_binom(d, part);
                    total = total + term;
                });
            const bool ok = total == gauss_binom(ipow(p.value(), n),
                                                 ipow(p.value(), m));
            pass = pass && ok;
            cases.push_back({{"m", std::to_string(m)}, {"ok", ok}});
            text << "  m=" << m << ": " << (ok ? "PASS" : "FAIL") << "\n";
        }
        result.payload = {{"check", check},
                          {"p", jsonio::num(p.value())},
                          {"n", jsonio::num(n)},
                          {"cases", cases},
                          {"pass", pass}};
        result.verify_failed = !pass;
        text << "result: " << (pass ? "PASS" : "FAIL") << "\n";
    } else if (check == "kummer") {
        if (n < 0) throw std::domain_error("kummer needs n >= 0");
        Json failures = Json::array();
        Natural pairs = 0;
        for (long long nn = 0; nn <= n; ++nn) {
            for (long long k = 0; k <= nn; ++k) {
                pairs += 1;
                if (vp_binom(nn, k, p) != vp(binom(nn, k), p))
                    failures.push_back({{"n", std::to_string(nn)},
                                        {"k", std::to_string(k)}});
            }
        }
        const bool pass = failures.empty();
        result.payload = {{"check", check},
                          {"p", jsonio::num(p.value())},
                          {"bound", jsonio::num(n)},
                          {"pairs", pairs.str()},
                          {"failures", failures},
                          {"pass", pass}};
        result.verify_failed = !pass;
        text << "carry count vs direct valuation, p = " << p.value()
             << ", all 0 <= k <= n <= " << n << ": "
             << (pass ? "PASS" : "FAIL") << " (" << pairs.str()
             << " pairs)\n";
    } else {
        throw std::domain_error(
            "check must be one of basic2, poincare-identity, kummer");
    }
    if (result.verify_failed)
        result.diagnostics.push_back("verification failed: " + check);
    result.text = text.str();
    return result;
}

} // namespace climpl

inline Response dispatch(const Request& req) {
    Json body{{"command", req.command},
              {"params", Json::object()},
              {"status", "ok"},
              {"payload", Json::object()},
              {"diagnostics", Json::array()}};
    for (const auto& [key, value] : req.params) body["params"][key] = value;
    try {
        climpl::CommandResult result;
        if (req.command == "poincare")
            result = climpl::cmd_poincare(req, true);
        else if (req.command == "rank")
            result = climpl::cmd_poincare(req, false);
        else if (req.command == "decompose")
            result = climpl::cmd_decompose(req);
        else if (req.command == "candim")
            result = climpl::cmd_candim(req);
        else if (req.command == "classify")
            result = climpl::cmd_classify(req);
        else if (req.command == "verify")
            result = climpl::cmd_verify(req);
        else
            throw std::domain_error("unknown command '" + req.command + "'");

        body["payload"] = std::move(result.payload);
        for (const auto& d : result.diagnostics)
            body["diagnostics"].push_back(d);
        return {result.verify_failed ? 1 : 0, std::move(body),
                std::move(result.text)};
    } catch (const std::exception& e) {
        body["status"] = "error";
        body["diagnostics"].push_back(e.what());
        return {2, std::move(body), std::string("error: ") + e.what() + "\n"};
    }
}

} // namespace motivec
