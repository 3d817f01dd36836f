#include "motivec/cli.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace motivec;

namespace {

Response run(std::string command,
             std::map<std::string, std::string> params) {
    return dispatch({std::move(command), std::move(params)});
}

} // namespace

TEST_CASE("poincare command") {
    const Response r = run("poincare", {{"degree", "4"}, {"dims", "2"}});
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.body.at("status") == "ok");
    REQUIRE(r.body.at("command") == "poincare");
    REQUIRE(r.body.at("params").at("degree") == "4");
    const Json& payload = r.body.at("payload");
    REQUIRE(payload.at("coefficients") ==
            Json::array({"1", "1", "2", "1", "1"}));
    REQUIRE(payload.at("rank") == "6");
    REQUIRE(payload.at("dim") == "4");
    REQUIRE(r.text.find("1 + q + 2*q^2 + q^3 + q^4") != std::string::npos);

    const Response line = run("poincare", {{"degree", "2"}, {"dims", "1"}});
    REQUIRE(line.exit_code == 0);
    REQUIRE(line.body.at("payload").at("coefficients") ==
            Json::array({"1", "1"}));
}

TEST_CASE("rank command leaves out coefficients") {
    const Response r = run("rank", {{"degree", "4"}, {"dims", "1,2"}});
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.body.at("payload").at("rank") == "12");
    REQUIRE(r.body.at("payload").at("dim") == "5");
    REQUIRE_FALSE(r.body.at("payload").contains("coefficients"));
}

TEST_CASE("decompose one-step in hypothesis mode") {
    const Response r = run("decompose", {{"p", "2"},
                                         {"n", "2"},
                                         {"m", "1"},
                                         {"variant", "onestep"}});
    REQUIRE(r.exit_code == 0);
    const Json& payload = r.body.at("payload");
    REQUIRE(payload.at("mode") == "hypothesis");
    REQUIRE(payload.at("total_rank") == "6");
    REQUIRE(payload.at("terms").size() == 3);
    REQUIRE(payload.at("terms").at(0) ==
            Json({{"label", "Tate"},
                  {"rank_hypothesis", "1"},
                  {"shift", "0"}}));
    REQUIRE(payload.at("terms").at(1).at("label") == "Product(1,1)");
    REQUIRE(payload.at("terms").at(1).at("rank_hypothesis") == "4");
    // Hypothesis mode always carries the conditionality diagnostic.
    REQUIRE(r.body.at("diagnostics").size() == 1);
    // The payload embeds the canonical motive serialization.
    REQUIRE(motive_from_json(payload) == one_step(Prime(2), 2, 1).motive);
}

TEST_CASE("decompose 2-2n variants and constraint mode") {
    const Response x2 = run("decompose", {{"p", "2"},
                                          {"n", "2"},
                                          {"variant", "2-2n-X2"},
                                          {"mode", "constraint"}});
    REQUIRE(x2.exit_code == 0);
    const Json& payload = x2.body.at("payload");
    REQUIRE(payload.at("terms").size() == 4);
    REQUIRE(payload.at("terms").at(0) ==
            Json({{"label", "Upper(1)"}, {"rank_vp", "0"}, {"shift", "0"}}));
    REQUIRE(payload.at("terms").at(1) ==
            Json({{"label", "Upper(0)"}, {"rank_vp", "1"}, {"shift", "1"}}));
    REQUIRE_FALSE(payload.contains("total_rank"));
    REQUIRE(x2.body.at("diagnostics").empty());
    REQUIRE(motive_from_json(payload) ==
            decomposition_2_2n(2, TwoTwoVariant::x2));

    const Response x1 = run("decompose",
                            {{"p", "2"}, {"n", "3"}, {"variant", "2-2n-X1"}});
    REQUIRE(x1.exit_code == 0);
    REQUIRE(x1.body.at("payload").at("terms").size() == 2);
}

TEST_CASE("decompose validation errors exit 2") {
    for (const auto& params :
         std::vector<std::map<std::string, std::string>>{
             {{"p", "2"}, {"n", "2"}, {"variant", "onestep"}}, // m missing
             {{"p", "2"}, {"n", "2"}, {"m", "2"}, {"variant", "onestep"}},
             {{"p", "3"}, {"n", "2"}, {"variant", "2-2n-X2"}},
             {{"p", "2"}, {"n", "1"}, {"variant", "2-2n-X2"}},
             {{"p", "2"}, {"n", "2"}, {"variant", "mystery"}},
             {{"p", "2"}, {"n", "2"}, {"m", "1"}, {"variant", "onestep"},
              {"mode", "exact"}},
             {{"p", "4"}, {"n", "2"}, {"m", "1"}, {"variant", "onestep"}},
             {{"p", "2"}, {"n", "2"}, {"variant", "2-2n-X1"},
              {"m", "1"}}}) {
        const Response r = run("decompose", params);
        REQUIRE(r.exit_code == 2);
        REQUIRE(r.body.at("status") == "error");
        REQUIRE_FALSE(r.body.at("diagnostics").empty());
    }
}

TEST_CASE("candim command accepts --dims or --factors") {
    const Response single = run("candim", {{"p", "2"},
                                           {"degree", "8"},
                                           {"index", "8"},
                                           {"dims", "2"}});
    REQUIRE(single.exit_code == 0);
    REQUIRE(single.body.at("payload").at("cdim_p") == "12");
    REQUIRE(single.body.at("payload").at("incompressible") == true);
    REQUIRE(candim_from_json(single.body.at("payload")).cdim_p == 12);

    const Response product = run("candim", {{"p", "2"},
                                            {"degree", "8"},
                                            {"index", "8"},
                                            {"factors", "2;2"}});
    REQUIRE(product.exit_code == 0);
    REQUIRE(product.body.at("payload").at("incompressible") == false);

    REQUIRE(run("candim", {{"p", "2"}, {"degree", "8"}, {"index", "8"}})
                .exit_code == 2);
    REQUIRE(run("candim", {{"p", "2"},
                           {"degree", "8"},
                           {"index", "8"},
                           {"dims", "2"},
                           {"factors", "2"}})
                .exit_code == 2);
}

TEST_CASE("classify command") {
    const Response r = run("classify", {{"p", "2"},
                                        {"degree", "8"},
                                        {"index", "8"},
                                        {"factors", "2,4;1"}});
    REQUIRE(r.exit_code == 0);
    const Json& payload = r.body.at("payload");
    REQUIRE(payload.at("generic_index") == "1");
    REQUIRE(payload.at("labels_allowed") == Json::array({"0"}));
    REQUIRE(payload.at("factors").at(0).at("upper_label") == "1");
    REQUIRE(payload.at("factors").at(1).at("upper_label") == "0");

    const Response deep = run("classify", {{"p", "2"},
                                           {"degree", "8"},
                                           {"index", "8"},
                                           {"dims", "4"}});
    REQUIRE(deep.body.at("payload").at("labels_allowed") ==
            Json::array({"0", "1", "2"}));

    const Response flag = run("classify", {{"p", "2"},
                                           {"degree", "8"},
                                           {"index", "8"},
                                           {"factors", "2,4"}});
    REQUIRE(flag.body.at("payload").at("labels_allowed") ==
            Json::array({"0", "1"}));
    REQUIRE(flag.body.at("payload").at("factors").at(0).at("upper_label") ==
            "1");
}

TEST_CASE("verify basic2 passes with exit 0") {
    const Response r =
        run("verify", {{"p", "2"}, {"n", "3"}, {"check", "basic2"}});
    REQUIRE(r.exit_code == 0);
    const Json& trace = r.body.at("payload").at("trace");
    REQUIRE(trace.at("pass") == true);
    REQUIRE(proof_trace_from_json(trace).pass);
    REQUIRE(r.text.find("result: PASS") != std::string::npos);
}

TEST_CASE("verify poincare-identity and kummer") {
    const Response pi = run("verify", {{"p", "3"},
                                       {"n", "2"},
                                       {"check", "poincare-identity"}});
    REQUIRE(pi.exit_code == 0);
    REQUIRE(pi.body.at("payload").at("pass") == true);
    REQUIRE(pi.body.at("payload").at("cases").size() == 2);

    const Response ku =
        run("verify", {{"p", "2"}, {"n", "40"}, {"check", "kummer"}});
    REQUIRE(ku.exit_code == 0);
    REQUIRE(ku.body.at("payload").at("pass") == true);
    REQUIRE(ku.body.at("payload").at("failures").empty());

    REQUIRE(run("verify", {{"p", "2"}, {"n", "3"}, {"check", "unknown"}})
                .exit_code == 2);
}

TEST_CASE("usage errors: unknown command, flags, bad values") {
    REQUIRE(run("transmogrify", {}).exit_code == 2);
    REQUIRE(run("poincare", {{"degree", "4"}}).exit_code == 2);
    REQUIRE(run("poincare", {{"degree", "4"}, {"dims", "2"}, {"p", "2"}})
                .exit_code == 2); // --p not accepted here
    REQUIRE(run("poincare", {{"degree", "4"}, {"dims", "5"}}).exit_code == 2);
    REQUIRE(run("poincare", {{"degree", "four"}, {"dims", "2"}}).exit_code ==
            2);
    REQUIRE(run("poincare", {{"degree", "4"}, {"dims", ""}}).exit_code == 2);
    REQUIRE(run("candim", {{"p", "2"},
                           {"degree", "12"},
                           {"index", "6"},
                           {"dims", "2"}})
                .exit_code == 2); // index not a p-power
    const Response bad = run("verify", {{"p", "6"}, {"n", "2"},
                                        {"check", "basic2"}});
    REQUIRE(bad.exit_code == 2);
    REQUIRE(bad.body.at("status") == "error");
}

TEST_CASE("responses keep the request envelope") {
    const Response r = run("rank", {{"degree", "6"}, {"dims", "3"}});
    REQUIRE(r.body.contains("command"));
    REQUIRE(r.body.contains("params"));
    REQUIRE(r.body.contains("payload"));
    REQUIRE(r.body.contains("diagnostics"));
    REQUIRE(r.body.contains("status"));
    REQUIRE(r.body.at("params") ==
            Json({{"degree", "6"}, {"dims", "3"}}));
}

TEST_CASE("dispatch output is byte-identical across calls") {
    const Request req{"verify",
                      {{"p", "2"}, {"n", "3"}, {"check", "basic2"}}};
    const std::string once = canonical_dump(dispatch(req).body);
    const std::string twice = canonical_dump(dispatch(req).body);
    REQUIRE(once == twice);
    // Key order in the dump is sorted.
    REQUIRE(once.find("\"command\"") < once.find("\"diagnostics\""));
    REQUIRE(once.find("\"diagnostics\"") < once.find("\"params\""));
    REQUIRE(once.find("\"params\"") < once.find("\"payload\""));
    REQUIRE(once.find("\"payload\"") < once.find("\"status\""));
}
