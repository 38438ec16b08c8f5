#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "app.hpp"

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = modcurve::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("subgroups command") {
    auto r = run({"subgroups", "21"});
    CHECK(r.code == 0);
    CHECK(r.out.find("D1  order 4  ±{1,8}") != std::string::npos);
    CHECK(r.out.find("D2  order 6  ±{1,4,5}") != std::string::npos);
    auto j = nlohmann::json::parse(run({"subgroups", "13", "--format", "json"}).out);
    CHECK(j["results"].size() == 2);
    CHECK(run({"subgroups", "4"}).out.find("0 intermediate") != std::string::npos);
    CHECK(run({"subgroups", "2"}).code == 2);
}

TEST_CASE("curve command") {
    auto r = run({"curve", "34", "--delta", "1,9,13,15", "--format", "json"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::ordered_json::parse(r.out);
    CHECK(j["results"]["status"] == "bielliptic");
    CHECK(j["results"]["witnesses"][0]["name"] == "Ŵ2");
    CHECK(j.dump(2) + "\n" == r.out);
    CHECK(run({"curve", "21", "--delta", "D1"}).out.find("status: hyperelliptic") != std::string::npos);
    CHECK(run({"curve", "13", "--delta", "D1"}).out.find("status: rational") != std::string::npos);
    auto csv = run({"curve", "34", "--delta", "D2", "--format", "csv"}).out;
    CHECK(csv.rfind("N,delta_label,delta_elements,genus,status,witnesses,evidence_tags,quadratic_points\n", 0) == 0);
    CHECK(run({"curve", "34", "--delta", "D9"}).code == 2);
    CHECK(run({"curve", "34"}).code == 2);
    CHECK(run({"curve", "300", "--delta", "D1"}).code == 2);
}

TEST_CASE("fixed-points command") {
    auto r = run({"fixed-points", "34", "2"});
    CHECK(r.code == 0);
    for (const char* s : {"[34,20,3]", "[34,-20,3]", "[34,26,5]", "[34,-26,5]", "[[-10,-3],[34,10]]",
                          "[[10,-3],[34,-10]]", "[[-12,-5],[34,14]]", "[[14,-5],[34,-12]]"})
        CHECK(r.out.find(s) != std::string::npos);
    auto j = nlohmann::json::parse(run({"fixed-points", "34", "2", "--delta", "D2", "--format", "json"}).out);
    CHECK(j["results"]["lift"]["fixed_count_total"] == 8);
    CHECK(run({"fixed-points", "21", "7"}).out.find("0 fixed points") != std::string::npos);
    CHECK(run({"fixed-points", "65", "5", "--delta", "D1"}).code == 2);
    CHECK(run({"fixed-points", "34", "4"}).code == 2);
}

TEST_CASE("census command") {
    auto a = run({"census", "--max-n", "30", "--format", "json"});
    auto b = run({"census", "--max-n", "30", "--format", "json", "--threads", "1"});
    REQUIRE(a.code == 0);
    auto j = nlohmann::ordered_json::parse(a.out);
    CHECK(j["results"] == nlohmann::ordered_json::parse(b.out)["results"]);
    CHECK(j["version"].is_string());
    CHECK(j.dump(2) + "\n" == a.out);
    auto off = nlohmann::json::parse(run({"census", "--max-n", "30", "--facts", "off", "--format", "json"}).out);
    bool warned = false;
    for (const auto& w : off["warnings"]) warned |= w.get<std::string>().find("X_Δ1(25)") != std::string::npos;
    CHECK(warned);
    CHECK(run({"census", "--max-n", "400"}).code == 2);
    CHECK(run({"census", "--format", "xml"}).code == 2);
    CHECK(run({}).code == 2);
}
