#include "orbifold/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

using namespace orbifold;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    args.insert(args.begin(), "orbifold");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string data(const char* name)
{
    return std::string(ORBIFOLD_TEST_DATA) + "/" + name;
}

nlohmann::json json_of(const Run& r)
{
    return nlohmann::json::parse(r.out);
}

} // namespace

TEST_CASE("cover")
{
    const auto z2 = run({"--json", "cover", data("z2.json")});
    REQUIRE(z2.code == kExitOk);
    CHECK(json_of(z2)["genuinely_ramified"] == true);
    CHECK(json_of(z2)["max_etale_degree"] == 1);

    const auto et = run({"--json", "cover", data("etale2.json")});
    REQUIRE(et.code == kExitOk);
    CHECK(json_of(et)["genuinely_ramified"] == false);
    CHECK(json_of(et)["max_etale_degree"] == 2);

    CHECK(run({"cover", data("disconnected.json")}).code == kExitInvariant);
    CHECK(run({"cover", data("bad_syntax.json")}).code == kExitSchema);
    CHECK(run({"cover", data("bad_schema.json")}).code == kExitSchema);
    CHECK(run({"cover", data("missing.json")}).code == kExitSchema);
}

TEST_CASE("branch")
{
    const auto r = json_of(run({"--json", "branch", data("z2.json"), data("P44.json")}));
    CHECK(r["f*P"] == nlohmann::json{{"0[0]", 2}, {"inf[0]", 2}});
    const auto e = json_of(run({"--json", "branch", data("z2.json")}));
    CHECK(e["f*P"].empty());
    const auto six = json_of(run({"--json", "branch", data("z6.json")}));
    CHECK(six["B_f"] == nlohmann::json{{"0", 6}, {"inf", 6}});
}

TEST_CASE("divisor")
{
    const auto r = run({"--json", "divisor", data("P22.json"), data("half0.json"), "--cover", data("z2.json")});
    REQUIRE(r.code == kExitOk);
    const auto j = json_of(r);
    CHECK(j["deg_P"] == "1/2");
    CHECK(j["pullback_deg"] == "1");
    CHECK(run({"--char", "5", "divisor", data("char3.json"), data("half0.json")}).code == kExitSchema);
}

TEST_CASE("bundle")
{
    const auto r = run({"--json", "bundle", data("slopes10.json"), "--cover", data("z2.json")});
    REQUIRE(r.code == kExitOk);
    const auto j = json_of(r);
    CHECK(j["semistable"] == false);
    CHECK(j["hn"].size() == 2);
    CHECK(j["pullback"]["slope"] == "1");
    CHECK(j["pullback"]["slope_relation"] == true);
}

TEST_CASE("equiv")
{
    const auto r = json_of(run({"--json", "equiv", data("eq_s.json")}));
    CHECK(r["S"]["degree"] == "0");
    CHECK(r["S"]["residues"]["0"] == nlohmann::json::array({1, 2}));
    const auto s = json_of(run({"--json", "equiv", "--structure", "2"}));
    CHECK(s["degrees"] == nlohmann::json::array({"0", "0"}));
}

TEST_CASE("audit")
{
    const auto r = run({"--json", "audit", "kummer2-halfweights"});
    REQUIRE(r.code == kExitOk);
    const auto j = json_of(r);
    CHECK(j["hom"]["orbifold"] == 0);
    CHECK(j["hom"]["equivariant"] == 0);
    CHECK(j["hom"]["plain_pullback"] == 1);
    CHECK(j["status"]["hom_equality"]["plain"] == "discrepant");
    CHECK(run({"audit", "--list"}).out.find("kummer2-trivialP") != std::string::npos);
    CHECK(run({"audit", "no-such-case"}).code == kExitSchema);
    CHECK(json_of(run({"--json", "audit", data("audit_same.json")}))["hom"]["plain_pullback"] == 1);
}

TEST_CASE("selftest and flags")
{
    CHECK(run({"--scale", "0", "selftest"}).code == kExitOk);
    const auto f = run({"--scale", "1", "--seed", "3", "selftest", "--inject-fault"});
    CHECK(f.code == kExitPropertyFailure);
    CHECK(f.out.find("FAIL degree_multiplicativity") != std::string::npos);
    CHECK(run({"--help"}).code == kExitOk);
    CHECK(run({"--bogus"}).code == kExitSchema);
    CHECK(run({}).code == kExitSchema);
}
