#include <doctest.h>

#include <cctype>
#include <fstream>
#include <functional>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "elsurf/cli.hpp"
#include "elsurf/rational.hpp"

using namespace elsurf;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<const char*> args) {
    args.insert(args.begin(), "elsurf");
    std::ostringstream out, err;
    int code = run_command(static_cast<int>(args.size()), args.data(), out, err);
    return Result{code, out.str(), err.str()};
}

std::string write_config(const std::string& body) {
    std::string path = "test_cli_config.json";
    std::ofstream f(path);
    f << body;
    return path;
}

}  // namespace

TEST_CASE("fiber classify") {
    Result r = run({"fiber", "classify", "--type", "II", "--weight", "9/10"});
    CHECK(r.code == 0);
    CHECK(r.out.find("intermediate") != std::string::npos);
    CHECK(r.out.find("A1 + A2*") != std::string::npos);

    r = run({"fiber", "classify", "--type", "I0", "--weight", "0"});
    CHECK(r.code == 0);
    CHECK(r.out.find("Weierstrass") != std::string::npos);
}

TEST_CASE("invalid input exits 1 with a diagnostic") {
    Result r = run({"fiber", "classify", "--type", "V", "--weight", "1/2"});
    CHECK(r.code == 1);
    CHECK_FALSE(r.err.empty());
    r = run({"fiber", "classify", "--type", "II", "--weight", "3/2"});
    CHECK(r.code == 1);
    r = run({"fiber", "classify", "--type", "I500", "--weight", "1/2"});
    CHECK(r.code == 1);  // index cap
    r = run({"no-such-command"});
    CHECK(r.code == 1);
}

TEST_CASE("mmp json output round-trips exact rationals") {
    Result r = run({"fiber", "mmp", "--type", "I2*", "--weight", "1", "--trace", "--json"});
    REQUIRE(r.code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["form"] == "twisted");
    CHECK(doc["weight"] == "1");
    // every rational string parses back to an identical representation
    std::function<void(const nlohmann::json&)> walk = [&](const nlohmann::json& node) {
        if (node.is_object() || node.is_array()) {
            for (const auto& child : node) walk(child);
        } else if (node.is_string()) {
            std::string s = node.get<std::string>();
            if (!s.empty() && (std::isdigit(static_cast<unsigned char>(s[0])) || s[0] == '-')) {
                CHECK(Rational::parse(s).str() == s);
            }
        }
    };
    walk(doc["final_graph"]);
    walk(doc["trace"]);
    walk(doc["log_discrepancies"]);
    CHECK(!doc["trace"].empty());
}

TEST_CASE("surface commands with a config file") {
    std::string path = write_config(R"({
      "genus": 0,
      "deg_L": 1,
      "marks": [
        {"type": "I0*", "weight": "2/5"},
        {"type": "I0*", "weight": "1"}
      ],
      "generic_marks": ["2/5"]
    })");
    Result r = run({"surface", "canonical", "--config", path.c_str()});
    CHECK(r.code == 0);
    CHECK(r.out.find("K = -G") != std::string::npos);

    r = run({"surface", "model", "--config", path.c_str(), "--json"});
    REQUIRE(r.code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["kind"] == "pseudoelliptic");
    CHECK(doc["section_contracted"] == true);

    r = run({"walls", "--config", path.c_str(), "--path", "a,1,a"});
    CHECK(r.code == 0);
    CHECK(r.out.find("wall at 1/4") != std::string::npos);
    CHECK(r.out.find("wall at 1/3") != std::string::npos);
    CHECK(r.out.find("wall at 1/2") != std::string::npos);
    CHECK(r.out.find("(1/4, 1/3]") != std::string::npos);

    r = run({"walls", "--config", path.c_str(), "--path", "a,a"});
    CHECK(r.code == 1);  // wrong entry count

    r = run({"surface", "model", "--config", "does_not_exist.json"});
    CHECK(r.code == 1);
}

TEST_CASE("malformed config is invalid input") {
    std::string path = write_config(R"({"genus": 0, "deg_L": 1, "marks": [{"type": "II"}]})");
    Result r = run({"surface", "model", "--config", path.c_str()});
    CHECK(r.code == 1);
    CHECK(r.err.find("error") != std::string::npos);

    path = write_config(R"({"genus": 0, "deg_L": 1, "marks": [{"type": "II", "weight": "0.9"}]})");
    r = run({"surface", "model", "--config", path.c_str()});
    CHECK(r.code == 1);
}

TEST_CASE("built-in example") {
    Result r = run({"example", "rational-i0star"});
    CHECK(r.code == 0);
    CHECK(r.out.find("t = 4*a - 1") != std::string::npos);
    CHECK(r.out.find("1/2*(3*a - 1)*(5*a - 1)") != std::string::npos);
    CHECK(r.out.find("wall at 1/4") != std::string::npos);
    CHECK(r.out.find("wall at 1") != std::string::npos);
    CHECK(r.out.find("1/5") == std::string::npos);  // spurious root excluded

    r = run({"example", "unknown"});
    CHECK(r.code == 1);
}

TEST_CASE("path expressions") {
    std::string path = write_config(R"({
      "genus": 0,
      "deg_L": 1,
      "marks": [{"type": "I1", "weight": "1/2"}, {"type": "I1", "weight": "1/2"}],
      "generic_marks": []
    })");
    Result ok = run({"walls", "--config", path.c_str(), "--path", "1-s/2,s/2"});
    CHECK(ok.code == 0);
    Result bad = run({"walls", "--config", path.c_str(), "--path", "a,b"});
    CHECK(bad.code == 1);  // two different symbols
    bad = run({"walls", "--config", path.c_str(), "--path", "a*a,a"});
    CHECK(bad.code == 1);
}
