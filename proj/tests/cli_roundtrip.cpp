// Drives the built CLI binary: commands succeed, identical configurations
// produce byte-identical output, and every emitted table parses back through
// the JSON parser.  argv[1] is the path to the binary.

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

int failures = 0;

void expect(bool ok, const std::string& what) {
    if (!ok) {
        std::cerr << "[FAIL] " << what << "\n";
        ++failures;
    }
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

int run(const std::string& cmd) { return std::system(cmd.c_str()); }

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_roundtrip <path-to-qtl>\n";
        return 1;
    }
    std::string bin = argv[1];
    std::string tmp = "cli_roundtrip_tmp";

    // Determinism: identical config gives byte-identical output.
    expect(run(bin + " basis --d 1,1 --which c --out " + tmp + "1.json") == 0, "basis runs");
    expect(run(bin + " basis --d 1,1 --which c --out " + tmp + "2.json") == 0, "basis reruns");
    expect(slurp(tmp + "1.json") == slurp(tmp + "2.json"), "basis output deterministic");

    // Round trip through the JSON parser.
    auto parsed = nlohmann::json::parse(slurp(tmp + "1.json"));
    expect(parsed["command"] == "basis", "command field");
    expect(parsed["elements"].size() == 4, "four canonical elements on (1,1)");
    for (auto& e : parsed["elements"]) {
        expect(e["certified"].get<bool>(), "certified flags all set");
        expect(e.contains("support") && e["support"].is_array(), "support schema");
    }

    expect(run(bin + " basis --d 2 --which e --out " + tmp + "3.json") == 0, "elementary basis");
    expect(nlohmann::json::parse(slurp(tmp + "3.json"))["elements"].size() == 3,
           "three elements for d = 2");

    expect(run(bin + " basis --d 1,1,1 --which s --out " + tmp + "4.json") == 0,
           "decomposition basis");
    expect(nlohmann::json::parse(slurp(tmp + "4.json"))["elements"].size() == 8,
           "eight elements for d = (1,1,1)");

    // Render matches the worked diagram.
    expect(run(bin + " render --d 1,1 --a 1,0 --out " + tmp + ".txt") == 0, "render runs");
    expect(slurp(tmp + ".txt") == "[v][^]\n (  ) \n", "render diagram");
    expect(run(bin + " render --d 4,3,3,4 --a 3,1,1,2 --out " + tmp + "b.txt") == 0,
           "render big diagram");

    // Intertwiner table for (1,1): two rows with constants 1 + q^2 and 1.
    expect(run(bin + " intertwiners --d 1,1 --out " + tmp + "5.json") == 0, "intertwiners run");
    {
        auto j = nlohmann::json::parse(slurp(tmp + "5.json"));
        expect(j["rows"].size() == 2, "two matches on (1,1)");
        expect(j["rows"][0]["c_b"] == "1 + q^2", "empty-match constant");
        expect(j["rows"][1]["c_b"] == "1", "arc-match constant");
    }

    expect(run(bin + " kappa --d 1,1 --out " + tmp + "6.json") == 0, "kappa runs");
    expect(run(bin + " kappa --d 1,1 --out " + tmp + "6b.json") == 0, "kappa reruns");
    expect(slurp(tmp + "6.json") == slurp(tmp + "6b.json"), "kappa output deterministic");
    expect(run(bin + " intertwiners --d 2,1 --format csv --out " + tmp + "6c.csv") == 0,
           "intertwiners csv");
    expect(run(bin + " intertwiners --d 2,1 --format csv --out " + tmp + "6d.csv") == 0,
           "intertwiners csv rerun");
    expect(slurp(tmp + "6c.csv") == slurp(tmp + "6d.csv"), "csv output deterministic");
    expect(run(bin + " strata --d 1,1 --out " + tmp + "7.json") == 0, "strata runs");
    {
        auto j = nlohmann::json::parse(slurp(tmp + "7.json"));
        expect(j["labels"].size() == 5, "five realizable labels on (1,1)");
    }

    // Verification: symbolic suite passes; an over-cap request is a config error.
    expect(run(bin + " verify --suite xi --max-total 2 --out " + tmp + "8.json") == 0,
           "small verify passes");
    expect(run(bin + " verify --suite oracle --max-total 99 --out " + tmp + "9.json") / 256 == 2,
           "over-cap verify exits 2");

    if (failures == 0) std::puts("cli roundtrip: all checks passed");
    return failures;
}
