#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <auslab/cli.hpp>

using namespace auslab;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("group spec parsing") {
    auto a = parse_group("rot(1)", 3);
    REQUIRE(a.generators.size() == 1);
    CHECK(a.generators[0] == Automorphism::rotation(3, 1));

    auto b = parse_group("rot(1), refl(0)", 5);
    CHECK(b.group().order() == 10);

    auto c = parse_group("scalar(2;1,1,1;1,1,1)", 3);
    std::vector<Scalar> minus(3, Scalar(-1));
    CHECK(c.generators[0] == Automorphism::diagonal(3, minus, minus));

    CHECK(parse_group("rot(4)", 3).generators[0] == Automorphism::rotation(3, 1));
    CHECK(parse_group("refl(-1)", 4).generators[0] == Automorphism::reflection(4, 3));
}

TEST_CASE("group spec errors carry byte offsets") {
    try {
        parse_group("rot(1),bogus(2)", 3);
        FAIL("no error");
    } catch (const GroupSpecError& e) {
        CHECK(e.offset() == 7);
    }
    try {
        parse_group("rot(1", 3);
        FAIL("no error");
    } catch (const GroupSpecError& e) {
        CHECK(e.offset() == 5);
    }
    CHECK_THROWS_AS(parse_group("scalar(2;1,1;1,1,1)", 3), GroupSpecError);
    CHECK_THROWS_AS(parse_group("scalar(0;1,1,1;1,1,1)", 3), GroupSpecError);
    CHECK_THROWS_AS(parse_group("", 3), GroupSpecError);
}

TEST_CASE("print / parse round trip") {
    for (const std::string text : {"rot(1)", "rot(2),refl(1)", "scalar(2;1,1,1;1,1,1)", "scalar(4;1,1,1;3,3,3)",
                                   "refl(0),scalar(2;0,0,1;0,0,1)"}) {
        auto spec = parse_group(text, 3);
        auto again = parse_group(print_group(spec), 3);
        CHECK(again.generators == spec.generators);
        CHECK(print_group(again) == print_group(spec));
    }
    for (const auto& sub : enumerate_subgroups(6)) {
        auto spec = parse_group(print_group(sub.group), 6);
        CHECK(spec.group().order() == sub.group.order());
    }
}

TEST_CASE("report envelope") {
    json payload = {{"b", 1}, {"a", {1, 2, 3}}};
    auto rep = make_report("test", payload, 0.5);
    CHECK(rep["schema_version"] == kReportSchemaVersion);
    CHECK(rep["metadata"]["payload_sha256"] == payload_digest(payload));
    CHECK(payload_digest(payload).size() == 64);
    CHECK(payload_digest(json::object()) == "44136fa355b3678a1146ad16f7e8649e94fb4fc21fe77e8310c060f61caaff8a");
}

TEST_CASE("cli exit codes") {
    auto ok = run({"auslander", "--n", "3", "--group", "rot(1)", "--degree", "14"});
    CHECK(ok.code == 0);
    auto j = json::parse(ok.out);
    CHECK(j["payload"]["verdict_empirical"] == "Iso");
    CHECK(j["payload"]["agree"] == true);

    CHECK(run({"auslander", "--n", "3", "--group", "rot(1"}).code == 1);
    CHECK(run({"auslander", "--n", "2", "--group", "rot(1)"}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"verify", "--suite", "nope", "--n", "3"}).code == 1);
    CHECK(run({"verify", "--suite", "relations", "--n", "4", "--degree", "12"}).code == 0);
    CHECK(run({"hilbert", "--n", "3", "--degree", "4"}).code == 0);
}

TEST_CASE("scan writes json and csv") {
    const auto dir = std::filesystem::temp_directory_path() / "auslab_scan_test";
    std::filesystem::remove_all(dir);
    auto r = run({"scan", "--n-list", "3,4", "--all-dihedral-subgroups", "--degree", "20", "--out", dir.string()});
    REQUIRE(r.code == 0);
    std::ifstream f(dir / "scan.json");
    json rep = json::parse(f);
    int not_iso3 = 0, not_iso4 = 0;
    for (const auto& row : rep["payload"]["rows"]) {
        if (row["verdict_empirical"] == "NotIso") {
            (row["n"] == 3 ? not_iso3 : not_iso4)++;
        }
        CHECK(row["agree"] == true);
    }
    CHECK(not_iso3 == 1);
    CHECK(not_iso4 == 2);
    CHECK(std::filesystem::exists(dir / "scan.csv"));
    std::filesystem::remove_all(dir);
}

TEST_CASE("scan payload is deterministic across worker counts") {
    auto a = scan_payload(run_scan({3, 4}, -1, 1)).dump();
    auto b = scan_payload(run_scan({3, 4}, -1, 4)).dump();
    CHECK(a == b);
}
