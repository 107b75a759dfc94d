// Runs the zft binary and checks its outputs and exit codes.
#include <catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <sys/wait.h>

#include "zft/zft.hpp"

using namespace zft;

namespace {

std::string binary;

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = "NO_COLOR=1 " + binary + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe);
    std::string out;
    std::array<char, 4096> buf{};
    while (const std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

const std::string p5 = emit_graph6(path_graph(5));

} // namespace

TEST_CASE("text outputs") {
    auto th = run("th --rule zplus --g6 " + p5);
    CHECK(th.code == 0);
    CHECK(lines(th.out).at(0) == "th+ = 3, B = {v₃}, pt = 2");

    auto cat = run("catalog --k 0");
    CHECK(cat.code == 0);
    const auto got = lines(cat.out);
    REQUIRE(got.size() == 3);
    std::set<std::string> want;
    for (const char* name : {"twoK2", "P4", "C4"}) want.insert(canonical_form(named_graph(name)));
    std::set<std::string> have;
    for (const auto& l : got) have.insert(canonical_form(parse_graph6(l)));
    CHECK(have == want);

    auto ver = run("verify --theorem thm-th-eq-n --nmax 6");
    CHECK(ver.code == 0);
    CHECK(lines(ver.out).at(0) == "pass, 142 graphs");

    CHECK(run("charcert --t 2 --name C4").out == "none\n");
    CHECK(run("accel --g6 C~ --composition 1").out == "none\n");
    CHECK(run("spectral --g6 C~").out == "radius = 3.000000000\n");
}

TEST_CASE("JSON outputs follow the schemas and match the text values") {
    const Json th = Json::parse(run("th --rule zplus --json --g6 " + p5).out);
    CHECK_NOTHROW(schema::certificate(th));
    CHECK(th["th"] == 3);
    CHECK(th["B"] == Json::array({2}));

    const Json pt = Json::parse(run("pt --rule zfloor --blue 0 --json --name P4").out);
    CHECK_NOTHROW(schema::schedule(pt));
    CHECK(pt["pt"] == 3);

    CHECK_NOTHROW(schema::extension(Json::parse(run("extend --blue 2 --json --g6 " + p5).out)));
    CHECK_NOTHROW(schema::script(Json::parse(run("charcert --t 3 --json --g6 " + p5).out)));
    CHECK_NOTHROW(schema::script(Json::parse(run("charcert --t 3 --flavor psdfloor --json --name C4").out)));
    CHECK(Json::parse(run("charcert --t 2 --json --name C4").out).is_null());
    CHECK_NOTHROW(schema::decomposition(Json::parse(run("accel --composition 1,1 --json --g6 " +
                                                        emit_graph6(cycle_graph(6))).out)));
    for (const auto& l : lines(run("catalog --k 1 --reduced --json").out)) CHECK_NOTHROW(schema::catalog_entry(Json::parse(l)));

    const auto report = lines(run("verify --theorem lem-savings --nmax 5 --json").out);
    REQUIRE(report.size() == 30 + 1);
    for (std::size_t i = 0; i + 1 < report.size(); ++i) CHECK_NOTHROW(schema::report_record(Json::parse(report[i])));
    const Json summary = Json::parse(report.back());
    CHECK_NOTHROW(schema::report_summary(summary));
    CHECK(summary["totals"]["graphs"] == 30);

    const Json extremal = Json::parse(run("spectral --max 5,4 --json").out);
    REQUIRE(extremal.size() == 1);
    CHECK(isomorphic(parse_graph6(extremal[0]["g6"].get<std::string>()), star_graph(4)));
}

TEST_CASE("exit codes") {
    CHECK(run("th --rule zplus --name P4").code == 0);
    CHECK(run("th --rule nope --name P4").code == 2);
    CHECK(run("th --name P4").code == 2);
    CHECK(run("th --rule z --g6 '!!'").code == 2);
    CHECK(run("th --rule z --g6 A_ --name P4").code == 2);
    CHECK(run("pt --rule z --blue 7 --name P4").code == 2);
    CHECK(run("verify --theorem nope").code == 2);
    CHECK(run("catalog --k 3").code == 1);
    CHECK(run("spectral --max 4,2").code == 1);
    CHECK(run("spectral --max 9,10").code == 1);
    CHECK(run("extend --blue 0 --name C4").code == 1);
    CHECK(run("charcert --t 0 --name P4").code == 1);
    CHECK(run("--help").code == 0);
}

int main(int argc, char** argv) {
    Catch::Session session;
    auto cli = session.cli() | Catch::Clara::Opt(binary, "path")["--binary"]("zft executable");
    session.cli(cli);
    if (const int rc = session.applyCommandLine(argc, argv); rc != 0) return rc;
    if (binary.empty()) {
        std::cerr << "--binary is required\n";
        return 2;
    }
    return session.run();
}
