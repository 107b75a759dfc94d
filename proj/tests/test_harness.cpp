#include <catch_amalgamated.hpp>

#include <sstream>

#include "zft/harness.hpp"

using namespace zft;

namespace {

std::string body(const VerificationReport& r) {
    std::ostringstream out;
    r.write_jsonl(out, false);
    return out.str();
}

} // namespace

TEST_CASE("every registered check passes on a small corpus") {
    for (const auto& t : theorems()) {
        const int nmax = std::min(t.default_nmax, 5);
        const Corpus c = default_corpus(t.id, 1, nmax);
        VerifyParams p;
        p.trials = 40;
        const auto r = verify(t.id, c, p);
        INFO(t.id);
        CHECK(r.failed == 0);
        CHECK(r.verdict() == (t.id == "scan-spectral-converse" ? "info" : "pass"));
        CHECK(r.counterexamples().empty());
        CHECK(r.records.size() == static_cast<std::size_t>(r.passed + r.failed + r.info));
    }
}

TEST_CASE("reports validate and list each graph once") {
    const Corpus c = enumerated_corpus(2, 5);
    const auto r = verify("thm-th-eq-n", c);
    REQUIRE(r.records.size() == 1 + 2 + 6 + 21);
    std::set<std::string> seen;
    for (const auto& rec : r.records) seen.insert(rec.g6);
    CHECK(seen.size() == r.records.size());

    std::istringstream in(body(r));
    std::string line;
    std::size_t lines = 0;
    while (std::getline(in, line)) {
        const Json j = Json::parse(line);
        if (j.contains("summary")) CHECK_NOTHROW(schema::report_summary(j));
        else CHECK_NOTHROW(schema::report_record(j));
        ++lines;
    }
    CHECK(lines == r.records.size() + 1);
}

TEST_CASE("report bodies do not depend on the worker count") {
    for (const char* id : {"thm-th-eq-n", "lem-contraction", "thm-finite"}) {
        const Corpus c = default_corpus(id, 1, 5);
        VerifyParams one, many;
        one.workers = 1;
        many.workers = 4;
        one.trials = many.trials = 60;
        INFO(id);
        CHECK(body(verify(id, c, one)) == body(verify(id, c, many)));
    }
}

TEST_CASE("a wrong classifier shows up as a counterexample") {
    // feed the tree check a non-tree corpus: it is filtered, not failed
    const auto trees = verify("cor-tree-monotone", enumerated_corpus(1, 5));
    CHECK(trees.records.size() == 1 + 1 + 1 + 2 + 3);

    // the converse scan finds graphs with th = n off the spectral maximum
    const auto scan = verify("scan-spectral-converse", enumerated_corpus(1, 5));
    CHECK(scan.verdict() == "info");
    CHECK(scan.divergences > 0);
}

TEST_CASE("contraction trials cover the requested range") {
    VerifyParams p;
    p.trials = 100;
    const auto r = verify("lem-contraction", default_corpus("lem-contraction", 2, 6), p);
    REQUIRE(r.records.size() == 100);
    for (const auto& rec : r.records) {
        const int n = parse_graph6(rec.g6).order();
        CHECK((n >= 2 && n <= 6));
    }
}

TEST_CASE("ingested corpora") {
    std::istringstream in(">>graph6<<C~\nCr\n\nDhc\n");
    const Corpus c = ingest_graph6(in, "inline");
    CHECK(c.graphs.size() == 3);
    CHECK(c.nmin == 4);
    CHECK(c.nmax == 5);
    CHECK(verify("thm-th-eq-n", c).passed == 3);

    std::istringstream disconnected("Cg\n");
    const Corpus d = ingest_graph6(disconnected, "bad");
    CHECK_THROWS_AS(verify("thm-th-eq-n", d), DomainError);
    std::istringstream none("\n");
    CHECK_THROWS_AS(ingest_graph6(none, "empty"), UsageError);
}

TEST_CASE("verification errors") {
    CHECK_THROWS_AS(verify("thm-unknown", enumerated_corpus(1, 3)), UsageError);
    CHECK_THROWS_AS(verify("cor-spectral", Corpus{"big", 8, 8, {complete_graph(8)}}), CapacityError);
    CHECK_THROWS_AS(verify("thm-psd-floor-char", Corpus{"big", 7, 7, {path_graph(7)}}), CapacityError);
    VerifyParams p;
    p.ks = {0};
    CHECK_THROWS_AS(verify("cor-exact", enumerated_corpus(1, 3), p), UsageError);
    CHECK_THROWS_AS(enumerated_corpus(5, 4), UsageError);
}
