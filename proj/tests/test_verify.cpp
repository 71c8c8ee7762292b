#include <doctest.h>

#include <algorithm>
#include <set>

#include "narayana/verify.hpp"

using namespace narayana;

namespace {

long count_tabs(const std::string& s) { return std::count(s.begin(), s.end(), '\t'); }

}  // namespace

TEST_CASE("suite registry") {
    const auto& names = suite_names();
    CHECK(names.size() == 13);
    CHECK(std::set<std::string>(names.begin(), names.end()).size() == names.size());
    for (const auto& n : names) CHECK(is_suite(n));
    CHECK_FALSE(is_suite("no-such-suite"));
    CHECK_THROWS_AS(run_suite("no-such-suite"), PreconditionError);
}

TEST_CASE("records") {
    const auto recs = run_suite("sumcc");
    REQUIRE(recs.size() == 8);
    for (const auto& r : recs) {
        CHECK(r.suite == "sumcc");
        CHECK(r.status == CheckStatus::Pass);
        CHECK(r.expected == r.actual);
        const std::string line = r.to_tsv();
        CHECK(count_tabs(line) == 5);
        CHECK(line.rfind("sumcc\t", 0) == 0);
        CHECK(line.find("\tpass\t") != std::string::npos);
    }
    CheckRecord r;
    r.suite = "s";
    r.params = {{"m", "2"}, {"N", "3"}};
    r.status = CheckStatus::Fail;
    r.expected = "1";
    r.actual = "2";
    r.elapsed_us = 7;
    CHECK(r.params_text() == "m=2,N=3");
    CHECK(r.to_tsv() == "s\tm=2,N=3\tfail\t1\t2\t7");
}

TEST_CASE("bounds") {
    SuiteBounds b;
    b.m_max = 2;
    b.n_max = 4;
    b.shift = 2;
    const auto recs = run_suite("main-dets", b);
    CHECK(recs.size() == 5);
    for (const auto& r : recs) CHECK(r.status == CheckStatus::Pass);

    // m = 1 cannot carry shift 3, so every check reports an error instead of aborting the run
    SuiteBounds bad;
    bad.m_max = 1;
    bad.n_max = 2;
    bad.shift = 3;
    const auto errs = run_suite("main-dets", bad);
    REQUIRE(errs.size() == 3);
    for (const auto& r : errs) CHECK(r.status == CheckStatus::Error);

    SuiteBounds wild;
    wild.shift = 5;
    CHECK_THROWS_AS(run_suite("main-dets", wild), PreconditionError);
}

TEST_CASE("small property suites pass") {
    SuiteBounds b;
    b.n_max = 6;
    for (const char* name : {"beta-lucas", "fib-lucas-closed"})
        for (const auto& r : run_suite(name, b)) CHECK(r.status == CheckStatus::Pass);
    SuiteBounds t;
    t.n_max = 9;
    t.order = 8;
    const auto recs = run_suite("transforms", t);
    CHECK(recs.size() == 9);
    for (const auto& r : recs) CHECK(r.status == CheckStatus::Pass);
}
