#include <doctest.h>

#include "pdseq/oracle.hpp"
#include "pdseq/verify.hpp"
#include "support.hpp"

using namespace pdseq;
using testing::word;

TEST_CASE("naive prefix") {
    CHECK(oracle::naive_prefix(Alphabet(3), 16) == word(3, "0102010001020101"));
    CHECK(oracle::naive_prefix(Alphabet(2), 16) == word(2, "0100010101000100"));
    CHECK(oracle::naive_prefix(Alphabet(5), 2) == word(5, "01"));
    CHECK(oracle::naive_prefix(Alphabet(4), 0).empty());
    CHECK_THROWS_AS(oracle::naive_prefix(Alphabet(3), 100, 99), CapExceeded);
    for (unsigned k = 2; k <= 8; ++k) {
        CHECK(oracle::naive_prefix(Alphabet(k), 64).to_text() ==
              testing::golden("naive_prefix", "k=" + std::to_string(k) + " length=64"));
    }
}

TEST_CASE("naive prefix matches iterate") {
    for (unsigned k = 2; k <= 8; ++k) {
        for (unsigned n = 0; n <= 16; n += 4) {
            CHECK(oracle::naive_prefix(Alphabet(k), std::size_t{1} << n) == iterate(Alphabet(k), n));
        }
    }
}

TEST_CASE("naive occurrences") {
    auto joined = [](const std::vector<std::size_t>& xs) {
        std::string s;
        for (std::size_t x : xs) s += (s.empty() ? "" : ",") + std::to_string(x);
        return s;
    };
    CHECK(joined(oracle::naive_occurrences(word(2, "00"), word(2, "0100010101000100"))) ==
          testing::golden("naive_occurrences", "k=2 factor=00 length=16"));
    CHECK(joined(oracle::naive_occurrences(word(3, "0102"), oracle::naive_prefix(Alphabet(3), 64))) ==
          testing::golden("naive_occurrences", "k=3 factor=0102 length=64"));
    CHECK(oracle::naive_occurrences(word(2, "010"), word(2, "01")).empty());
}

TEST_CASE("congruence check") {
    auto r = oracle::congruence_check(Alphabet(3), 64);
    CHECK(r.failed());
    CHECK(r.documented);
    REQUIRE(r.mismatch_position);
    CHECK(*r.mismatch_position <= 16);
    CHECK(std::to_string(*r.mismatch_position) == testing::golden("congruence_first_mismatch", "k=3 length=64"));
    for (unsigned k = 4; k <= 8; ++k) {
        auto rk = oracle::congruence_check(Alphabet(k), 64);
        CHECK(std::to_string(rk.mismatch_position.value_or(0)) ==
              testing::golden("congruence_first_mismatch", "k=" + std::to_string(k) + " length=64"));
    }
    CHECK(oracle::congruence_check(Alphabet(3), 4).passed());
    CHECK(oracle::congruence_check(Alphabet(2), 64).status == Status::OutOfDomain);
}

TEST_CASE("verify_all") {
    auto names = [](const std::vector<Report>& rs) {
        std::vector<std::string> out;
        for (const auto& r : rs) out.push_back(r.check);
        return out;
    };

    auto r3 = verify_all(Alphabet(3), 12);
    CHECK(std::is_sorted(r3.begin(), r3.end(), [](const Report& a, const Report& b) { return a.check < b.check; }));
    for (const Report& r : r3) {
        INFO(r.check << ": " << r.detail);
        CHECK_FALSE(r.unexpected_failure());
        if (r.check == "binary_factorization") CHECK(r.status == Status::OutOfDomain);
        else if (r.check == "congruence" || r.check == "gap_length_closed_form") CHECK(r.documented);
        else CHECK(r.passed());
    }

    auto r4 = verify_all(Alphabet(4), 12);
    for (const Report& r : r4) CHECK_FALSE(r.unexpected_failure());

    auto r2 = verify_all(Alphabet(2), 12);
    for (const Report& r : r2) {
        INFO(r.check << ": " << r.detail);
        CHECK_FALSE(r.failed());
        if (r.check == "binary_factorization") CHECK(r.passed());
        if (r.check == "kernel_identity" || r.check == "gap_recurrence" || r.check == "congruence") {
            CHECK(r.status == Status::OutOfDomain);
        }
    }

    VerifyOptions serial;
    serial.parallel = false;
    auto again = verify_all(Alphabet(3), 12, serial);
    CHECK(names(again) == names(r3));
    for (std::size_t i = 0; i < again.size(); ++i) {
        CHECK(again[i].status == r3[i].status);
        CHECK(again[i].detail == r3[i].detail);
    }

    VerifyOptions literal;
    literal.conventions = Conventions::paper_literal();
    bool unexpected = false;
    for (const Report& r : verify_all(Alphabet(4), 10, literal)) unexpected = unexpected || r.unexpected_failure();
    CHECK(unexpected);
}

TEST_CASE("aggregate") {
    Report pass;
    pass.check = "x";
    Report fail;
    fail.check = "x";
    fail.status = Status::Fail;
    fail.params = {{"n", 4}};
    fail.mismatch_position = 9;
    fail.detail = "boom";
    Report agg = aggregate("x", {{"k", 3}}, {pass, fail, pass});
    CHECK(agg.failed());
    CHECK(agg.mismatch_position == 9);
    CHECK(agg.detail == "2 pass, 1 fail, 0 out of domain; first at n=4: boom");
    CHECK(aggregate("x", {}, {}).passed());
}
