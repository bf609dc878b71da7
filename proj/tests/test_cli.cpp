#include <doctest.h>
#include <json.hpp>

#include <sstream>

#include "cli.hpp"
#include "pdseq/oracle.hpp"
#include "support.hpp"

using namespace pdseq;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

/// Second whitespace-separated column of each data row.
std::vector<std::string> column(const std::string& table, std::size_t index) {
    std::vector<std::string> out;
    auto rows = lines(table);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        std::istringstream in(rows[i]);
        std::string field;
        for (std::size_t c = 0; c <= index; ++c) in >> field;
        out.push_back(field);
    }
    return out;
}

}  // namespace

TEST_CASE("generate") {
    CHECK(run({"generate", "-k", "3", "--length", "16"}).out == "0102010001020101\n");
    CHECK(run({"generate", "-k", "2", "--level", "0"}).out == "0\n");
    CHECK(run({"generate", "-k", "4", "--length", "16"}).out == "0102010301020100\n");
    CHECK(run({"generate", "--length", "8"}).out == "01020100\n");
    CHECK(run({"generate", "-k", "12", "--length", "4"}).out == "0,1,0,2\n");
    CHECK(run({"generate", "-k", "3", "--length", "0"}).out == "-\n");

    auto j = nlohmann::json::parse(run({"generate", "-k", "3", "--level", "3", "--json"}).out);
    CHECK(j["k"] == 3);
    CHECK(j["word"] == nlohmann::json::array({0, 1, 0, 2, 0, 1, 0, 0}));

    CHECK(run({"generate", "-k", "3"}).code == cli::kUsage);
    CHECK(run({"generate", "-k", "3", "--length", "5", "--level", "2"}).code == cli::kUsage);
    CHECK(run({"generate", "-k", "1", "--length", "5"}).code == cli::kUsage);
    CHECK(run({"generate", "-k", "3", "--length", "5000", "--cap", "4096"}).code == cli::kUsage);
    CHECK(run({"frobnicate"}).code == cli::kUsage);
    CHECK(run({}).code == cli::kUsage);
    CHECK(run({"--help"}).code == cli::kOk);
}

TEST_CASE("table") {
    auto r = run({"table", "-k", "3", "--which", "r", "--up-to", "7"});
    CHECK(r.code == 0);
    CHECK(column(r.out, 1) == std::vector<std::string>{"0", "1", "1", "1", "3", "5", "9", "19"});

    auto g = run({"table", "-k", "4", "--which", "g", "--up-to", "7"});
    CHECK(column(g.out, 1) == std::vector<std::string>{"0", "1", "3", "6", "12", "25", "51"});

    auto g2 = run({"table", "-k", "2", "--which", "g", "--up-to", "5"});
    CHECK(column(g2.out, 1) == std::vector<std::string>(5, "0"));

    auto csv = run({"table", "-k", "3", "--which", "kernel", "--up-to", "7", "--csv"});
    auto rows = lines(csv.out);
    REQUIRE(rows.size() == 9);
    CHECK(rows[0] == "i,r_i,R_i,is_palindrome,first_occurrence");
    CHECK(rows[7].rfind("6,9,201020102,yes,", 0) == 0);
    CHECK(rows[8].rfind("7,19,0001020100010201000,yes,", 0) == 0);
    CHECK(rows[1] == "0,0,-,yes,-");

    auto w = nlohmann::json::parse(run({"table", "-k", "3", "--which", "w", "--up-to", "3", "--json"}).out);
    CHECK(w["rows"].size() == 4);
    CHECK(w["rows"][3]["p_n"] == nlohmann::json::array({0, 1, 0, 2, 0, 1, 0}));
    CHECK(w["rows"][3]["theta_n"] == 0);
    CHECK(w["rows"][0]["p_n"] == nlohmann::json::array());

    auto gaps = run({"table", "-k", "4", "--which", "gaps", "--up-to", "5"});
    CHECK(column(gaps.out, 2).back() == "102010301020");

    CHECK(run({"table", "-k", "3", "--which", "r"}).code == cli::kUsage);
    CHECK(run({"table", "-k", "3", "--up-to", "4"}).code == cli::kUsage);
    CHECK(run({"table", "-k", "3", "--which", "q", "--up-to", "4"}).code == cli::kUsage);
    CHECK(run({"table", "-k", "3", "--which", "r", "--up-to", "4", "--json", "--csv"}).code == cli::kUsage);
    CHECK(run({"table", "-k", "3", "--which", "r", "--up-to", "500"}).code == cli::kUsage);
}

TEST_CASE("factorize") {
    auto r = run({"factorize", "-k", "3", "--cap", "30"});
    CHECK(r.code == 0);
    auto out = lines(r.out);
    REQUIRE(out.size() >= 8);
    CHECK(out[0] == "R\t1\t1\t1\t0");
    CHECK(out[1] == "G\t1\t2\t0\t-");
    CHECK(out[6] == "R\t4\t7\t3\t000");
    CHECK(out[7] == "G\t4\t10\t4\t1020");

    auto j = nlohmann::json::parse(run({"factorize", "-k", "4", "--length", "40", "--json"}).out);
    CHECK(j["rows"][9]["word"] == nlohmann::json::array({1, 0, 2, 0, 1, 0, 3, 0, 1, 0, 2, 0}));
    CHECK(j["rows"][0]["kind"] == "kernel");

    auto literal = run({"factorize", "-k", "4", "--length", "200", "--paper-literal"});
    CHECK(literal.code == cli::kFalsified);
    CHECK(literal.err.find("falsified") != std::string::npos);
}

TEST_CASE("gaps") {
    auto r = run({"gaps", "-k", "2", "--factor", "00", "--depth", "10", "--json"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    Word host = oracle::naive_prefix(Alphabet(2), 1024);
    FactorGaps slow = oracle::naive_gaps(testing::word(2, "00"), host);
    REQUIRE(j["rows"].size() == slow.gaps.size() + 1);
    for (std::size_t i = 0; i < slow.gaps.size(); ++i) {
        const auto& row = j["rows"][i + 1];
        CHECK(row["kind"] == std::string(to_string(slow.gaps[i].kind)));
        CHECK(row["orientation"] == std::string(to_string(slow.gaps[i].orientation)));
        CHECK(row["left_start"] == slow.gaps[i].left_start);
    }
    CHECK(run({"gaps", "-k", "3", "--depth", "4"}).code == cli::kUsage);
    CHECK(run({"gaps", "-k", "3", "--factor", "0102010001", "--depth", "3"}).code == cli::kUsage);
}

TEST_CASE("verify") {
    auto r = run({"verify", "-k", "3", "--depth", "12"});
    CHECK(r.code == 0);
    CHECK(r.out.find("DOCUMENTED congruence") != std::string::npos);
    CHECK(r.out.find("first mismatch at position 8") != std::string::npos);
    CHECK(r.out == run({"verify", "-k", "3", "--depth", "12"}).out);

    CHECK(run({"verify", "-k", "3", "--depth", "8", "--strict"}).code == cli::kFalsified);
    CHECK(run({"verify", "-k", "4", "--depth", "8", "--paper-literal"}).code == cli::kFalsified);
    CHECK(run({"verify", "-k", "2", "--depth", "8"}).code == 0);

    auto j = nlohmann::json::parse(run({"verify", "-k", "4", "--depth", "8", "--json"}).out);
    CHECK(j["summary"]["exit_code"] == 0);
    bool saw = false;
    for (const auto& rep : j["reports"]) {
        if (rep["check"] == "congruence") {
            saw = true;
            CHECK(rep["status"] == "fail");
            CHECK(rep["documented"] == true);
            CHECK(rep["mismatch_position"] == 4);
        }
    }
    CHECK(saw);
}
