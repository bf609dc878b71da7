// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Each criterion has a wall-clock budget that counts as part
// of the check.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "pdseq/gaps.hpp"
#include "pdseq/kernel.hpp"
#include "pdseq/oracle.hpp"
#include "pdseq/prefix_structure.hpp"

using namespace pdseq;

namespace {

struct Outcome {
    bool ok = true;
    std::string note;

    void fail(const std::string& why) {
        if (ok) note = why;
        ok = false;
    }
    void expect(bool cond, const std::string& why) {
        if (!cond) fail(why);
    }
};

struct CliRun {
    int code;
    std::string out;
};

CliRun cli_run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str()};
}

Word text(unsigned k, const std::string& s) { return Word::from_text(s, Alphabet(k)); }

std::string golden(const std::string& key) {
    std::ifstream in(std::string(PDSEQ_GOLDEN_DIR) + "/oracle.tsv");
    for (std::string line; std::getline(in, line);) {
        if (line.rfind(key + "\t", 0) == 0) return line.substr(key.size() + 1);
    }
    return "<missing>";
}

// -- criteria ------------------------------------------------------------------

Outcome prefix_p3() {
    Outcome o;
    const std::string expected =
        "0102010001020101010201000102010201020100010201010102010001020100010201000";
    auto r = cli_run({"generate", "-k", "3", "--length", "73"});
    o.expect(r.code == 0, "generate exited " + std::to_string(r.code));
    o.expect(r.out == expected + "\n", "output differs: " + r.out);
    return o;
}

Outcome kernel_tables_k3() {
    Outcome o;
    o.expect(kernel_numbers(Alphabet(3), 7) == std::vector<std::uint64_t>{0, 1, 1, 1, 3, 5, 9, 19},
             "r_0..r_7 differ");
    const char* R[] = {"000", "10101", "201020102", "0001020100010201000"};
    for (unsigned i = 4; i <= 7; ++i) {
        o.expect(kernel_word(Alphabet(3), i) == text(3, R[i - 4]), "R_" + std::to_string(i) + " differs");
    }
    auto r = cli_run({"table", "-k", "3", "--which", "kernel", "--up-to", "7", "--csv"});
    std::istringstream rows(r.out);
    std::string line, rebuilt;
    std::getline(rows, line);
    while (std::getline(rows, line)) {
        std::istringstream fields(line);
        std::string i, ri, Ri;
        std::getline(fields, i, ',');
        std::getline(fields, ri, ',');
        std::getline(fields, Ri, ',');
        rebuilt += ri + ":" + Ri + " ";
    }
    o.expect(rebuilt == "0:- 1:0 1:1 1:2 3:000 5:10101 9:201020102 19:0001020100010201000 ",
             "table output differs: " + rebuilt);
    return o;
}

Outcome gap_tables_k4() {
    Outcome o;
    const char* G[] = {"-",
                       "0",
                       "010",
                       "010201",
                       "102010301020",
                       "0201030102010001020103010",
                       "010301020100010201030102010101020103010201000102010"};
    const std::uint64_t g[] = {0, 1, 3, 6, 12, 25, 51};
    auto words = kernel_gaps(Alphabet(4), 7);
    auto lengths = kernel_gap_lengths(Alphabet(4), 7);
    for (unsigned n = 1; n <= 7; ++n) {
        o.expect(words[n].to_text() == G[n - 1], "G_" + std::to_string(n) + " = " + words[n].to_text());
        o.expect(lengths[n] == g[n - 1], "g_" + std::to_string(n) + " = " + std::to_string(lengths[n]));
    }
    auto r = cli_run({"table", "-k", "4", "--which", "gaps", "--up-to", "7", "--csv"});
    std::string expected = "n,g_n,G_n\n";
    for (unsigned n = 1; n <= 7; ++n) {
        expected += std::to_string(n) + "," + std::to_string(g[n - 1]) + "," + G[n - 1] + "\n";
    }
    o.expect(r.out == expected, "table output differs");
    return o;
}

Outcome binary_factorization() {
    Outcome o;
    const std::size_t length = std::size_t{1} << 15;
    auto tokens = binary_kernel_factorization(length);
    auto r = kernel_numbers(Alphabet(2), static_cast<unsigned>(tokens.size()));
    Word joined(Alphabet(2));
    std::uint64_t boundary = 1;
    for (const auto& t : tokens) {
        o.expect(t.start == boundary, "R_" + std::to_string(t.index) + " starts at " + std::to_string(t.start));
        boundary += r[t.index];
        joined += t.word;
    }
    o.expect(joined.size() >= length, "tokens cover only " + std::to_string(joined.size()));
    if (joined.size() >= length) {
        o.expect(slice(joined, 1, length) == oracle::naive_prefix(Alphabet(2), length),
                 "concatenation differs from the naive prefix");
    }
    return o;
}

Outcome identity_suite() {
    Outcome o;
    auto need = [&](const Report& r) {
        o.expect(r.status == Status::Pass, r.check + " [" + r.params_text() + "]: " + r.detail);
    };
    const unsigned n_max = 18;  // |W_n| <= 2^18
    for (unsigned k = 3; k <= 6; ++k) {
        const Alphabet a(k);
        for (unsigned n = 2; n <= n_max; ++n) need(check_lemma_L1(a, n));
        for (unsigned n = 0; n <= n_max; ++n) need(check_prefix_recursion(a, n));
        for (unsigned d = 0; d + 1 <= n_max; ++d) need(check_mirror_product(a, d));
        for (unsigned n = k; n <= n_max; ++n) {
            for (unsigned i = 1; i < k; ++i) need(check_lcp_theorem(a, n, i).report);
        }
        Word host = iterate(a, n_max);
        for (unsigned n = 2; n <= n_max; ++n) {
            o.expect(palindrome_equivalence(palindromic_prefix(a, n)).consistent() &&
                         palindrome_equivalence(palindromic_prefix(a, n)).word,
                     "palindrome equivalence for p_" + std::to_string(n));
            o.expect(palindrome_equivalence(iterate(a, n)).consistent(),
                     "palindrome equivalence for W_" + std::to_string(n));
        }
        for (std::size_t len = 3; len <= 24; ++len) {
            for (std::size_t start = 1; start + len - 1 <= 4096; start += 7) {
                Word v = slice(host, start, start + len - 1);
                o.expect(palindrome_equivalence(v).consistent(), "palindrome equivalence for " + v.to_text());
            }
        }
        auto t = FactorizationTables::build(a, n_max);
        for (unsigned n = 1; n <= n_max; ++n) {
            WAssembly w = build_W_via_kernel_gaps(t, n);
            need(w.W_report);
            need(w.W_one_report);
            if (n < k + 1) continue;
            auto c = kernel_identity_t42(t, n);
            need(c.theorem);
            need(c.definition_form);
            need(kernel_expansion_p42(t, n));
            need(gap_recurrence_check(t, n).report);
        }
    }
    return o;
}

Outcome length_formulas() {
    Outcome o;
    for (unsigned k = 3; k <= 6; ++k) {
        for (const GapLength& row : gap_length_table(Alphabet(k), 30)) {
            const std::string at = "k=" + std::to_string(k) + " n=" + std::to_string(row.n) + ": construction " +
                                   std::to_string(row.construction);
            o.expect(row.closed_form_agrees(), at + ", closed form " + std::to_string(row.closed_form.value_or(0)));
            o.expect(row.corollary_agrees(), at + ", corollary " + std::to_string(row.corollary.value_or(0)));
        }
    }
    for (unsigned k = 2; k <= 8; ++k) {
        Report r = check_doubling_lengths(Alphabet(k), 40);
        o.expect(r.passed(), "w_m: " + r.detail);
    }
    return o;
}

Outcome random_access() {
    Outcome o;
    const std::size_t length = std::size_t{1} << 16;
    for (unsigned k = 2; k <= 8; ++k) {
        Word naive = oracle::naive_prefix(Alphabet(k), length);
        for (std::size_t i = 0; i < length; ++i) {
            if (letter_at(Alphabet(k), i) != naive[i]) {
                o.fail("k=" + std::to_string(k) + " index " + std::to_string(i));
                break;
            }
        }
    }
    return o;
}

Outcome palindromicity(std::string& positions) {
    Outcome o;
    for (unsigned k = 2; k <= 6; ++k) {
        const Alphabet a(k);
        for (unsigned n = 0; n <= 14; ++n) {
            o.expect(is_palindrome(palindromic_prefix(a, n)), "p_" + std::to_string(n) + " for k=" + std::to_string(k));
        }
        auto R = kernel_words(a, 24);
        for (unsigned i = 0; i <= 24; ++i) {
            o.expect(is_palindrome(R[i]), "R_" + std::to_string(i) + " for k=" + std::to_string(k));
        }
        auto table = KernelTable::build(a, 12, KernelRule::Canonical, 16u);
        positions += " k=" + std::to_string(k) + ":";
        for (unsigned i = 1; i <= 12; ++i) {
            auto at = table[i].first_occurrence;
            o.expect(at.has_value(), "R_" + std::to_string(i) + " not found for k=" + std::to_string(k));
            positions += (i > 1 ? "," : "") + (at ? std::to_string(*at) : std::string("-"));
        }
    }
    return o;
}

Outcome product_factor() {
    Outcome o;
    for (unsigned k = 2; k <= 5; ++k) {
        Word host = iterate(Alphabet(k), product_factor_window(8, 8, k));
        for (unsigned n = 0; n <= 8; ++n) {
            for (unsigned l = 0; l <= 8; ++l) {
                auto r = check_product_factor_in(host, n, l);
                o.expect(r.occurrence.has_value(), "k=" + std::to_string(k) + " n=" + std::to_string(n) +
                                                       " l=" + std::to_string(l) + " not found");
            }
        }
    }
    return o;
}

Outcome documented_failure() {
    Outcome o;
    Report r = oracle::congruence_check(Alphabet(3), 64);
    o.expect(r.failed() && r.documented, "congruence check did not report a documented failure");
    const std::string frozen = golden("congruence_first_mismatch\tk=3 length=64");
    o.expect(r.mismatch_position && std::to_string(*r.mismatch_position) == frozen,
             "first mismatch differs from the frozen position " + frozen);
    o.expect(r.mismatch_position && *r.mismatch_position <= 16, "first mismatch beyond 16");

    auto v = cli_run({"verify", "-k", "3"});
    o.expect(v.code == 0, "verify exited " + std::to_string(v.code));
    Report at_depth = oracle::congruence_check(Alphabet(3), 4096);
    o.expect(v.out.find(at_depth.detail) != std::string::npos, "verify output lacks: " + at_depth.detail);
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        std::string title;
        double budget_seconds;
        std::function<Outcome()> run;
    };
    std::string positions;
    std::vector<Criterion> criteria{
        {1, "P_3 prefix of length 73 via `generate`", 0.1, prefix_p3},
        {2, "k=3 kernel numbers r_0..r_7 and words R_4..R_7", 0.1, kernel_tables_k3},
        {3, "k=4 gaps G_1..G_7 and g_1..g_7", 0.1, gap_tables_k4},
        {4, "binary kernel factorization to 2^15 letters", 1.0, binary_factorization},
        {5, "identity suite, k=3..6, |W_n| <= 2^18", 30.0, identity_suite},
        {6, "gap length triple agreement n<=30 and w_m = 2^m for m<=40", 1.0, length_formulas},
        {7, "letter_at vs naive prefix, 2^16 indices, k=2..8", 2.0, random_access},
        {8, "palindromic p_n, R_i and first occurrences of R_i", 5.0, [&] { return palindromicity(positions); }},
        {9, "W_n W_l occurs for n, l <= 8, k=2..5", 10.0, product_factor},
        {10, "congruence finding frozen and reported by `verify`", 0.1, documented_failure},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (o.ok && elapsed > c.budget_seconds) {
            o.fail("took " + std::to_string(elapsed) + " s, budget " + std::to_string(c.budget_seconds) + " s");
        }
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.3f s", elapsed);
        std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.title << " (" << timing << ")";
        if (!o.ok) std::cout << " -- " << o.note;
        if (c.id == 8 && o.ok) std::cout << " -- first occurrences" << positions;
        std::cout << "\n";
        failures += o.ok ? 0 : 1;
    }
    std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
    return failures == 0 ? 0 : 1;
}
