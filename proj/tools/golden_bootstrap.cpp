// Regenerates tests/golden/oracle.tsv from the brute-force oracle. Run it
// by hand; the tests only read the file.
//
//   build/golden_bootstrap > tests/golden/oracle.tsv

#include <iostream>
#include <string>

#include "pdseq/oracle.hpp"

using namespace pdseq;

namespace {

void record(const std::string& check, const std::string& params, const std::string& expected) {
    std::cout << check << '\t' << params << '\t' << expected << '\n';
}

std::string join(const std::vector<std::size_t>& xs) {
    std::string s;
    for (std::size_t x : xs) s += (s.empty() ? "" : ",") + std::to_string(x);
    return s.empty() ? "-" : s;
}

void gaps_records(unsigned k, const std::string& factor, unsigned depth) {
    Alphabet a(k);
    Word host = oracle::naive_prefix(a, std::size_t{1} << depth);
    Word pattern = Word::from_text(factor, a);
    FactorGaps g = oracle::naive_gaps(pattern, host);
    std::string params = "k=" + std::to_string(k) + " factor=" + factor + " depth=" + std::to_string(depth);
    std::vector<std::size_t> starts;
    for (const auto& o : g.occurrences) starts.push_back(o.start);
    record("occurrences", params, join(starts));
    record("gap_leading", params, g.leading.to_text());
    for (const Gap& gap : g.gaps) {
        record("gap", params + " p=" + std::to_string(gap.index),
               std::string(to_string(gap.kind)) + ":" + std::string(to_string(gap.orientation)) + ":" +
                   gap.word.to_text());
    }
}

/// Every v' with s_k(v') 0 = v or 0^{-1} s_k(v') = v, by enumeration.
std::string brute_desubstitute(unsigned k, const std::string& v) {
    std::string found;
    const std::size_t n = v.size() / 2 + 1;
    for (std::size_t len = 0; len <= n; ++len) {
        std::vector<unsigned> c(len, 0);
        while (true) {
            std::string image;
            for (unsigned m : c) image += "0" + std::to_string((m + 1) % k);
            std::string text;
            for (unsigned m : c) text += std::to_string(m);
            if (text.empty()) text = "-";
            if (image + "0" == v) found += (found.empty() ? "" : ";") + text + ":append-zero";
            if (!image.empty() && image.substr(1) == v) found += (found.empty() ? "" : ";") + text + ":strip-zero";
            std::size_t i = 0;
            while (i < len && ++c[i] == k) c[i++] = 0;
            if (i == len) break;
        }
    }
    return found.empty() ? "none" : found;
}

}  // namespace

int main() {
    std::cout << "# generated by: build/golden_bootstrap > tests/golden/oracle.tsv\n";
    std::cout << "# check-name\tparams\texpected\n";

    for (unsigned k = 2; k <= 8; ++k) {
        record("naive_prefix", "k=" + std::to_string(k) + " length=64",
               oracle::naive_prefix(Alphabet(k), 64).to_text());
    }
    for (unsigned k = 3; k <= 8; ++k) {
        Report r = oracle::congruence_check(Alphabet(k), 64);
        record("congruence_first_mismatch", "k=" + std::to_string(k) + " length=64",
               r.mismatch_position ? std::to_string(*r.mismatch_position) : "none");
    }
    record("congruence_first_mismatch", "k=3 length=4",
           oracle::congruence_check(Alphabet(3), 4).mismatch_position ? "found" : "none");

    record("naive_occurrences", "k=2 factor=00 length=16",
           join(oracle::naive_occurrences(Word::from_text("00", Alphabet(2)), oracle::naive_prefix(Alphabet(2), 16))));
    record("naive_occurrences", "k=3 factor=0102 length=64",
           join(oracle::naive_occurrences(Word::from_text("0102", Alphabet(3)), oracle::naive_prefix(Alphabet(3), 64))));

    gaps_records(2, "00", 4);
    gaps_records(3, "0102", 4);

    const std::pair<unsigned, std::string> palindromes[] = {{2, "001000100"}, {2, "10101"}, {3, "0102010"}};
    for (const auto& [k, v] : palindromes) {
        record("desubstitute", "k=" + std::to_string(k) + " v=" + v, brute_desubstitute(k, v));
    }
    return 0;
}
