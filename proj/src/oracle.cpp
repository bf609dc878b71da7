#include "pdseq/oracle.hpp"

namespace pdseq::oracle {

Word naive_prefix(Alphabet alphabet, std::size_t length, std::size_t cap) {
    if (length > cap) throw CapExceeded(length, cap);
    const unsigned k = alphabet.size();
    std::vector<unsigned> w{0};
    while (w.size() < length) {
        std::vector<unsigned> next;
        for (unsigned m : w) {
            next.push_back(0);
            next.push_back(m <= k - 2 ? m + 1 : 0);
        }
        w = std::move(next);
    }
    std::vector<Letter> letters;
    for (std::size_t i = 0; i < length; ++i) letters.push_back(static_cast<Letter>(w[i]));
    return Word(alphabet, std::move(letters));
}

std::vector<std::size_t> naive_occurrences(const Word& pattern, const Word& text) {
    std::vector<std::size_t> starts;
    const std::size_t n = pattern.size();
    if (n == 0 || n > text.size()) return starts;
    for (std::size_t i = 0; i + n <= text.size(); ++i) {
        bool match = true;
        for (std::size_t j = 0; j < n && match; ++j) match = text[i + j] == pattern[j];
        if (match) starts.push_back(i + 1);
    }
    return starts;
}

FactorGaps naive_gaps(const Word& pattern, const Word& text) {
    auto letters_between = [&](std::size_t from, std::size_t to) {
        // u_{from} .. u_{to}, 1-based inclusive, empty when to < from
        Word w(text.alphabet());
        for (std::size_t q = from; q <= to; ++q) w.push_back(text[q - 1]);
        return w;
    };
    FactorGaps out{pattern, Word(text.alphabet()), {}, {}};
    std::vector<std::size_t> starts = naive_occurrences(pattern, text);
    if (starts.size() < 2) throw DomainError("fewer than two occurrences");
    for (std::size_t s : starts) out.occurrences.push_back({s, pattern.size()});
    out.leading = letters_between(1, starts.front() - 1);
    const std::size_t n = pattern.size();
    for (std::size_t p = 0; p + 1 < starts.size(); ++p) {
        // w_p = u_{i+1} .. u_{i+n}, w_{p+1} = u_{j+1} .. u_{j+n}
        const std::size_t i = starts[p] - 1;
        const std::size_t j = starts[p + 1] - 1;
        Gap gap{p + 1, GapKind::Adjacent, Orientation::Positive, Word(text.alphabet()), i + 1, j + 1};
        if (i + n < j) {
            gap.kind = GapKind::Separated;
            gap.word = letters_between(i + n + 1, j);
        } else if (i + n > j) {
            gap.kind = GapKind::Overlapped;
            gap.orientation = Orientation::Inverse;
            gap.word = letters_between(j + 1, i + n);
        }
        out.gaps.push_back(std::move(gap));
    }
    return out;
}

Report congruence_check(Alphabet alphabet, std::size_t length) {
    return timed([&] {
        const unsigned k = alphabet.size();
        std::vector<std::pair<std::string, std::int64_t>> params{
            {"k", k}, {"length", static_cast<std::int64_t>(length)}};
        if (k == 2) return out_of_domain("congruence", params, "k - 1 = 1 makes the statement trivial");
        Word pk = naive_prefix(alphabet, length);
        Word p2 = naive_prefix(Alphabet(2), length);
        Report r;
        r.check = "congruence";
        r.params = params;
        for (std::size_t i = 0; i < length; ++i) {
            if (pk[i] % (k - 1) != p2[i]) {
                r.status = Status::Fail;
                r.documented = true;
                r.mismatch_position = i + 1;
                r.counterexample = slice(pk, 1, i + 1).to_text();
                r.detail = "P_" + std::to_string(k) + " mod " + std::to_string(k - 1) +
                           " differs from P_2 at position " + std::to_string(i + 1) + ": " +
                           std::to_string(pk[i]) + " mod " + std::to_string(k - 1) + " = " +
                           std::to_string(pk[i] % (k - 1)) + ", P_2 has " + std::to_string(p2[i]);
                break;
            }
        }
        return r;
    });
}

}  // namespace pdseq::oracle
