#include "pdseq/kernel.hpp"

#include <limits>

namespace pdseq {

namespace {

bool append_branch(unsigned i, unsigned k, KernelRule rule) {
    return rule == KernelRule::Canonical ? i % k == 1 : i % 2 == 1;
}

}  // namespace

Word next_kernel_word(const Word& previous, unsigned i, KernelRule rule, std::size_t cap) {
    if (i <= previous.k() + 2) {
        throw DomainError("R_i follows from R_{i-1} only for i > k+2");
    }
    Word image = substitute(previous, cap);
    if (append_branch(i, previous.k(), rule)) {
        if (image.size() + 1 > cap) throw CapExceeded(image.size() + 1, cap);
        image.push_back(0);
        return image;
    }
    return strip_leading(image, 0);
}

std::vector<std::uint64_t> kernel_numbers(Alphabet alphabet, unsigned i_max) {
    const unsigned k = alphabet.size();
    constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
    std::vector<std::uint64_t> r;
    r.reserve(i_max + 1);
    for (unsigned i = 0; i <= i_max; ++i) {
        if (i == 0) {
            r.push_back(0);
            continue;
        }
        if (i <= k) {
            r.push_back(1);
            continue;
        }
        // sum = r_{i-1} + ... + r_{i-(k-1)} + 2 r_{i-k}, then subtract k-2.
        std::uint64_t sum = 0;
        auto add = [&](std::uint64_t term) {
            if (sum > kMax - term) {
                throw DomainError("kernel number r_" + std::to_string(i) + " overflows 64 bits");
            }
            sum += term;
        };
        for (unsigned j = 1; j <= k - 1; ++j) add(r[i - j]);
        add(r[i - k]);
        add(r[i - k]);
        r.push_back(sum - (k - 2));
    }
    return r;
}

unsigned kernel_index_limit(Alphabet alphabet) {
    unsigned i = alphabet.size();
    for (;; ++i) {
        try {
            kernel_numbers(alphabet, i + 1);
        } catch (const DomainError&) {
            return i;
        }
    }
}

std::vector<Word> kernel_words(Alphabet alphabet, unsigned i_max, KernelRule rule, std::size_t cap) {
    const unsigned k = alphabet.size();
    std::vector<Word> R;
    R.reserve(i_max + 1);
    for (unsigned i = 0; i <= i_max; ++i) {
        if (i == 0) {
            R.emplace_back(alphabet);
        } else if (i <= k) {
            R.push_back(Word(alphabet, {i - 1}));
        } else if (i == k + 1) {
            R.push_back(Word(alphabet, {0, 0, 0}));
        } else if (i == k + 2) {
            R.push_back(Word(alphabet, {1, 0, 1, 0, 1}));
        } else {
            R.push_back(next_kernel_word(R.back(), i, rule, cap));
        }
    }
    return R;
}

Word kernel_word(Alphabet alphabet, unsigned i, KernelRule rule, std::size_t cap) {
    return std::move(kernel_words(alphabet, i, rule, cap).back());
}

KernelTable KernelTable::build(Alphabet alphabet, unsigned i_max, KernelRule rule,
                               std::optional<unsigned> search_exponent, std::size_t cap) {
    KernelTable table(alphabet);
    std::vector<std::uint64_t> r = kernel_numbers(alphabet, i_max);
    std::vector<Word> R = kernel_words(alphabet, i_max, rule, cap);
    std::optional<Word> host;
    if (search_exponent) host = iterate(alphabet, *search_exponent, cap);
    table.rows_.reserve(i_max + 1);
    for (unsigned i = 0; i <= i_max; ++i) {
        KernelEntry row{i, r[i], R[i], is_palindrome(R[i]), std::nullopt};
        if (host && i >= 1) {
            if (auto hit = find_first(R[i].letters(), host->letters())) row.first_occurrence = hit->start;
        }
        table.rows_.push_back(std::move(row));
    }
    return table;
}

std::vector<unsigned> KernelTable::length_mismatches() const {
    std::vector<unsigned> bad;
    for (const auto& row : rows_) {
        if (row.word.size() != row.number) bad.push_back(row.index);
    }
    return bad;
}

std::vector<KernelToken> binary_kernel_factorization(std::size_t length, KernelRule rule,
                                                     std::size_t cap) {
    const Alphabet binary(2);
    std::vector<KernelToken> tokens;
    std::uint64_t start = 1;
    Word current(binary);
    for (unsigned i = 1; start <= length; ++i) {
        if (i <= 2) {
            current = Word(binary, {i - 1});
        } else if (i == 3) {
            current = Word(binary, {0, 0, 0});
        } else if (i == 4) {
            current = Word(binary, {1, 0, 1, 0, 1});
        } else {
            current = next_kernel_word(current, i, rule, cap);
        }
        for (std::size_t j = 0; j < current.size(); ++j) {
            if (current[j] != letter_at(binary, start - 1 + j)) {
                throw FalsificationError("kernel word R_" + std::to_string(i) +
                                             " disagrees with P_2 at position " +
                                             std::to_string(start + j),
                                         start + j);
            }
        }
        tokens.push_back({i, current, start});
        start += current.size();
    }
    return tokens;
}

}  // namespace pdseq
