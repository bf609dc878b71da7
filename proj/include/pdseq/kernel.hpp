#pragma once

// Kernel numbers r_i and kernel words R_i of P_k, and the factorization of
// the binary sequence P_2 = R_1 R_2 R_3 ... into kernel words.

#include <cstdint>
#include <optional>
#include <vector>

#include "pdseq/word.hpp"

namespace pdseq {

/// Which branch rule builds R_i for i > k+2.
enum class KernelRule {
    /// R_i = s_k(R_{i-1}) 0 iff i = 1 (mod k), else 0^{-1} s_k(R_{i-1}).
    /// Keeps |R_i| = r_i for every k.
    Canonical,
    /// 0^{-1} s_k(R_{i-1}) for even i, s_k(R_{i-1}) 0 for odd i, read literally.
    /// Agrees with Canonical for k = 2; diverges for k = 3 from i = 9 and
    /// for k = 4 from i = 7.
    PaperLiteral,
};

inline constexpr unsigned kDefaultKernelIndexMax = 64;

/// r_0 .. r_{i_max}. r_0 = 0, r_1 = ... = r_k = 1, and for i > k
/// r_i = r_{i-1} + ... + r_{i-(k-1)} + 2 r_{i-k} - (k-2).
/// Throws DomainError if a term overflows 64 bits.
std::vector<std::uint64_t> kernel_numbers(Alphabet alphabet, unsigned i_max);

/// Largest index whose kernel number fits in 64 bits.
unsigned kernel_index_limit(Alphabet alphabet);

/// R_i.
Word kernel_word(Alphabet alphabet, unsigned i, KernelRule rule = KernelRule::Canonical,
                 std::size_t cap = kDefaultLengthCap);

/// R_i from R_{i-1}, for i > k+2.
Word next_kernel_word(const Word& previous, unsigned i, KernelRule rule = KernelRule::Canonical,
                      std::size_t cap = kDefaultLengthCap);

/// R_0 .. R_{i_max}, built incrementally.
std::vector<Word> kernel_words(Alphabet alphabet, unsigned i_max,
                               KernelRule rule = KernelRule::Canonical,
                               std::size_t cap = kDefaultLengthCap);

/// One row of a kernel table.
struct KernelEntry {
    unsigned index;
    std::uint64_t number;  ///< r_i
    Word word;             ///< R_i
    bool palindrome;
    std::optional<std::size_t> first_occurrence;  ///< 1-based in P_k, if searched
};

class KernelTable {
public:
    /// Builds rows 0..i_max. When `search_exponent` is set, each R_i is located
    /// in W_e (e = search_exponent) and its first occurrence recorded.
    static KernelTable build(Alphabet alphabet, unsigned i_max,
                             KernelRule rule = KernelRule::Canonical,
                             std::optional<unsigned> search_exponent = std::nullopt,
                             std::size_t cap = kDefaultLengthCap);

    Alphabet alphabet() const noexcept { return alphabet_; }
    const std::vector<KernelEntry>& rows() const noexcept { return rows_; }
    const KernelEntry& operator[](unsigned i) const { return rows_.at(i); }

    /// Indices i with |R_i| != r_i (empty for the canonical rule).
    std::vector<unsigned> length_mismatches() const;

private:
    explicit KernelTable(Alphabet a) : alphabet_(a) {}
    Alphabet alphabet_;
    std::vector<KernelEntry> rows_;
};

struct KernelToken {
    unsigned index;     ///< i in R_i
    Word word;
    std::uint64_t start;  ///< 1-based
};

/// P_2 = R_1 R_2 R_3 ...: emits tokens until their concatenation covers at
/// least `length` letters, each token checked letter by letter against P_2
/// (FalsificationError with the first bad position otherwise).
std::vector<KernelToken> binary_kernel_factorization(std::size_t length,
                                                     KernelRule rule = KernelRule::Canonical,
                                                     std::size_t cap = kDefaultLengthCap);

}  // namespace pdseq
