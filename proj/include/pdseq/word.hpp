#pragma once

// Alphabet, word and morphism primitives for the generalized period-doubling
// sequences P_k = s_k^inf(0), where s_k(m) = 0 E_k(m) and E_k is the cyclic
// successor on {0, ..., k-1}.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pdseq/errors.hpp"

namespace pdseq {

using Letter = std::uint8_t;

inline constexpr unsigned kMaxAlphabetSize = 256;

/// Default upper bound on the number of letters in any materialized word.
inline constexpr std::size_t kDefaultLengthCap = std::size_t{1} << 26;

/// Reads PDSEQ_LENGTH_CAP from the environment, falling back to
/// kDefaultLengthCap when unset. Throws DomainError on a malformed value.
std::size_t length_cap_from_env();

/// The alphabet A_k = {0, 1, ..., k-1}, k >= 2.
class Alphabet {
public:
    explicit Alphabet(unsigned k);

    unsigned size() const noexcept { return k_; }
    bool contains(unsigned letter) const noexcept { return letter < k_; }

    friend bool operator==(Alphabet, Alphabet) = default;

private:
    unsigned k_;
};

/// 1-based occurrence of a pattern inside a host word.
struct Occurrence {
    std::size_t start = 1;
    std::size_t length = 0;

    /// 1-based position of the last letter (start - 1 for the empty pattern).
    std::size_t last() const noexcept { return start + length - 1; }

    friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

/// A finite word over a fixed alphabet. Every letter is < k.
class Word {
public:
    explicit Word(Alphabet alphabet) : alphabet_(alphabet) {}
    Word(Alphabet alphabet, std::vector<Letter> letters);
    Word(Alphabet alphabet, std::initializer_list<unsigned> letters);

    /// Parses the text form: ASCII digits for k <= 10, comma-separated
    /// decimals otherwise; "-" or "" is the empty word.
    static Word from_text(std::string_view text, Alphabet alphabet);

    Alphabet alphabet() const noexcept { return alphabet_; }
    unsigned k() const noexcept { return alphabet_.size(); }

    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }

    /// 0-based access.
    Letter operator[](std::size_t i) const noexcept { return letters_[i]; }
    std::span<const Letter> letters() const noexcept { return letters_; }
    auto begin() const noexcept { return letters_.begin(); }
    auto end() const noexcept { return letters_.end(); }
    Letter front() const { return letters_.front(); }
    Letter back() const { return letters_.back(); }

    void push_back(Letter m);
    void reserve(std::size_t n) { letters_.reserve(n); }
    Word& operator+=(const Word& rhs);

    /// Text form; the empty word renders as "-".
    std::string to_text() const;

    friend bool operator==(const Word& a, const Word& b) noexcept {
        return a.alphabet_ == b.alphabet_ && a.letters_ == b.letters_;
    }

private:
    Alphabet alphabet_;
    std::vector<Letter> letters_;
};

Word operator+(Word lhs, const Word& rhs);

/// Text form of a word; identical to Word::to_text.
std::string to_text(const Word& w);

// -- morphisms ---------------------------------------------------------------

/// E_k(m) = m + 1 for m <= k - 2, 0 for m = k - 1.
Letter exchange(unsigned m, Alphabet alphabet);

/// s_k applied letterwise: m -> 0 E_k(m).
Word substitute(const Word& w, std::size_t cap = kDefaultLengthCap);

/// Mirror substitution: m -> E_k(m) 0.
Word mirror_substitute(const Word& w, std::size_t cap = kDefaultLengthCap);

/// s_k^n(start). iterate(k, n) == s_k^n(0) == W_n.
Word iterate(Alphabet alphabet, unsigned n, std::size_t cap = kDefaultLengthCap);
Word iterate_letter(Alphabet alphabet, unsigned n, unsigned start,
                    std::size_t cap = kDefaultLengthCap);

/// First `length` letters of P_k, via iterated substitution.
Word sequence_prefix(Alphabet alphabet, std::size_t length,
                     std::size_t cap = kDefaultLengthCap);

/// O(1) random access into P_k: the letter at 0-based `index` equals the
/// number of trailing one bits of `index`, reduced mod k. Follows from
/// P[2i] = 0 and P[2i+1] = E_k(P[i]).
Letter letter_at(Alphabet alphabet, std::uint64_t index);

// -- string utilities ----------------------------------------------------------

Word mirror(const Word& w);
bool is_palindrome(const Word& w) noexcept;
bool is_palindrome(std::span<const Letter> w) noexcept;

std::size_t lcp_length(std::span<const Letter> a, std::span<const Letter> b) noexcept;
Word lcp(const Word& a, const Word& b);

bool starts_with(const Word& w, const Word& prefix) noexcept;
bool ends_with(const Word& w, const Word& suffix) noexcept;

/// All (possibly overlapping) occurrences of `pattern` in `text`, ascending.
/// The empty pattern has no occurrences.
std::vector<Occurrence> occurrences(std::span<const Letter> pattern, std::span<const Letter> text);
std::vector<Occurrence> occurrences(const Word& pattern, const Word& text);

/// First occurrence starting at or after 0-based offset `from`.
std::optional<Occurrence> find_first(std::span<const Letter> pattern,
                                     std::span<const Letter> text, std::size_t from = 0);

bool is_factor(const Word& pattern, const Word& text);

/// u[i, j], 1-based inclusive. Requires 1 <= i <= j <= |u|, or j == i - 1
/// with 1 <= i <= |u| + 1 (the empty slice).
Word slice(const Word& w, std::size_t i, std::size_t j);

/// m^{-1} u: drops the first letter, which must equal m.
Word strip_leading(const Word& w, Letter m);

/// Drops the last `count` letters.
Word drop_suffix(const Word& w, std::size_t count);

Word repeat(const Word& w, std::size_t times);

}  // namespace pdseq
