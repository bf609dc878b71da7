#pragma once

// Prefix words W_n = s_k^n(0), their palindromic parts p_n (W_n = p_n theta_n),
// the letter variants W_{n,m} = s_k^n(m), and checks for the identities that
// tie them together.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pdseq/report.hpp"
#include "pdseq/word.hpp"

namespace pdseq {

struct PrefixEntry {
    unsigned n = 0;
    Word W;          ///< s_k^n(0)
    Word p;          ///< palindromic prefix, W = p . theta
    Letter theta = 0;  ///< n mod k
    std::uint64_t length = 0;  ///< |W_n| = 2^n
};

class PrefixFamily {
public:
    /// Builds W_0..W_{n_max} and p_0..p_{n_max+1}. p is computed both by
    /// doubling (p_{n+1} = p_n theta_n p_n) and by substitution
    /// (p_{n+1} = s_k(p_n) 0); FalsificationError if they disagree or if
    /// W_n != p_n theta_n.
    static PrefixFamily build(Alphabet alphabet, unsigned n_max,
                              std::size_t cap = kDefaultLengthCap);

    Alphabet alphabet() const noexcept { return alphabet_; }
    unsigned n_max() const noexcept { return static_cast<unsigned>(entries_.size() - 1); }

    const PrefixEntry& at(unsigned n) const { return entries_.at(n); }
    const PrefixEntry& operator[](unsigned n) const { return entries_[n]; }
    std::span<const PrefixEntry> entries() const noexcept { return entries_; }

    /// p_{n_max + 1}, the one palindrome beyond the last entry.
    const Word& next_palindrome() const noexcept { return next_palindrome_; }

private:
    PrefixFamily(Alphabet a) : alphabet_(a), next_palindrome_(a) {}

    Alphabet alphabet_;
    std::vector<PrefixEntry> entries_;
    Word next_palindrome_;
};

/// p_n by the doubling recurrence alone.
Word palindromic_prefix(Alphabet alphabet, unsigned n, std::size_t cap = kDefaultLengthCap);

/// W_{n,m} = s_k^n(m) for 1 <= m <= k-1. For n >= 1 the result is checked
/// against W_{n-1} W_{n-1,m+1} (m <= k-2) or W_{n-1}^2 (m = k-1).
Word letter_variant(Alphabet alphabet, unsigned n, unsigned m,
                    std::size_t cap = kDefaultLengthCap);

/// |W_m| by w_m = w_{m-1} + ... + w_{m-(k-1)} + 2 w_{m-k} (m >= k), seeded
/// with w_j = 2^j for j < k. Exact; DomainError past 63.
std::vector<std::uint64_t> doubling_lengths(Alphabet alphabet, unsigned m_max);

/// w_m recurrence against 2^m for m <= m_max.
Report check_doubling_lengths(Alphabet alphabet, unsigned m_max);

/// W_n = p_n theta_n with p_n a palindrome, p_{n+1} = s_k(p_n) 0 = p_n theta_n p_n,
/// and p_{n+1} = W_n W_{n-1} ... W_0.
Report check_prefix_recursion(Alphabet alphabet, unsigned n, std::size_t cap = kDefaultLengthCap);

/// W_n == W_{n-1} W_{n-2} ... W_0 (n mod k), n >= 2.
Report check_lemma_L1(Alphabet alphabet, unsigned n, std::size_t cap = kDefaultLengthCap);

/// mirror(W_0) mirror(W_1) ... mirror(W_depth) is a prefix of P_k and equals
/// p_{depth+1}.
Report check_mirror_product(Alphabet alphabet, unsigned depth,
                            std::size_t cap = kDefaultLengthCap);

struct ProductFactorResult {
    Report report;
    std::optional<Occurrence> occurrence;
    unsigned window_exponent = 0;  ///< last prefix W_e searched
};

/// Looks for W_n W_l in W_e for e = search_depth, search_depth + 1, ...
/// until found or the cap is reached (the latter is a failed report).
ProductFactorResult check_product_factor(Alphabet alphabet, unsigned n, unsigned l,
                                         unsigned search_depth,
                                         std::size_t cap = kDefaultLengthCap);

/// Same, searching an already generated prefix of P_k.
ProductFactorResult check_product_factor_in(const Word& host, unsigned n, unsigned l);

/// Smallest window exponent the P1 search starts from.
inline unsigned product_factor_window(unsigned n, unsigned l, unsigned k) { return n + l + k + 2; }

enum class SecondProductOrder {
    /// Ascending W_{n-2} W_{n-1} when i = 1, descending W_{n-2} ... W_{n-i} otherwise.
    Natural,
    /// Always descending; empty when i = 1.
    Descending,
};

struct LcpCheck {
    Report report;
    std::size_t lcp_length = 0;
    std::size_t expected_length = 0;  ///< |p_{n-i}|
    /// True when the mismatch falls before the second product starts.
    bool decided_before_second_product = false;
};

/// lcp(prod_{j=n-(i+1)}^{n-k} W_j . W_{n-1} . prod_{j=n-2}^{n-i} W_j, W_n) == p_{n-i}.
/// Instances with n < k would need W_{-1} and are reported out of domain.
LcpCheck check_lcp_theorem(Alphabet alphabet, unsigned n, unsigned i,
                           SecondProductOrder order = SecondProductOrder::Natural,
                           std::size_t cap = kDefaultLengthCap);

/// Exponent e such that every factor of P_k of length <= len occurs in W_e.
unsigned factor_window_exponent(std::size_t len, unsigned k);

/// Factor test against W_e, e = factor_window_exponent(|v|, k).
bool is_sequence_factor(const Word& v, std::size_t cap = kDefaultLengthCap);

struct PalindromeTriple {
    bool word = false;      ///< v
    bool appended = false;  ///< s_k(v) 0
    bool stripped = false;  ///< 0^{-1} s_k(v)

    bool consistent() const noexcept { return word == appended && appended == stripped; }
};

/// Palindromicity of v, s_k(v) 0 and 0^{-1} s_k(v). Requires |v| > 2 and v a
/// factor of P_k (DomainError otherwise).
PalindromeTriple palindrome_equivalence(const Word& v, std::size_t cap = kDefaultLengthCap);

enum class DesubstitutionForm { AppendZero, StripZero };

std::string_view to_string(DesubstitutionForm f) noexcept;

struct Desubstitution {
    Word preimage;
    DesubstitutionForm form;
};

/// For a nonempty palindromic factor v != 00: a leading run of 0s of odd
/// length gives v = s_k(v') 0, an even run (including none) gives
/// v = 0^{-1} s_k(v'). The preimage is checked to be a palindromic factor.
Desubstitution desubstitute_palindrome(const Word& v, std::size_t cap = kDefaultLengthCap);

}  // namespace pdseq
