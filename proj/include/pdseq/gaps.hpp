#pragma once

// Gap sequences: gaps between consecutive occurrences of an arbitrary
// factor, the kernel gaps G_n separating R_n from R_{n+1}, the identities
// linking W_n, R_n and G_n, and the alternating factorization
// P_k = R_1 G_1 R_2 G_2 R_3 ...

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "pdseq/kernel.hpp"
#include "pdseq/report.hpp"
#include "pdseq/word.hpp"

namespace pdseq {

// -- gaps of an arbitrary factor ------------------------------------------------

enum class GapKind { Adjacent, Separated, Overlapped };
enum class Orientation { Positive, Inverse };

std::string_view to_string(GapKind kind) noexcept;
std::string_view to_string(Orientation o) noexcept;

/// G_p(w): what lies between the p-th and (p+1)-th occurrence. For
/// overlapping occurrences `word` is the shared segment and the gap is its
/// formal inverse.
struct Gap {
    std::size_t index;  ///< p, 1-based
    GapKind kind;
    Orientation orientation;
    Word word;
    std::size_t left_start;   ///< start of w_p
    std::size_t right_start;  ///< start of w_{p+1}
};

struct FactorGaps {
    Word pattern;
    Word leading;  ///< G_0(w), the prefix before the first occurrence
    std::vector<Occurrence> occurrences;
    std::vector<Gap> gaps;
};

/// Gaps of `pattern` inside `text`. DomainError if `pattern` is empty or
/// occurs fewer than twice.
FactorGaps gaps_in(const Word& pattern, const Word& text);

/// Gaps of `pattern` inside W_depth.
FactorGaps factor_gaps(const Word& pattern, unsigned depth, std::size_t cap = kDefaultLengthCap);

// -- kernel gaps ---------------------------------------------------------------

enum class GapRule {
    /// G_1 = eps; for n >= 2, G_n = s~_k(G_{n-1}) if n = 1 (mod k),
    /// s_k(G_{n-1}) if n = 0 (mod k), s_k(G_{n-1}) 0 otherwise.
    Canonical,
    /// G_n = p_{n-1} (1 <= n <= k-1), G_k = s_k(G_{k-1}), G_{k+1} = s~_k(G_k),
    /// then s_k(G_{n-1}) 0 throughout. Matches Canonical for n < 2k only.
    Shifted,
    /// The definition read literally: G_n = p_n for n <= k-2,
    /// G_{k-1} = s_k(G_{k-2}), G_k = s~_k(G_{k-1}), then s_k(G_{n-1}) 0.
    PaperLiteral,
};

std::string_view to_string(GapRule rule) noexcept;

/// Conventions used by the identity checks and the factorization stream.
struct Conventions {
    KernelRule kernel = KernelRule::Canonical;
    GapRule gaps = GapRule::Canonical;
    /// Read the W_{n,1} slice R_{n+2}[1, r_{n+1}] without the n+1 = 0 (mod k)
    /// correction.
    bool literal_slices = false;

    static Conventions paper_literal() {
        return {KernelRule::PaperLiteral, GapRule::PaperLiteral, true};
    }
};

/// G_n (G_0 = eps by convention). For k = 2 every gap is empty.
Word kernel_gap(Alphabet alphabet, unsigned n, GapRule rule = GapRule::Canonical,
                std::size_t cap = kDefaultLengthCap);

/// G_0 .. G_{n_max}.
std::vector<Word> kernel_gaps(Alphabet alphabet, unsigned n_max, GapRule rule = GapRule::Canonical,
                              std::size_t cap = kDefaultLengthCap);

/// g_0 .. g_{n_max} from the length recurrence implied by the construction
/// (|s_k(u)| = 2|u|), exact in 64 bits; DomainError on overflow.
std::vector<std::uint64_t> kernel_gap_lengths(Alphabet alphabet, unsigned n_max,
                                              GapRule rule = GapRule::Canonical);

/// g_n computed three ways.
struct GapLength {
    unsigned n = 0;
    std::uint64_t construction = 0;
    /// (g_{k+1} + 1) 2^{n-(k+1)} - 1, for n >= k+1.
    std::optional<std::uint64_t> closed_form;
    /// g_{n-k} + sum r_{n-i} + sum g_{n-i} (i = 2..k-1) + r_{n-2} [+1] + 2^{n-2} - |*|,
    /// for n >= k+1.
    std::optional<std::uint64_t> corollary;

    bool closed_form_agrees() const noexcept { return !closed_form || *closed_form == construction; }
    bool corollary_agrees() const noexcept { return !corollary || *corollary == construction; }
    bool agree() const noexcept { return closed_form_agrees() && corollary_agrees(); }
};

/// One row per n in [1, n_max]. Words are materialized (and their lengths
/// cross-checked against the construction) while g_n <= materialize_cap.
std::vector<GapLength> gap_length_table(Alphabet alphabet, unsigned n_max,
                                        GapRule rule = GapRule::Canonical,
                                        std::size_t materialize_cap = std::size_t{1} << 20);

GapLength gap_length(Alphabet alphabet, unsigned n, GapRule rule = GapRule::Canonical,
                     std::size_t materialize_cap = std::size_t{1} << 20);

// -- identities ------------------------------------------------------------------

/// W_0..W_{n_max}, R_0..R_{n_max+2}, G_0..G_{n_max+1} and r for one k.
class FactorizationTables {
public:
    static FactorizationTables build(Alphabet alphabet, unsigned n_max, Conventions conventions = {},
                                     std::size_t cap = kDefaultLengthCap);

    Alphabet alphabet() const noexcept { return alphabet_; }
    unsigned k() const noexcept { return alphabet_.size(); }
    unsigned n_max() const noexcept { return n_max_; }
    const Conventions& conventions() const noexcept { return conventions_; }
    std::size_t cap() const noexcept { return cap_; }

    const Word& W(unsigned n) const { return W_.at(n); }
    const Word& R(unsigned i) const { return R_.at(i); }
    const Word& G(unsigned n) const { return G_.at(n); }
    std::uint64_t r(unsigned i) const { return r_.at(i); }

    /// R_1 G_1 R_2 G_2 ... R_m G_m.
    Word alternating_product(unsigned m) const;

private:
    explicit FactorizationTables(Alphabet a) : alphabet_(a) {}

    Alphabet alphabet_;
    unsigned n_max_ = 0;
    Conventions conventions_;
    std::size_t cap_ = kDefaultLengthCap;
    std::vector<Word> W_, R_, G_;
    std::vector<std::uint64_t> r_;
};

struct WAssembly {
    Word W;        ///< R_1 G_1 ... R_n G_n R_{n+1}[1, r_n (+1 if n = 0 mod k)]
    Word W_one;    ///< the assembled W_{n,1}
    Report W_report;
    Report W_one_report;
};

/// W_n and W_{n,1} rebuilt from kernel words and gaps and compared with
/// s_k^n(0) and s_k^n(1). Requires k >= 3, n >= 1.
WAssembly build_W_via_kernel_gaps(const FactorizationTables& t, unsigned n);
WAssembly build_W_via_kernel_gaps(Alphabet alphabet, unsigned n, Conventions conventions = {},
                                  std::size_t cap = kDefaultLengthCap);

struct KernelIdentityCheck {
    /// R_n = R_n[1, r_{n-1} (+1)] W_{n-(k+1)} R_{n-k}[r_{n-(k+1)} + 1 (+1), r_{n-k}]
    Report theorem;
    /// R_n = R_n[1, r_{n-1} (+1)] W_{n-k}[1, r_{n-1} - 1 (+1)]
    Report definition_form;
};

/// +1 terms apply iff n = 1 (mod k). Requires k >= 3, n >= k+1.
KernelIdentityCheck kernel_identity_t42(const FactorizationTables& t, unsigned n);
KernelIdentityCheck kernel_identity_t42(Alphabet alphabet, unsigned n, Conventions conventions = {},
                                        std::size_t cap = kDefaultLengthCap);

/// R_n = R_n[1, r_{n-1} (+1)] R_1 G_1 ... R_{n-(k+1)} G_{n-(k+1)} R_{n-k},
/// +1 iff n = 1 (mod k). Requires k >= 3, n >= k+1.
Report kernel_expansion_p42(const FactorizationTables& t, unsigned n);
Report kernel_expansion_p42(Alphabet alphabet, unsigned n, Conventions conventions = {},
                            std::size_t cap = kDefaultLengthCap);

/// The removed tail of the G_n recurrence.
struct StarSuffix {
    unsigned k = 0;
    unsigned n = 0;
    Word word;  ///< R_{n+1}[1, r_n (+1 if n = 0 mod k)], removed as a suffix
    bool suffix_of_image_of_two = false;  ///< suffix of s_k^{n-2}(2)
    bool suffix_of_W = false;             ///< suffix of s_k^{n-2}(0)
};

struct GapRecurrenceCheck {
    Report report;
    StarSuffix star;
    std::uint64_t assembled_length = 0;  ///< before truncation
};

/// G_n = G_{n-k} (prod_{i=k-1}^{2} R_{n-i} G_{n-i}) R_{n-1}[1, r_{n-2} (+1)] s_k^{n-2}(2) *
/// with +1 iff n-1 = 1 (mod k). Requires k >= 3, n >= k+1.
GapRecurrenceCheck gap_recurrence_check(const FactorizationTables& t, unsigned n);
GapRecurrenceCheck gap_recurrence_check(Alphabet alphabet, unsigned n, Conventions conventions = {},
                                        std::size_t cap = kDefaultLengthCap);

// -- factorization stream ------------------------------------------------------------

enum class TokenKind { Kernel, Gap };

std::string_view to_string(TokenKind kind) noexcept;

struct FactorizationToken {
    TokenKind kind;
    unsigned index;
    Word word;
    std::uint64_t start;  ///< 1-based

    std::uint64_t end() const noexcept { return start + word.size(); }  ///< one past the last letter
};

/// Lazily yields R_1, G_1, R_2, G_2, ... with absolute positions. Each token
/// is checked against P_k; a disagreement raises FalsificationError.
class FactorizationStream {
public:
    explicit FactorizationStream(Alphabet alphabet, Conventions conventions = {},
                                 std::size_t cap = kDefaultLengthCap);

    FactorizationToken next();

private:
    Word next_kernel();
    Word next_gap();

    Alphabet alphabet_;
    Conventions conventions_;
    std::size_t cap_;
    std::vector<Word> gap_seed_;  ///< G_0..G_{k+1}
    Word kernel_;                 ///< R_{index_}
    Word gap_;                    ///< G_{index_}
    unsigned index_ = 0;
    bool kernel_next_ = true;
    std::uint64_t position_ = 1;
};

/// Complete tokens whose last letter lies within the first `length_cap` letters.
std::vector<FactorizationToken> factorize(Alphabet alphabet, std::size_t length_cap,
                                          Conventions conventions = {},
                                          std::size_t cap = kDefaultLengthCap);

/// Tokens until their concatenation covers at least `length` letters.
std::vector<FactorizationToken> factorize_covering(Alphabet alphabet, std::size_t length,
                                                   Conventions conventions = {},
                                                   std::size_t cap = kDefaultLengthCap);

}  // namespace pdseq
