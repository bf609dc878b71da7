#include "pdseq/gaps.hpp"

#include <bit>
#include <limits>

#include "pdseq/prefix_structure.hpp"

namespace pdseq {

namespace {

using Params = std::vector<std::pair<std::string, std::int64_t>>;

Word append_zero(Word w, std::size_t cap) {
    if (w.size() + 1 > cap) throw CapExceeded(w.size() + 1, cap);
    w.push_back(0);
    return w;
}

/// G_n for n >= k+2 from G_{n-1}.
Word next_kernel_gap(const Word& previous, unsigned n, GapRule rule, std::size_t cap) {
    const unsigned k = previous.k();
    if (rule != GapRule::Canonical) return append_zero(substitute(previous, cap), cap);
    if (n % k == 1) return mirror_substitute(previous, cap);
    if (n % k == 0) return substitute(previous, cap);
    return append_zero(substitute(previous, cap), cap);
}

/// G_0 .. G_{min(n_max, k+1)}, where the rules still differ in their base cases.
std::vector<Word> gap_seed(Alphabet a, unsigned n_max, GapRule rule, std::size_t cap) {
    const unsigned k = a.size();
    const unsigned last = std::min(n_max, k + 1);
    std::vector<Word> G;
    G.reserve(last + 1);
    if (k == 2) {
        for (unsigned n = 0; n <= last; ++n) G.emplace_back(a);
        return G;
    }
    for (unsigned n = 0; n <= last; ++n) {
        switch (rule) {
            case GapRule::Canonical:
                if (n <= 1) {
                    G.emplace_back(a);
                } else {
                    G.push_back(next_kernel_gap(G.back(), n, rule, cap));
                }
                break;
            case GapRule::Shifted:
                if (n == 0) {
                    G.emplace_back(a);
                } else if (n <= k - 1) {
                    G.push_back(palindromic_prefix(a, n - 1, cap));
                } else if (n == k) {
                    G.push_back(substitute(G.back(), cap));
                } else {
                    G.push_back(mirror_substitute(G.back(), cap));
                }
                break;
            case GapRule::PaperLiteral:
                if (n <= k - 2) {
                    G.push_back(palindromic_prefix(a, n, cap));
                } else if (n == k - 1) {
                    G.push_back(substitute(G.back(), cap));
                } else if (n == k) {
                    G.push_back(mirror_substitute(G.back(), cap));
                } else {
                    G.push_back(append_zero(substitute(G.back(), cap), cap));
                }
                break;
        }
    }
    return G;
}

std::uint64_t checked_double_plus(std::uint64_t g, int delta, unsigned n) {
    if (g > (std::numeric_limits<std::uint64_t>::max() - 1) / 2) {
        throw DomainError("g_" + std::to_string(n) + " overflows 64 bits");
    }
    return 2 * g + static_cast<std::uint64_t>(delta + 1) - 1;
}

void require_identity_domain(const FactorizationTables& t, unsigned n, unsigned n_min) {
    if (t.k() < 3) throw DomainError("kernel-gap identities need k >= 3");
    if (n < n_min) {
        throw DomainError("identity needs n >= " + std::to_string(n_min) + ", got n=" + std::to_string(n));
    }
    if (n > t.n_max()) {
        throw DomainError("tables built only up to n=" + std::to_string(t.n_max()));
    }
}

std::size_t as_size(std::uint64_t v) { return static_cast<std::size_t>(v); }

/// Runs a word-assembly check; slice errors caused by inconsistent
/// conventions become failed reports instead of escaping.
template <class F>
Report guarded(std::string check, Params params, F&& body) {
    return timed([&]() -> Report {
        try {
            return body();
        } catch (const DomainError& e) {
            Report r;
            r.check = check;
            r.params = params;
            r.status = Status::Fail;
            r.counterexample = "-";
            r.detail = std::string("assembly impossible: ") + e.what();
            return r;
        }
    });
}

}  // namespace

std::string_view to_string(GapKind kind) noexcept {
    switch (kind) {
        case GapKind::Adjacent: return "adjacent";
        case GapKind::Separated: return "separated";
        case GapKind::Overlapped: return "overlapped";
    }
    return "unknown";
}

std::string_view to_string(Orientation o) noexcept {
    return o == Orientation::Positive ? "positive" : "inverse";
}

std::string_view to_string(GapRule rule) noexcept {
    switch (rule) {
        case GapRule::Canonical: return "canonical";
        case GapRule::Shifted: return "shifted";
        case GapRule::PaperLiteral: return "paper-literal";
    }
    return "unknown";
}

std::string_view to_string(TokenKind kind) noexcept {
    return kind == TokenKind::Kernel ? "kernel" : "gap";
}

FactorGaps gaps_in(const Word& pattern, const Word& text) {
    if (pattern.empty()) throw DomainError("gap sequence of the empty word is undefined");
    FactorGaps out{pattern, Word(text.alphabet()), occurrences(pattern, text), {}};
    if (out.occurrences.size() < 2) {
        throw DomainError("'" + pattern.to_text() + "' occurs " + std::to_string(out.occurrences.size()) +
                          " time(s) in a prefix of length " + std::to_string(text.size()) +
                          "; use a larger depth");
    }
    out.leading = slice(text, 1, out.occurrences.front().start - 1);
    const std::size_t len = pattern.size();
    for (std::size_t p = 0; p + 1 < out.occurrences.size(); ++p) {
        const std::size_t a = out.occurrences[p].start;
        const std::size_t b = out.occurrences[p + 1].start;
        Gap gap{p + 1, GapKind::Adjacent, Orientation::Positive, Word(text.alphabet()), a, b};
        if (a + len < b) {
            gap.kind = GapKind::Separated;
            gap.word = slice(text, a + len, b - 1);
        } else if (a + len > b) {
            gap.kind = GapKind::Overlapped;
            gap.orientation = Orientation::Inverse;
            gap.word = slice(text, b, a + len - 1);
        }
        out.gaps.push_back(std::move(gap));
    }
    return out;
}

FactorGaps factor_gaps(const Word& pattern, unsigned depth, std::size_t cap) {
    return gaps_in(pattern, iterate(pattern.alphabet(), depth, cap));
}

std::vector<Word> kernel_gaps(Alphabet alphabet, unsigned n_max, GapRule rule, std::size_t cap) {
    std::vector<Word> G = gap_seed(alphabet, n_max, rule, cap);
    G.reserve(n_max + 1);
    for (unsigned n = static_cast<unsigned>(G.size()); n <= n_max; ++n) {
        G.push_back(alphabet.size() == 2 ? Word(alphabet) : next_kernel_gap(G.back(), n, rule, cap));
    }
    return G;
}

Word kernel_gap(Alphabet alphabet, unsigned n, GapRule rule, std::size_t cap) {
    return std::move(kernel_gaps(alphabet, n, rule, cap).back());
}

std::vector<std::uint64_t> kernel_gap_lengths(Alphabet alphabet, unsigned n_max, GapRule rule) {
    const unsigned k = alphabet.size();
    std::vector<std::uint64_t> g;
    g.reserve(n_max + 1);
    // Base cases are tiny, so take them from the words themselves.
    for (const Word& w : gap_seed(alphabet, std::min(n_max, k + 1), rule, kDefaultLengthCap)) {
        g.push_back(w.size());
    }
    for (unsigned n = static_cast<unsigned>(g.size()); n <= n_max; ++n) {
        if (k == 2) {
            g.push_back(0);
            continue;
        }
        int delta = 1;
        if (rule == GapRule::Canonical) delta = (n % k == 0 ? 0 : 1) - (n % k == 1 ? 1 : 0);
        g.push_back(checked_double_plus(g.back(), delta, n));
    }
    return g;
}

std::vector<GapLength> gap_length_table(Alphabet alphabet, unsigned n_max, GapRule rule,
                                        std::size_t materialize_cap) {
    if (n_max > 60) throw DomainError("gap lengths are tabulated up to n = 60");
    const unsigned k = alphabet.size();
    std::vector<std::uint64_t> g = kernel_gap_lengths(alphabet, n_max, rule);
    std::vector<std::uint64_t> r = kernel_numbers(alphabet, n_max + 1);

    // Materialize words while they fit and confirm the length bookkeeping.
    std::vector<Word> G = gap_seed(alphabet, n_max, rule, kDefaultLengthCap);
    for (unsigned n = static_cast<unsigned>(G.size()); n <= n_max && 2 * G.back().size() + 1 <= materialize_cap;
         ++n) {
        G.push_back(k == 2 ? Word(alphabet) : next_kernel_gap(G.back(), n, rule, materialize_cap));
    }
    for (unsigned n = 0; n < G.size(); ++n) {
        if (G[n].size() != g[n]) {
            throw FalsificationError("|G_" + std::to_string(n) + "| = " + std::to_string(G[n].size()) +
                                         " but the length recurrence gives " + std::to_string(g[n]),
                                     0);
        }
    }

    std::vector<GapLength> rows;
    rows.reserve(n_max);
    for (unsigned n = 1; n <= n_max; ++n) {
        GapLength row;
        row.n = n;
        row.construction = g[n];
        if (k >= 3 && n >= k + 1) {
            row.closed_form = (g[k + 1] + 1) * (std::uint64_t{1} << (n - (k + 1))) - 1;
            std::uint64_t sum = g[n - k];
            for (unsigned i = 2; i <= k - 1; ++i) sum += r[n - i] + g[n - i];
            sum += r[n - 2] + ((n - 1) % k == 1 ? 1 : 0);
            sum += std::uint64_t{1} << (n - 2);  // |s_k^{n-2}(2)|
            const std::uint64_t star = r[n] + (n % k == 0 ? 1 : 0);
            row.corollary = sum - star;
        }
        rows.push_back(row);
    }
    return rows;
}

GapLength gap_length(Alphabet alphabet, unsigned n, GapRule rule, std::size_t materialize_cap) {
    if (n == 0) throw DomainError("g_n is defined for n >= 1");
    return gap_length_table(alphabet, n, rule, materialize_cap).back();
}

FactorizationTables FactorizationTables::build(Alphabet alphabet, unsigned n_max,
                                               Conventions conventions, std::size_t cap) {
    FactorizationTables t(alphabet);
    t.n_max_ = n_max;
    t.conventions_ = conventions;
    t.cap_ = cap;
    t.W_.reserve(n_max + 1);
    t.W_.push_back(Word(alphabet, {0}));
    for (unsigned n = 1; n <= n_max; ++n) t.W_.push_back(substitute(t.W_.back(), cap));
    t.R_ = kernel_words(alphabet, n_max + 2, conventions.kernel, cap);
    t.r_ = kernel_numbers(alphabet, n_max + 2);
    t.G_ = kernel_gaps(alphabet, n_max + 1, conventions.gaps, cap);
    return t;
}

Word FactorizationTables::alternating_product(unsigned m) const {
    Word out(alphabet_);
    for (unsigned j = 1; j <= m; ++j) {
        out += R(j);
        out += G(j);
    }
    return out;
}

WAssembly build_W_via_kernel_gaps(const FactorizationTables& t, unsigned n) {
    require_identity_domain(t, n, 1);
    const unsigned k = t.k();
    Params params{{"k", k}, {"n", n}};
    WAssembly out{Word(t.alphabet()), Word(t.alphabet()), {}, {}};

    const std::uint64_t head = t.r(n) + (n % k == 0 ? 1 : 0);
    out.W_report = guarded("W_from_kernel_gaps", params, [&] {
        out.W = t.alternating_product(n) + slice(t.R(n + 1), 1, as_size(head));
        return compare_words("W_from_kernel_gaps", params, t.W(n), out.W);
    });

    out.W_one_report = guarded("W1_from_kernel_gaps", params, [&] {
        const bool corrected = !t.conventions().literal_slices && (n + 1) % k == 0;
        const std::uint64_t tail = t.r(n + 1) + (corrected ? 1 : 0);
        Word assembled = t.R(n + 1) + t.G(n + 1) + slice(t.R(n + 2), 1, as_size(tail));
        // R_{n+1}[1, head]^{-1} cancels against the leading R_{n+1}.
        out.W_one = slice(assembled, as_size(head) + 1, assembled.size());
        return compare_words("W1_from_kernel_gaps", params, iterate_letter(t.alphabet(), n, 1, t.cap()),
                             out.W_one);
    });
    return out;
}

WAssembly build_W_via_kernel_gaps(Alphabet alphabet, unsigned n, Conventions conventions,
                                  std::size_t cap) {
    return build_W_via_kernel_gaps(FactorizationTables::build(alphabet, n, conventions, cap), n);
}

KernelIdentityCheck kernel_identity_t42(const FactorizationTables& t, unsigned n) {
    const unsigned k = t.k();
    require_identity_domain(t, n, k + 1);
    Params params{{"k", k}, {"n", n}};
    const std::uint64_t bump = n % k == 1 ? 1 : 0;
    const std::size_t lead = as_size(t.r(n - 1) + bump);

    KernelIdentityCheck out;
    out.theorem = guarded("kernel_identity_t42", params, [&] {
        Word assembled = slice(t.R(n), 1, lead) + t.W(n - (k + 1)) +
                         slice(t.R(n - k), as_size(t.r(n - (k + 1)) + 1 + bump), as_size(t.r(n - k)));
        return compare_words("kernel_identity_t42", params, t.R(n), assembled);
    });
    out.definition_form = guarded("kernel_definition_form", params, [&] {
        Word assembled = slice(t.R(n), 1, lead) + slice(t.W(n - k), 1, as_size(t.r(n - 1) - 1 + bump));
        return compare_words("kernel_definition_form", params, t.R(n), assembled);
    });
    return out;
}

KernelIdentityCheck kernel_identity_t42(Alphabet alphabet, unsigned n, Conventions conventions,
                                        std::size_t cap) {
    return kernel_identity_t42(FactorizationTables::build(alphabet, n, conventions, cap), n);
}

Report kernel_expansion_p42(const FactorizationTables& t, unsigned n) {
    const unsigned k = t.k();
    require_identity_domain(t, n, k + 1);
    Params params{{"k", k}, {"n", n}};
    return guarded("kernel_expansion_p42", params, [&] {
        const std::uint64_t bump = n % k == 1 ? 1 : 0;
        Word assembled = slice(t.R(n), 1, as_size(t.r(n - 1) + bump)) +
                         t.alternating_product(n - (k + 1)) + t.R(n - k);
        return compare_words("kernel_expansion_p42", params, t.R(n), assembled);
    });
}

Report kernel_expansion_p42(Alphabet alphabet, unsigned n, Conventions conventions, std::size_t cap) {
    return kernel_expansion_p42(FactorizationTables::build(alphabet, n, conventions, cap), n);
}

GapRecurrenceCheck gap_recurrence_check(const FactorizationTables& t, unsigned n) {
    const unsigned k = t.k();
    require_identity_domain(t, n, k + 1);
    Params params{{"k", k}, {"n", n}};
    GapRecurrenceCheck out{{}, StarSuffix{k, n, Word(t.alphabet())}, 0};

    out.report = guarded("gap_recurrence", params, [&]() -> Report {
        Word assembled = t.G(n - k);
        for (unsigned i = k - 1; i >= 2; --i) assembled += t.R(n - i) + t.G(n - i);
        const std::uint64_t lead = t.r(n - 2) + ((n - 1) % k == 1 ? 1 : 0);
        assembled += slice(t.R(n - 1), 1, as_size(lead));
        const Word image_of_two = iterate_letter(t.alphabet(), n - 2, 2, t.cap());
        assembled += image_of_two;
        out.assembled_length = assembled.size();

        const std::size_t star_length = as_size(t.r(n) + (n % k == 0 ? 1 : 0));
        out.star.word = slice(t.R(n + 1), 1, star_length);
        out.star.suffix_of_image_of_two = ends_with(image_of_two, out.star.word);
        out.star.suffix_of_W = ends_with(t.W(n - 2), out.star.word);

        Report r;
        r.check = "gap_recurrence";
        r.params = params;
        if (star_length > assembled.size() || !ends_with(assembled, out.star.word)) {
            r.status = Status::Fail;
            r.counterexample = out.star.word.to_text();
            r.detail = "R_{n+1}[1, " + std::to_string(star_length) +
                       "] is not a suffix of the assembled tail";
            return r;
        }
        r = compare_words("gap_recurrence", params, t.G(n), drop_suffix(assembled, star_length));
        if (r.passed() && !out.star.suffix_of_image_of_two) {
            r.status = Status::Fail;
            r.counterexample = out.star.word.to_text();
            r.detail = "removed suffix reaches beyond s_k^{n-2}(2)";
        }
        return r;
    });
    return out;
}

GapRecurrenceCheck gap_recurrence_check(Alphabet alphabet, unsigned n, Conventions conventions,
                                        std::size_t cap) {
    return gap_recurrence_check(FactorizationTables::build(alphabet, n, conventions, cap), n);
}

FactorizationStream::FactorizationStream(Alphabet alphabet, Conventions conventions, std::size_t cap)
    : alphabet_(alphabet),
      conventions_(conventions),
      cap_(cap),
      gap_seed_(gap_seed(alphabet, alphabet.size() + 1, conventions.gaps, cap)),
      kernel_(alphabet),
      gap_(alphabet) {}

Word FactorizationStream::next_kernel() {
    const unsigned k = alphabet_.size();
    if (index_ <= k + 2) return kernel_word(alphabet_, index_, conventions_.kernel, cap_);
    return next_kernel_word(kernel_, index_, conventions_.kernel, cap_);
}

Word FactorizationStream::next_gap() {
    if (index_ < gap_seed_.size()) return gap_seed_[index_];
    if (alphabet_.size() == 2) return Word(alphabet_);
    return next_kernel_gap(gap_, index_, conventions_.gaps, cap_);
}

FactorizationToken FactorizationStream::next() {
    FactorizationToken token{TokenKind::Kernel, 0, Word(alphabet_), position_};
    if (kernel_next_) {
        ++index_;
        kernel_ = next_kernel();
        token.word = kernel_;
    } else {
        gap_ = next_gap();
        token.kind = TokenKind::Gap;
        token.word = gap_;
    }
    token.index = index_;
    kernel_next_ = !kernel_next_;

    for (std::size_t j = 0; j < token.word.size(); ++j) {
        if (token.word[j] != letter_at(alphabet_, position_ - 1 + j)) {
            throw FalsificationError(std::string(token.kind == TokenKind::Kernel ? "R_" : "G_") +
                                         std::to_string(index_) + " (token " +
                                         std::to_string(2 * index_ - (token.kind == TokenKind::Kernel ? 1 : 0)) +
                                         ") disagrees with P_" + std::to_string(alphabet_.size()) +
                                         " at position " + std::to_string(position_ + j),
                                     position_ + j);
        }
    }
    position_ += token.word.size();
    return token;
}

std::vector<FactorizationToken> factorize(Alphabet alphabet, std::size_t length_cap,
                                          Conventions conventions, std::size_t cap) {
    FactorizationStream stream(alphabet, conventions, cap);
    std::vector<FactorizationToken> tokens;
    for (;;) {
        FactorizationToken token = stream.next();
        if (token.end() - 1 > length_cap) break;
        tokens.push_back(std::move(token));
    }
    return tokens;
}

std::vector<FactorizationToken> factorize_covering(Alphabet alphabet, std::size_t length,
                                                   Conventions conventions, std::size_t cap) {
    FactorizationStream stream(alphabet, conventions, cap);
    std::vector<FactorizationToken> tokens;
    std::uint64_t covered = 0;
    while (covered < length) {
        tokens.push_back(stream.next());
        covered = tokens.back().end() - 1;
    }
    return tokens;
}

}  // namespace pdseq
