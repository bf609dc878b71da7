#include "pdseq/prefix_structure.hpp"

#include <algorithm>
#include <bit>
#include <limits>

namespace pdseq {

namespace {

using Params = std::vector<std::pair<std::string, std::int64_t>>;


Letter theta(unsigned n, unsigned k) { return static_cast<Letter>(n % k); }

/// W_0, ..., W_n by repeated substitution.
std::vector<Word> prefix_words(Alphabet a, unsigned n, std::size_t cap) {
    if (n >= 63 || (std::size_t{1} << n) > cap) {
        throw CapExceeded(n >= 63 ? std::numeric_limits<std::size_t>::max() : std::size_t{1} << n, cap);
    }
    std::vector<Word> out;
    out.reserve(n + 1);
    out.push_back(Word(a, {0}));
    for (unsigned j = 1; j <= n; ++j) out.push_back(substitute(out.back(), cap));
    return out;
}

}  // namespace

PrefixFamily PrefixFamily::build(Alphabet alphabet, unsigned n_max, std::size_t cap) {
    const unsigned k = alphabet.size();
    PrefixFamily family(alphabet);
    std::vector<Word> W = prefix_words(alphabet, n_max, cap);

    Word p(alphabet);  // p_0 = eps
    for (unsigned n = 0; n <= n_max; ++n) {
        Word with_theta = p;
        with_theta.push_back(theta(n, k));
        if (with_theta != W[n]) {
            throw FalsificationError("W_" + std::to_string(n) + " != p_n theta_n",
                                     lcp_length(with_theta.letters(), W[n].letters()) + 1);
        }
        if (!is_palindrome(p)) {
            throw FalsificationError("p_" + std::to_string(n) + " is not a palindrome", 0);
        }
        Word doubled = with_theta + p;
        Word substituted = substitute(p, cap);
        substituted.push_back(0);
        if (doubled != substituted) {
            throw FalsificationError(
                "p_" + std::to_string(n + 1) + ": doubling and substitution recurrences disagree",
                lcp_length(doubled.letters(), substituted.letters()) + 1);
        }
        family.entries_.push_back(PrefixEntry{n, W[n], p, theta(n, k), std::uint64_t{1} << n});
        p = std::move(doubled);
    }
    family.next_palindrome_ = std::move(p);
    return family;
}

Word palindromic_prefix(Alphabet alphabet, unsigned n, std::size_t cap) {
    if (n >= 63 || (std::size_t{1} << n) - 1 > cap) {
        throw CapExceeded(n >= 63 ? std::numeric_limits<std::size_t>::max() : (std::size_t{1} << n) - 1,
                          cap);
    }
    Word p(alphabet);
    for (unsigned j = 0; j < n; ++j) {
        Word next = p;
        next.push_back(theta(j, alphabet.size()));
        next += p;
        p = std::move(next);
    }
    return p;
}

Word letter_variant(Alphabet alphabet, unsigned n, unsigned m, std::size_t cap) {
    if (m == 0) throw DomainError("letter_variant needs m != 0; use iterate for s_k^n(0)");
    if (!alphabet.contains(m)) {
        throw DomainError("letter " + std::to_string(m) + " outside A_" + std::to_string(alphabet.size()));
    }
    Word result = iterate_letter(alphabet, n, m, cap);
    if (n >= 1) {
        Word head = iterate(alphabet, n - 1, cap);
        Word expected = m + 1 < alphabet.size()
                            ? head + iterate_letter(alphabet, n - 1, m + 1, cap)
                            : head + head;
        if (expected != result) {
            throw FalsificationError("W_{n,m} decomposition fails for n=" + std::to_string(n) +
                                         " m=" + std::to_string(m),
                                     lcp_length(expected.letters(), result.letters()) + 1);
        }
    }
    return result;
}

std::vector<std::uint64_t> doubling_lengths(Alphabet alphabet, unsigned m_max) {
    if (m_max > 63) throw DomainError("w_m exceeds 64-bit range beyond m = 63");
    const unsigned k = alphabet.size();
    std::vector<std::uint64_t> w;
    w.reserve(m_max + 1);
    for (unsigned m = 0; m <= m_max; ++m) {
        if (m < k) {
            w.push_back(std::uint64_t{1} << m);
            continue;
        }
        std::uint64_t sum = 2 * w[m - k];
        for (unsigned j = 1; j <= k - 1; ++j) sum += w[m - j];
        w.push_back(sum);
    }
    return w;
}

Report check_doubling_lengths(Alphabet alphabet, unsigned m_max) {
    return timed([&] {
        Report r;
        r.check = "doubling_lengths";
        r.params = {{"k", alphabet.size()}, {"m_max", m_max}};
        std::vector<std::uint64_t> w = doubling_lengths(alphabet, m_max);
        for (unsigned m = 0; m <= m_max; ++m) {
            if (w[m] != std::uint64_t{1} << m) {
                r.status = Status::Fail;
                r.mismatch_position = m + 1;
                r.counterexample = std::to_string(w[m]);
                r.detail = "w_" + std::to_string(m) + " = " + std::to_string(w[m]) + " != 2^m";
                break;
            }
        }
        return r;
    });
}

Report check_prefix_recursion(Alphabet alphabet, unsigned n, std::size_t cap) {
    return timed([&] {
        Params params{{"k", alphabet.size()}, {"n", n}};
        std::vector<Word> W = prefix_words(alphabet, n, cap);
        Word p = palindromic_prefix(alphabet, n, cap);
        Word with_theta = p;
        with_theta.push_back(theta(n, alphabet.size()));
        Report r = compare_words("prefix_recursion", params, W[n], with_theta);
        if (!r.passed()) return r;
        if (!is_palindrome(p)) {
            r.status = Status::Fail;
            r.counterexample = p.to_text();
            r.detail = "p_n is not a palindrome";
            return r;
        }
        Word next = substitute(p, cap);
        next.push_back(0);
        r = compare_words("prefix_recursion", params, with_theta + p, next);
        if (!r.passed()) return r;
        Word product(alphabet);
        for (unsigned j = n + 1; j-- > 0;) product += W[j];
        r = compare_words("prefix_recursion", params, next, product);
        return r;
    });
}

Report check_lemma_L1(Alphabet alphabet, unsigned n, std::size_t cap) {
    return timed([&] {
        Params params{{"k", alphabet.size()}, {"n", n}};
        if (n < 2) return out_of_domain("lemma_L1", params, "the product form is stated for n >= 2");
        std::vector<Word> W = prefix_words(alphabet, n, cap);
        Word product(alphabet);
        for (unsigned l = n; l-- > 0;) product += W[l];
        product.push_back(theta(n, alphabet.size()));
        return compare_words("lemma_L1", params, W[n], product);
    });
}

Report check_mirror_product(Alphabet alphabet, unsigned depth, std::size_t cap) {
    return timed([&] {
        Params params{{"k", alphabet.size()}, {"depth", depth}};
        std::vector<Word> W = prefix_words(alphabet, depth + 1, cap);
        Word product(alphabet);
        for (unsigned i = 0; i <= depth; ++i) product += mirror(W[i]);
        const Word& host = W[depth + 1];
        Word host_prefix = slice(host, 1, product.size());
        Report r = compare_words("mirror_product", params, host_prefix, product);
        if (!r.passed()) {
            r.detail = "not a prefix of P_k: " + r.detail;
            return r;
        }
        r = compare_words("mirror_product", params, palindromic_prefix(alphabet, depth + 1, cap),
                          product);
        if (!r.passed()) r.detail = "differs from p_{depth+1}: " + r.detail;
        return r;
    });
}

ProductFactorResult check_product_factor_in(const Word& host, unsigned n, unsigned l) {
    ProductFactorResult result;
    const Alphabet a = host.alphabet();
    result.report.check = "product_factor";
    result.report.params = {{"k", a.size()}, {"n", n}, {"l", l}};
    const std::size_t need = (std::size_t{1} << n) + (std::size_t{1} << l);
    if (need <= host.size()) {
        Word product = iterate(a, n, host.size()) + iterate(a, l, host.size());
        result.occurrence = find_first(product.letters(), host.letters());
    }
    result.window_exponent = static_cast<unsigned>(std::bit_width(host.size()) - 1);
    if (result.occurrence) {
        result.report.detail = "first occurrence at " + std::to_string(result.occurrence->start);
    } else {
        result.report.status = Status::Fail;
        result.report.counterexample = (iterate(a, n) + iterate(a, l)).to_text();
        result.report.detail = "W_n W_l not found in a prefix of length " + std::to_string(host.size());
    }
    return result;
}

ProductFactorResult check_product_factor(Alphabet alphabet, unsigned n, unsigned l,
                                         unsigned search_depth, std::size_t cap) {
    auto t0 = std::chrono::steady_clock::now();
    const unsigned k = alphabet.size();
    unsigned e = std::max(search_depth, product_factor_window(n, l, k));
    ProductFactorResult result;
    for (;; ++e) {
        if (e >= 63 || (std::size_t{1} << e) > cap) {
            result.report.check = "product_factor";
            result.report.params = {{"k", k}, {"n", n}, {"l", l}};
            result.report.status = Status::Fail;
            result.report.counterexample = (iterate(alphabet, n, cap) + iterate(alphabet, l, cap)).to_text();
            result.report.detail = "falsification: W_n W_l not found before the length cap " +
                                   std::to_string(cap);
            result.window_exponent = e;
            break;
        }
        result = check_product_factor_in(iterate(alphabet, e, cap), n, l);
        if (result.occurrence) break;
    }
    result.report.elapsed = std::chrono::steady_clock::now() - t0;
    return result;
}

LcpCheck check_lcp_theorem(Alphabet alphabet, unsigned n, unsigned i, SecondProductOrder order,
                           std::size_t cap) {
    auto t0 = std::chrono::steady_clock::now();
    const unsigned k = alphabet.size();
    LcpCheck out;
    Params params{{"k", k}, {"n", n}, {"i", i}};
    if (i < 1 || i > k - 1) {
        throw DomainError("lcp theorem needs 1 <= i <= k-1, got i=" + std::to_string(i));
    }
    if (n < k) {
        out.report = out_of_domain("lcp_theorem", params,
                                   "candidate needs W_j with j = n-k < 0");
        return out;
    }
    std::vector<Word> W = prefix_words(alphabet, n, cap);

    Word candidate(alphabet);
    for (unsigned j = n - (i + 1) + 1; j-- > n - k;) candidate += W[j];
    candidate += W[n - 1];
    const std::size_t head_length = candidate.size();

    if (order == SecondProductOrder::Natural && i == 1) {
        candidate += W[n - 2];
        candidate += W[n - 1];
    } else {
        // descending n-2 down to n-i; empty when i = 1
        for (unsigned j = n - 2 + 1; j-- > n - i;) candidate += W[j];
    }

    out.lcp_length = lcp_length(candidate.letters(), W[n].letters());
    out.expected_length = (std::size_t{1} << (n - i)) - 1;
    out.decided_before_second_product = out.lcp_length < head_length;
    out.report.check = "lcp_theorem";
    out.report.params = params;
    if (out.lcp_length != out.expected_length) {
        out.report.status = Status::Fail;
        out.report.mismatch_position = out.lcp_length + 1;
        out.report.counterexample = candidate.to_text();
        out.report.detail = "lcp has length " + std::to_string(out.lcp_length) + ", |p_{n-i}| = " +
                            std::to_string(out.expected_length);
    } else {
        // both are prefixes of W_n, so equal lengths mean equal words
        out.report.detail = "lcp length " + std::to_string(out.lcp_length);
    }
    out.report.elapsed = std::chrono::steady_clock::now() - t0;
    return out;
}

unsigned factor_window_exponent(std::size_t len, unsigned k) {
    // A window of length len < 2^t holds at most one index whose low t bits
    // are all ones; every other letter is fixed by the index mod 2^t, and the
    // exceptional one only by a residue mod k reachable below 2^(t+k).
    return static_cast<unsigned>(std::bit_width(len)) + k + 1;
}

bool is_sequence_factor(const Word& v, std::size_t cap) {
    if (v.empty()) return true;
    unsigned e = factor_window_exponent(v.size(), v.k());
    if (e >= 63 || (std::size_t{1} << e) > cap) {
        throw CapExceeded(e >= 63 ? std::numeric_limits<std::size_t>::max() : std::size_t{1} << e, cap);
    }
    return is_factor(v, iterate(v.alphabet(), e, cap));
}

PalindromeTriple palindrome_equivalence(const Word& v, std::size_t cap) {
    if (v.size() <= 2) throw DomainError("palindrome equivalence needs |v| > 2");
    if (!is_sequence_factor(v, cap)) {
        throw DomainError("'" + v.to_text() + "' is not a factor of P_" + std::to_string(v.k()));
    }
    Word image = substitute(v, cap);
    Word appended = image;
    appended.push_back(0);
    Word stripped = strip_leading(image, 0);
    return {is_palindrome(v), is_palindrome(appended), is_palindrome(stripped)};
}

std::string_view to_string(DesubstitutionForm f) noexcept {
    return f == DesubstitutionForm::AppendZero ? "append-zero" : "strip-zero";
}

Desubstitution desubstitute_palindrome(const Word& v, std::size_t cap) {
    const Alphabet a = v.alphabet();
    const unsigned k = a.size();
    if (v.empty()) throw DomainError("desubstitution needs a nonempty word");
    if (v == Word(a, {0, 0})) throw DomainError("00 has no palindromic preimage");
    if (!is_palindrome(v)) throw DomainError("'" + v.to_text() + "' is not a palindrome");
    if (!is_sequence_factor(v, cap)) {
        throw DomainError("'" + v.to_text() + "' is not a factor of P_" + std::to_string(k));
    }

    std::size_t run = static_cast<std::size_t>(
        std::ranges::find_if(v, [](Letter m) { return m != 0; }) - v.begin());
    const DesubstitutionForm form =
        run % 2 == 1 ? DesubstitutionForm::AppendZero : DesubstitutionForm::StripZero;

    // The image s_k(v') as a word of even length.
    std::vector<Letter> image;
    if (form == DesubstitutionForm::AppendZero) {
        if (v.back() != 0 || v.size() % 2 == 0) {
            throw FalsificationError("no preimage of the form s_k(v')0 for '" + v.to_text() + "'", 0);
        }
        image.assign(v.begin(), v.end() - 1);
    } else {
        if (v.size() % 2 == 0) {
            throw FalsificationError("no preimage of the form 0^{-1}s_k(v') for '" + v.to_text() + "'", 0);
        }
        image.push_back(0);
        image.insert(image.end(), v.begin(), v.end());
    }
    std::vector<Letter> pre;
    pre.reserve(image.size() / 2);
    for (std::size_t j = 0; j < image.size(); j += 2) {
        if (image[j] != 0) {
            throw FalsificationError("'" + v.to_text() + "' is not in the image of s_k", j + 1);
        }
        pre.push_back(static_cast<Letter>((image[j + 1] + k - 1) % k));
    }
    Word preimage(a, std::move(pre));
    if (!is_palindrome(preimage) || !is_sequence_factor(preimage, cap)) {
        throw FalsificationError("preimage '" + preimage.to_text() + "' is not a palindromic factor", 0);
    }
    return {std::move(preimage), form};
}

}  // namespace pdseq
