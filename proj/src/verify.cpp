#include "pdseq/verify.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <set>

#include "pdseq/kernel.hpp"
#include "pdseq/oracle.hpp"
#include "pdseq/prefix_structure.hpp"

namespace pdseq {

namespace {

using Params = std::vector<std::pair<std::string, std::int64_t>>;

Report fail_report(std::string check, Params params, std::string detail,
                   std::optional<std::size_t> position = std::nullopt,
                   std::optional<std::string> counterexample = std::nullopt) {
    Report r;
    r.check = std::move(check);
    r.params = std::move(params);
    r.status = Status::Fail;
    r.detail = std::move(detail);
    r.mismatch_position = position;
    r.counterexample = std::move(counterexample);
    if (!r.mismatch_position && !r.counterexample) r.counterexample = "-";
    return r;
}

/// Runs one instance, turning thrown findings into failed reports.
template <class F>
Report instance(const std::string& check, Params params, F&& body) {
    try {
        return timed(std::forward<F>(body));
    } catch (const FalsificationError& e) {
        return fail_report(check, params, e.what(), e.position() ? std::optional(e.position()) : std::nullopt);
    } catch (const DomainError& e) {
        return fail_report(check, params, std::string("unexpected domain error: ") + e.what());
    }
}

Params base(Alphabet a, unsigned depth) { return {{"k", a.size()}, {"depth", depth}}; }

/// Distinct factors of `text` with lengths in [lo, hi].
std::vector<Word> distinct_factors(const Word& text, std::size_t lo, std::size_t hi) {
    std::set<std::vector<Letter>> seen;
    auto letters = text.letters();
    for (std::size_t len = lo; len <= hi && len <= text.size(); ++len) {
        for (std::size_t i = 0; i + len <= text.size(); ++i) {
            seen.emplace(letters.begin() + i, letters.begin() + i + len);
        }
    }
    std::vector<Word> out;
    out.reserve(seen.size());
    for (const auto& v : seen) out.emplace_back(text.alphabet(), v);
    return out;
}

unsigned host_exponent(unsigned depth, std::size_t cap) {
    unsigned e = depth;
    while (e > 0 && (std::size_t{1} << e) > cap) --e;
    return e;
}

// -- families --------------------------------------------------------------------

Report prefix_family(Alphabet a, unsigned depth, std::size_t cap) {
    return aggregate("prefix_family", base(a, depth), {instance("prefix_family", base(a, depth), [&] {
                         PrefixFamily::build(a, depth, cap);
                         Report r;
                         r.check = "prefix_family";
                         r.params = base(a, depth);
                         return r;
                     })});
}

Report prefix_recursion(Alphabet a, unsigned depth, std::size_t cap) {
    std::vector<Report> rs;
    for (unsigned n = 0; n < depth; ++n) rs.push_back(check_prefix_recursion(a, n, cap));
    return aggregate("prefix_recursion", base(a, depth), rs);
}

Report doubling(Alphabet a, unsigned depth) {
    return aggregate("doubling_lengths", base(a, depth), {check_doubling_lengths(a, 40)});
}

Report lemma_L1(Alphabet a, unsigned depth, std::size_t cap) {
    std::vector<Report> rs;
    for (unsigned n = 2; n <= depth; ++n) rs.push_back(check_lemma_L1(a, n, cap));
    return aggregate("lemma_L1", base(a, depth), rs);
}

Report letter_variants(Alphabet a, unsigned depth, std::size_t cap) {
    std::vector<Report> rs;
    for (unsigned n = 0; n <= depth; ++n) {
        for (unsigned m = 1; m < a.size(); ++m) {
            Params p{{"k", a.size()}, {"n", n}, {"m", m}};
            rs.push_back(instance("letter_variant", p, [&] {
                Word w = letter_variant(a, n, m, cap);
                // s^n(m) is the second half of s^{n+1}(m-1) for m >= 1.
                Word parent = m == 1 ? iterate(a, n + 1, cap) : letter_variant(a, n + 1, m - 1, cap);
                return compare_words("letter_variant", p, slice(parent, w.size() + 1, parent.size()), w);
            }));
        }
    }
    return aggregate("letter_variant", base(a, depth), rs);
}

Report mirror_products(Alphabet a, unsigned depth, std::size_t cap) {
    std::vector<Report> rs;
    for (unsigned d = 0; d < depth; ++d) rs.push_back(check_mirror_product(a, d, cap));
    return aggregate("mirror_product", base(a, depth), rs);
}

Report product_factors(Alphabet a, unsigned depth, std::size_t cap) {
    const unsigned bound = std::min(8u, depth / 2);
    const unsigned e = host_exponent(product_factor_window(bound, bound, a.size()), cap);
    Word host = iterate(a, e, cap);
    std::vector<Report> rs;
    for (unsigned n = 0; n <= bound; ++n) {
        for (unsigned l = 0; l <= bound; ++l) rs.push_back(check_product_factor_in(host, n, l).report);
    }
    return aggregate("product_factor", base(a, depth), rs);
}

Report lcp_theorem(Alphabet a, unsigned depth, std::size_t cap) {
    std::vector<Report> rs;
    for (unsigned n = a.size() - 1; n <= depth; ++n) {
        for (unsigned i = 1; i < a.size(); ++i) {
            for (auto order : {SecondProductOrder::Natural, SecondProductOrder::Descending}) {
                rs.push_back(check_lcp_theorem(a, n, i, order, cap).report);
            }
        }
    }
    return aggregate("lcp_theorem", base(a, depth), rs);
}

Report palindrome_equivalences(Alphabet a, unsigned depth, std::size_t cap) {
    const unsigned e = host_exponent(std::min(depth, 12u), cap);
    Word host = iterate(a, e, cap);
    std::vector<Word> samples = distinct_factors(host, 3, 12);
    for (unsigned n = 2; n <= e; ++n) samples.push_back(palindromic_prefix(a, n, cap));
    std::vector<Report> rs;
    for (const Word& v : samples) {
        Params p{{"k", a.size()}, {"length", static_cast<std::int64_t>(v.size())}};
        rs.push_back(instance("palindrome_equivalence", p, [&] {
            PalindromeTriple t = palindrome_equivalence(v, cap);
            Report r;
            r.check = "palindrome_equivalence";
            r.params = p;
            if (!t.consistent()) {
                r = fail_report("palindrome_equivalence", p,
                                std::string("v, s(v)0, 0^-1 s(v) palindromic: ") + (t.word ? "yes" : "no") +
                                    ", " + (t.appended ? "yes" : "no") + ", " + (t.stripped ? "yes" : "no"),
                                std::nullopt, v.to_text());
            }
            return r;
        }));
    }
    return aggregate("palindrome_equivalence", base(a, depth), rs);
}

Report desubstitutions(Alphabet a, unsigned depth, std::size_t cap) {
    const unsigned e = host_exponent(std::min(depth, 12u), cap);
    Word host = iterate(a, e, cap);
    std::vector<Report> rs;
    const Word double_zero(a, {0, 0});
    for (const Word& v : distinct_factors(host, 1, 24)) {
        if (!is_palindrome(v) || v == double_zero) continue;
        Params p{{"k", a.size()}, {"length", static_cast<std::int64_t>(v.size())}};
        rs.push_back(instance("desubstitution", p, [&] {
            Desubstitution d = desubstitute_palindrome(v, cap);
            Word image = substitute(d.preimage, cap);
            Word rebuilt = d.form == DesubstitutionForm::AppendZero ? image + Word(a, {0}) : strip_leading(image, 0);
            return compare_words("desubstitution", p, v, rebuilt);
        }));
    }
    return aggregate("desubstitution", base(a, depth), rs);
}

Report letter_access(Alphabet a, unsigned depth, std::size_t cap) {
    const std::size_t length = std::size_t{1} << host_exponent(std::min(depth, 16u), cap);
    return aggregate("letter_at", base(a, depth), {instance("letter_at", base(a, depth), [&] {
                         Word naive = oracle::naive_prefix(a, length, cap);
                         Word fast(a);
                         fast.reserve(length);
                         for (std::size_t i = 0; i < length; ++i) fast.push_back(letter_at(a, i));
                         return compare_words("letter_at", base(a, depth), naive, fast);
                     })});
}

struct KernelFamilies {
    Report lengths, palindromes, occurrence, non_factor;
};

KernelFamilies kernel_families(Alphabet a, unsigned depth, KernelRule rule, std::size_t cap) {
    const unsigned i_max = std::min(std::max(12u, depth + 2), kernel_index_limit(a));
    const unsigned located = std::min(12u, i_max);
    const unsigned e = host_exponent(located + 4, cap);
    std::vector<std::uint64_t> r = kernel_numbers(a, i_max);
    std::vector<Word> R(1, Word(a));
    std::vector<Report> lengths, palindromes, occurrence, non_factor;
    try {
        R = kernel_words(a, i_max, rule, cap);
    } catch (const CapExceeded&) {
        // Keep the rows that fit.
        for (unsigned i = 1; i <= i_max; ++i) {
            if (r[i] > cap) break;
            R.push_back(kernel_word(a, i, rule, cap));
        }
    }
    Word host = iterate(a, e, cap);
    for (unsigned i = 0; i < R.size(); ++i) {
        Params p{{"k", a.size()}, {"i", i}};
        Report len;
        len.check = "kernel_lengths";
        len.params = p;
        if (R[i].size() != r[i]) {
            len = fail_report("kernel_lengths", p,
                              "|R_i| = " + std::to_string(R[i].size()) + ", r_i = " + std::to_string(r[i]),
                              std::nullopt, R[i].to_text());
        }
        lengths.push_back(len);
        Report pal;
        pal.check = "kernel_palindromes";
        pal.params = p;
        if (!is_palindrome(R[i])) pal = fail_report("kernel_palindromes", p, "not a palindrome", std::nullopt, R[i].to_text());
        palindromes.push_back(pal);
        if (i >= 1 && i <= located) {
            Report occ;
            occ.check = "kernel_occurrence";
            occ.params = p;
            if (auto at = find_first(R[i].letters(), host.letters())) {
                occ.detail = "first occurrence at " + std::to_string(at->start);
            } else {
                occ = fail_report("kernel_occurrence", p, "not found in W_" + std::to_string(e), std::nullopt,
                                  R[i].to_text());
            }
            occurrence.push_back(occ);
            if (i + 1 < R.size()) {
                Report nf;
                nf.check = "kernel_non_factor";
                nf.params = p;
                if (is_factor(R[i], R[i + 1])) {
                    nf = fail_report("kernel_non_factor", p, "R_i occurs in R_{i+1}", std::nullopt, R[i].to_text());
                }
                non_factor.push_back(nf);
            }
        }
    }
    return {aggregate("kernel_lengths", base(a, depth), lengths),
            aggregate("kernel_palindromes", base(a, depth), palindromes),
            aggregate("kernel_occurrence", base(a, depth), occurrence),
            aggregate("kernel_non_factor", base(a, depth), non_factor)};
}

Report binary_factorization(Alphabet a, unsigned depth, KernelRule rule, std::size_t cap) {
    if (a.size() != 2) return out_of_domain("binary_factorization", base(a, depth), "P_2 only");
    const std::size_t length = std::size_t{1} << host_exponent(depth, cap);
    return aggregate("binary_factorization", base(a, depth), {instance("binary_factorization", base(a, depth), [&] {
                         std::vector<KernelToken> tokens = binary_kernel_factorization(length, rule, cap);
                         std::vector<std::uint64_t> r = kernel_numbers(a, static_cast<unsigned>(tokens.size()));
                         Word joined(a);
                         std::uint64_t boundary = 1;
                         for (const KernelToken& t : tokens) {
                             if (t.start != boundary) {
                                 return fail_report("binary_factorization", base(a, depth),
                                                    "R_" + std::to_string(t.index) + " starts at " +
                                                        std::to_string(t.start) + ", cumulative r gives " +
                                                        std::to_string(boundary),
                                                    t.start);
                             }
                             boundary += r[t.index];
                             joined += t.word;
                         }
                         return compare_words("binary_factorization", base(a, depth),
                                              oracle::naive_prefix(a, length, cap), slice(joined, 1, length));
                     })});
}

std::vector<Report> identity_families(Alphabet a, unsigned depth, const Conventions& conv, std::size_t cap) {
    const char* names[] = {"W_assembly", "W_one_assembly", "kernel_identity", "kernel_definition_form",
                           "kernel_expansion", "gap_recurrence"};
    std::vector<Report> out;
    if (a.size() < 3) {
        for (const char* name : names) out.push_back(out_of_domain(name, base(a, depth), "needs k >= 3"));
        return out;
    }
    const unsigned k = a.size();
    const unsigned n_max = host_exponent(depth, cap);
    FactorizationTables t = FactorizationTables::build(a, n_max, conv, cap);
    std::vector<Report> W, W_one, t42, def, p42, gap;
    for (unsigned n = 1; n <= n_max; ++n) {
        Params p{{"k", k}, {"n", n}};
        try {
            WAssembly w = build_W_via_kernel_gaps(t, n);
            W.push_back(w.W_report);
            W_one.push_back(w.W_one_report);
        } catch (const FalsificationError& e) {
            W.push_back(fail_report("W_assembly", p, e.what(), e.position()));
        }
        if (n < k + 1) continue;
        KernelIdentityCheck c = kernel_identity_t42(t, n);
        t42.push_back(c.theorem);
        def.push_back(c.definition_form);
        p42.push_back(kernel_expansion_p42(t, n));
        gap.push_back(gap_recurrence_check(t, n).report);
    }
    out.push_back(aggregate(names[0], base(a, depth), W));
    out.push_back(aggregate(names[1], base(a, depth), W_one));
    out.push_back(aggregate(names[2], base(a, depth), t42));
    out.push_back(aggregate(names[3], base(a, depth), def));
    out.push_back(aggregate(names[4], base(a, depth), p42));
    out.push_back(aggregate(names[5], base(a, depth), gap));
    return out;
}

std::vector<Report> gap_lengths(Alphabet a, unsigned depth, GapRule rule) {
    if (a.size() < 3) {
        return {out_of_domain("gap_length_closed_form", base(a, depth), "needs k >= 3"),
                out_of_domain("gap_length_corollary", base(a, depth), "needs k >= 3")};
    }
    std::vector<Report> closed, corollary;
    std::vector<GapLength> rows;
    try {
        rows = gap_length_table(a, 30, rule);
    } catch (const FalsificationError& e) {
        Report f = fail_report("gap_length_corollary", base(a, depth), e.what());
        return {aggregate("gap_length_closed_form", base(a, depth), {f}), f};
    }
    for (const GapLength& row : rows) {
        Params p{{"k", a.size()}, {"n", row.n}};
        Report c;
        c.check = "gap_length_closed_form";
        c.params = p;
        if (!row.closed_form_agrees()) {
            c = fail_report("gap_length_closed_form", p,
                            "construction " + std::to_string(row.construction) + ", closed form " +
                                std::to_string(*row.closed_form),
                            std::nullopt, std::to_string(row.construction));
            c.documented = true;
        }
        closed.push_back(c);
        Report q;
        q.check = "gap_length_corollary";
        q.params = p;
        if (!row.corollary_agrees()) {
            q = fail_report("gap_length_corollary", p,
                            "construction " + std::to_string(row.construction) + ", corollary " +
                                std::to_string(*row.corollary),
                            std::nullopt, std::to_string(row.construction));
        }
        corollary.push_back(q);
    }
    Params p = base(a, depth);
    p.emplace_back("n_max", 30);
    return {aggregate("gap_length_closed_form", p, closed), aggregate("gap_length_corollary", p, corollary)};
}

Report stream(Alphabet a, unsigned depth, const Conventions& conv, std::size_t cap) {
    const std::size_t length = std::size_t{1} << host_exponent(depth, cap);
    return aggregate("factorization_stream", base(a, depth), {instance("factorization_stream", base(a, depth), [&] {
                         Word joined(a);
                         for (const auto& t : factorize_covering(a, length, conv, cap)) joined += t.word;
                         return compare_words("factorization_stream", base(a, depth),
                                              oracle::naive_prefix(a, length, cap), slice(joined, 1, length));
                     })});
}

bool same_gaps(const FactorGaps& x, const FactorGaps& y) {
    if (x.leading != y.leading || x.gaps.size() != y.gaps.size()) return false;
    for (std::size_t i = 0; i < x.gaps.size(); ++i) {
        const Gap& g = x.gaps[i];
        const Gap& h = y.gaps[i];
        if (g.kind != h.kind || g.orientation != h.orientation || g.word != h.word ||
            g.left_start != h.left_start || g.right_start != h.right_start) {
            return false;
        }
    }
    return true;
}

Report factor_gap_family(Alphabet a, unsigned depth, std::size_t cap) {
    const unsigned e = host_exponent(std::min(depth, 10u), cap);
    Word host = iterate(a, e, cap);
    std::vector<Report> rs;
    for (const Word& v : distinct_factors(host, 1, 4)) {
        Params p{{"k", a.size()}, {"length", static_cast<std::int64_t>(v.size())}};
        if (oracle::naive_occurrences(v, host).size() < 2) continue;
        rs.push_back(instance("factor_gaps", p, [&] {
            Report r;
            r.check = "factor_gaps";
            r.params = p;
            if (!same_gaps(gaps_in(v, host), oracle::naive_gaps(v, host))) {
                r = fail_report("factor_gaps", p, "disagrees with the quadratic scan", std::nullopt, v.to_text());
            }
            return r;
        }));
    }
    return aggregate("factor_gaps", base(a, depth), rs);
}

}  // namespace

Report aggregate(std::string check, Params params, const std::vector<Report>& instances) {
    Report out;
    out.check = std::move(check);
    out.params = std::move(params);
    std::size_t pass = 0, fail = 0, ood = 0;
    const Report* first = nullptr;
    bool all_documented = true;
    for (const Report& r : instances) {
        out.elapsed += r.elapsed;
        switch (r.status) {
            case Status::Pass: ++pass; break;
            case Status::OutOfDomain: ++ood; break;
            case Status::Fail:
                ++fail;
                if (!first) first = &r;
                all_documented = all_documented && r.documented;
                break;
        }
    }
    std::string counts = std::to_string(pass) + " pass, " + std::to_string(fail) + " fail, " +
                         std::to_string(ood) + " out of domain";
    if (first) {
        out.status = Status::Fail;
        out.documented = all_documented;
        out.mismatch_position = first->mismatch_position;
        out.counterexample = first->counterexample;
        out.detail = counts + "; first at " + first->params_text() + ": " + first->detail;
    } else if (pass == 0 && ood > 0) {
        out.status = Status::OutOfDomain;
        out.detail = counts;
        if (instances.size() == 1) out.detail = instances.front().detail;
    } else {
        out.detail = counts;
    }
    return out;
}

std::vector<Report> verify_all(Alphabet a, unsigned depth, const VerifyOptions& options) {
    const std::size_t cap = options.cap;
    const Conventions conv = options.conventions;
    using Job = std::function<std::vector<Report>()>;
    auto one = [](Report r) { return std::vector<Report>{std::move(r)}; };
    std::vector<Job> jobs{
        [&] { return one(prefix_family(a, depth, cap)); },
        [&] { return one(prefix_recursion(a, depth, cap)); },
        [&] { return one(doubling(a, depth)); },
        [&] { return one(lemma_L1(a, depth, cap)); },
        [&] { return one(letter_variants(a, depth, cap)); },
        [&] { return one(mirror_products(a, depth, cap)); },
        [&] { return one(product_factors(a, depth, cap)); },
        [&] { return one(lcp_theorem(a, depth, cap)); },
        [&] { return one(palindrome_equivalences(a, depth, cap)); },
        [&] { return one(desubstitutions(a, depth, cap)); },
        [&] { return one(letter_access(a, depth, cap)); },
        [&] {
            KernelFamilies f = kernel_families(a, depth, conv.kernel, cap);
            return std::vector<Report>{f.lengths, f.palindromes, f.occurrence, f.non_factor};
        },
        [&] { return one(binary_factorization(a, depth, conv.kernel, cap)); },
        [&] { return identity_families(a, depth, conv, cap); },
        [&] { return gap_lengths(a, depth, conv.gaps); },
        [&] { return one(stream(a, depth, conv, cap)); },
        [&] { return one(factor_gap_family(a, depth, cap)); },
        [&] { return one(oracle::congruence_check(a, std::size_t{1} << host_exponent(std::min(depth, 16u), cap))); },
    };

    std::vector<Report> out;
    if (options.parallel) {
        std::vector<std::future<std::vector<Report>>> futures;
        for (Job& job : jobs) futures.push_back(std::async(std::launch::async, job));
        for (auto& f : futures) {
            auto part = f.get();
            out.insert(out.end(), part.begin(), part.end());
        }
    } else {
        for (Job& job : jobs) {
            auto part = job();
            out.insert(out.end(), part.begin(), part.end());
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const Report& x, const Report& y) { return x.check < y.check; });
    return out;
}

}  // namespace pdseq
