#include "pdseq/word.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdlib>
#include <functional>
#include <iterator>
#include <limits>

namespace pdseq {

namespace {

void check_cap(std::size_t requested, std::size_t cap) {
    if (requested > cap) throw CapExceeded(requested, cap);
}

void check_letter(unsigned m, Alphabet a) {
    if (!a.contains(m)) {
        throw DomainError("letter " + std::to_string(m) + " is outside the alphabet A_" +
                          std::to_string(a.size()));
    }
}

void check_same_alphabet(const Word& a, const Word& b) {
    if (a.alphabet() != b.alphabet()) {
        throw DomainError("words over different alphabets (k=" + std::to_string(a.k()) +
                          " vs k=" + std::to_string(b.k()) + ")");
    }
}

Letter successor(Letter m, unsigned k) noexcept {
    return static_cast<Letter>(m + 1u == k ? 0 : m + 1);
}

}  // namespace

std::size_t length_cap_from_env() {
    const char* raw = std::getenv("PDSEQ_LENGTH_CAP");
    if (raw == nullptr || *raw == '\0') return kDefaultLengthCap;
    std::string_view text(raw);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0) {
        throw DomainError("PDSEQ_LENGTH_CAP must be a positive integer, got '" +
                          std::string(text) + "'");
    }
    return value;
}

Alphabet::Alphabet(unsigned k) : k_(k) {
    if (k < 2 || k > kMaxAlphabetSize) {
        throw DomainError("alphabet size must lie in [2, " + std::to_string(kMaxAlphabetSize) +
                          "], got " + std::to_string(k));
    }
}

Word::Word(Alphabet alphabet, std::vector<Letter> letters)
    : alphabet_(alphabet), letters_(std::move(letters)) {
    for (Letter m : letters_) check_letter(m, alphabet_);
}

Word::Word(Alphabet alphabet, std::initializer_list<unsigned> letters) : alphabet_(alphabet) {
    letters_.reserve(letters.size());
    for (unsigned m : letters) {
        check_letter(m, alphabet_);
        letters_.push_back(static_cast<Letter>(m));
    }
}

Word Word::from_text(std::string_view text, Alphabet alphabet) {
    Word w(alphabet);
    if (text.empty() || text == "-") return w;
    if (alphabet.size() <= 10) {
        for (char c : text) {
            if (c < '0' || c > '9') {
                throw DomainError("invalid letter '" + std::string(1, c) + "' in word text");
            }
            unsigned m = static_cast<unsigned>(c - '0');
            check_letter(m, alphabet);
            w.letters_.push_back(static_cast<Letter>(m));
        }
        return w;
    }
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view field = text.substr(pos, comma - pos);
        unsigned m = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), m);
        if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
            throw DomainError("invalid letter '" + std::string(field) + "' in word text");
        }
        check_letter(m, alphabet);
        w.letters_.push_back(static_cast<Letter>(m));
        pos = comma + 1;
    }
    return w;
}

void Word::push_back(Letter m) {
    check_letter(m, alphabet_);
    letters_.push_back(m);
}

Word& Word::operator+=(const Word& rhs) {
    check_same_alphabet(*this, rhs);
    letters_.insert(letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
    return *this;
}

std::string Word::to_text() const {
    if (letters_.empty()) return "-";
    std::string out;
    if (k() <= 10) {
        out.reserve(letters_.size());
        for (Letter m : letters_) out.push_back(static_cast<char>('0' + m));
        return out;
    }
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i != 0) out.push_back(',');
        out += std::to_string(letters_[i]);
    }
    return out;
}

Word operator+(Word lhs, const Word& rhs) {
    lhs += rhs;
    return lhs;
}

std::string to_text(const Word& w) { return w.to_text(); }

Letter exchange(unsigned m, Alphabet alphabet) {
    check_letter(m, alphabet);
    return successor(static_cast<Letter>(m), alphabet.size());
}

Word substitute(const Word& w, std::size_t cap) {
    check_cap(2 * w.size(), cap);
    const unsigned k = w.k();
    std::vector<Letter> out;
    out.reserve(2 * w.size());
    for (Letter m : w) {
        out.push_back(0);
        out.push_back(successor(m, k));
    }
    return Word(w.alphabet(), std::move(out));
}

Word mirror_substitute(const Word& w, std::size_t cap) {
    check_cap(2 * w.size(), cap);
    const unsigned k = w.k();
    std::vector<Letter> out;
    out.reserve(2 * w.size());
    for (Letter m : w) {
        out.push_back(successor(m, k));
        out.push_back(0);
    }
    return Word(w.alphabet(), std::move(out));
}

Word iterate_letter(Alphabet alphabet, unsigned n, unsigned start, std::size_t cap) {
    check_letter(start, alphabet);
    if (n >= std::numeric_limits<std::size_t>::digits) {
        throw CapExceeded(std::numeric_limits<std::size_t>::max(), cap);
    }
    check_cap(std::size_t{1} << n, cap);
    Word w(alphabet, {start});
    for (unsigned step = 0; step < n; ++step) w = substitute(w, cap);
    return w;
}

Word iterate(Alphabet alphabet, unsigned n, std::size_t cap) {
    return iterate_letter(alphabet, n, 0, cap);
}

Word sequence_prefix(Alphabet alphabet, std::size_t length, std::size_t cap) {
    check_cap(length, cap);
    unsigned n = 0;
    while ((std::size_t{1} << n) < length) ++n;
    Word w = iterate(alphabet, n, std::max(cap, std::size_t{1} << n));
    return slice(w, 1, length);
}

Letter letter_at(Alphabet alphabet, std::uint64_t index) {
    return static_cast<Letter>(static_cast<unsigned>(std::countr_one(index)) % alphabet.size());
}

Word mirror(const Word& w) {
    std::vector<Letter> out(w.begin(), w.end());
    std::ranges::reverse(out);
    return Word(w.alphabet(), std::move(out));
}

bool is_palindrome(std::span<const Letter> w) noexcept {
    return std::equal(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(w.size() / 2), w.rbegin());
}

bool is_palindrome(const Word& w) noexcept { return is_palindrome(w.letters()); }

std::size_t lcp_length(std::span<const Letter> a, std::span<const Letter> b) noexcept {
    auto [ia, ib] = std::ranges::mismatch(a, b);
    return static_cast<std::size_t>(ia - a.begin());
}

Word lcp(const Word& a, const Word& b) {
    check_same_alphabet(a, b);
    std::size_t n = lcp_length(a.letters(), b.letters());
    return Word(a.alphabet(), std::vector<Letter>(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(n)));
}

bool starts_with(const Word& w, const Word& prefix) noexcept {
    return prefix.size() <= w.size() && std::equal(prefix.begin(), prefix.end(), w.begin());
}

bool ends_with(const Word& w, const Word& suffix) noexcept {
    return suffix.size() <= w.size() &&
           std::equal(suffix.begin(), suffix.end(),
                      w.end() - static_cast<std::ptrdiff_t>(suffix.size()));
}

std::vector<Occurrence> occurrences(std::span<const Letter> pattern, std::span<const Letter> text) {
    std::vector<Occurrence> found;
    const std::size_t m = pattern.size();
    if (m == 0 || m > text.size()) return found;

    // Knuth-Morris-Pratt failure function.
    std::vector<std::size_t> fail(m, 0);
    for (std::size_t i = 1, len = 0; i < m; ++i) {
        while (len > 0 && pattern[i] != pattern[len]) len = fail[len - 1];
        if (pattern[i] == pattern[len]) ++len;
        fail[i] = len;
    }
    for (std::size_t i = 0, matched = 0; i < text.size(); ++i) {
        while (matched > 0 && text[i] != pattern[matched]) matched = fail[matched - 1];
        if (text[i] == pattern[matched]) ++matched;
        if (matched == m) {
            found.push_back({i + 2 - m, m});
            matched = fail[m - 1];
        }
    }
    return found;
}

std::vector<Occurrence> occurrences(const Word& pattern, const Word& text) {
    check_same_alphabet(pattern, text);
    return occurrences(pattern.letters(), text.letters());
}

std::optional<Occurrence> find_first(std::span<const Letter> pattern,
                                     std::span<const Letter> text, std::size_t from) {
    if (pattern.empty() || from > text.size()) return std::nullopt;
    auto first = text.begin() + static_cast<std::ptrdiff_t>(from);
    auto hit = std::search(first, text.end(),
                           std::boyer_moore_searcher(pattern.begin(), pattern.end()));
    if (hit == text.end()) return std::nullopt;
    return Occurrence{static_cast<std::size_t>(hit - text.begin()) + 1, pattern.size()};
}

bool is_factor(const Word& pattern, const Word& text) {
    check_same_alphabet(pattern, text);
    if (pattern.empty()) return true;
    return find_first(pattern.letters(), text.letters()).has_value();
}

Word slice(const Word& w, std::size_t i, std::size_t j) {
    const bool empty_slice = j + 1 == i && i >= 1 && i <= w.size() + 1;
    const bool proper = i >= 1 && i <= j && j <= w.size();
    if (!empty_slice && !proper) {
        throw DomainError("slice [" + std::to_string(i) + ", " + std::to_string(j) +
                          "] outside a word of length " + std::to_string(w.size()));
    }
    if (empty_slice) return Word(w.alphabet());
    return Word(w.alphabet(), std::vector<Letter>(w.begin() + static_cast<std::ptrdiff_t>(i - 1),
                                                  w.begin() + static_cast<std::ptrdiff_t>(j)));
}

Word strip_leading(const Word& w, Letter m) {
    if (w.empty() || w.front() != m) {
        throw DomainError("cannot cancel leading letter " + std::to_string(m) + " of '" +
                          w.to_text() + "'");
    }
    return Word(w.alphabet(), std::vector<Letter>(w.begin() + 1, w.end()));
}

Word drop_suffix(const Word& w, std::size_t count) {
    if (count > w.size()) {
        throw DomainError("cannot drop " + std::to_string(count) + " letters from a word of length " +
                          std::to_string(w.size()));
    }
    return Word(w.alphabet(),
                std::vector<Letter>(w.begin(), w.end() - static_cast<std::ptrdiff_t>(count)));
}

Word repeat(const Word& w, std::size_t times) {
    Word out(w.alphabet());
    out.reserve(w.size() * times);
    for (std::size_t t = 0; t < times; ++t) out += w;
    return out;
}

}  // namespace pdseq
