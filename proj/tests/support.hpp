#pragma once

#include <fstream>
#include <map>
#include <random>
#include <string>

#include "pdseq/word.hpp"

namespace testing {

inline pdseq::Word word(unsigned k, std::string_view text) {
    return pdseq::Word::from_text(text, pdseq::Alphabet(k));
}

inline std::mt19937_64& rng() {
    static std::mt19937_64 engine(0x5eed'2026);
    return engine;
}

inline std::size_t uniform(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng());
}

inline pdseq::Word random_word(unsigned k, std::size_t max_length) {
    pdseq::Word w{pdseq::Alphabet(k)};
    const std::size_t n = uniform(0, max_length);
    for (std::size_t i = 0; i < n; ++i) w.push_back(static_cast<pdseq::Letter>(uniform(0, k - 1)));
    return w;
}

/// A random factor of `host` with length in [lo, hi].
inline pdseq::Word random_factor(const pdseq::Word& host, std::size_t lo, std::size_t hi) {
    const std::size_t len = uniform(lo, std::min(hi, host.size()));
    const std::size_t start = uniform(1, host.size() - len + 1);
    return len == 0 ? pdseq::Word(host.alphabet()) : pdseq::slice(host, start, start + len - 1);
}

/// "check<TAB>params" -> expected, from the frozen oracle output.
inline const std::map<std::string, std::string>& golden() {
    static const std::map<std::string, std::string> table = [] {
        std::map<std::string, std::string> t;
        std::ifstream in(std::string(PDSEQ_GOLDEN_DIR) + "/oracle.tsv");
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            const auto a = line.find('\t');
            const auto b = line.find('\t', a + 1);
            t[line.substr(0, b)] = line.substr(b + 1);
        }
        return t;
    }();
    return table;
}

inline std::string golden(const std::string& check, const std::string& params) {
    auto it = golden().find(check + "\t" + params);
    return it == golden().end() ? std::string("<missing>") : it->second;
}

}  // namespace testing
