#pragma once

// Brute-force ground truth. Nothing here calls the optimized paths in
// word.hpp (substitute, letter_at, occurrences); it works from the
// definitions directly and is allowed to be slow.

#include <cstddef>
#include <vector>

#include "pdseq/gaps.hpp"
#include "pdseq/report.hpp"
#include "pdseq/word.hpp"

namespace pdseq::oracle {

/// First `length` letters of P_k by letterwise substitution from "0".
Word naive_prefix(Alphabet alphabet, std::size_t length, std::size_t cap = kDefaultLengthCap);

/// 1-based starts of every occurrence, by comparing at each offset.
std::vector<std::size_t> naive_occurrences(const Word& pattern, const Word& text);

/// Gaps between consecutive occurrences, classified straight from the
/// definition (i + n vs j with 0-based offsets i, j).
FactorGaps naive_gaps(const Word& pattern, const Word& text);

/// Letterwise P_k mod (k-1) against P_2. Out of domain for k = 2. A failure
/// is flagged as documented.
Report congruence_check(Alphabet alphabet, std::size_t length);

}  // namespace pdseq::oracle
