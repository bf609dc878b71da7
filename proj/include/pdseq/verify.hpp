#pragma once

#include <cstddef>
#include <vector>

#include "pdseq/gaps.hpp"
#include "pdseq/report.hpp"
#include "pdseq/word.hpp"

namespace pdseq {

struct VerifyOptions {
    Conventions conventions;
    bool parallel = true;
    std::size_t cap = kDefaultLengthCap;
};

/// Runs every check family at the given depth and returns one aggregated
/// report per family, sorted by check name. Checks that need k >= 3 come
/// back out of domain for k = 2, and the other way round for the binary
/// factorization. CapExceeded propagates.
std::vector<Report> verify_all(Alphabet alphabet, unsigned depth, const VerifyOptions& options = {});

/// Folds instance reports into one: the first failure wins, counts go into
/// the detail line.
Report aggregate(std::string check, std::vector<std::pair<std::string, std::int64_t>> params,
                 const std::vector<Report>& instances);

}  // namespace pdseq
