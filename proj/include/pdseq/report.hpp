#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pdseq/word.hpp"

namespace pdseq {

enum class Status { Pass, Fail, OutOfDomain };

std::string_view to_string(Status s) noexcept;

/// Outcome of one mechanical check. A failing report always carries either
/// a 1-based mismatch position or a counterexample word.
struct Report {
    std::string check;
    std::vector<std::pair<std::string, std::int64_t>> params;
    Status status = Status::Pass;
    std::optional<std::size_t> mismatch_position;
    std::optional<std::string> counterexample;
    std::string detail;
    /// The failure reproduces a known discrepancy in the stated identity.
    bool documented = false;
    std::chrono::duration<double> elapsed{0};

    bool passed() const noexcept { return status == Status::Pass; }
    bool failed() const noexcept { return status == Status::Fail; }
    /// A failure that is not on the documented list.
    bool unexpected_failure() const noexcept { return failed() && !documented; }

    /// "k=3 n=4"
    std::string params_text() const;
};

/// Builds a pass/fail report comparing two words letter by letter.
Report compare_words(std::string check, std::vector<std::pair<std::string, std::int64_t>> params,
                     const Word& expected, const Word& actual);

Report out_of_domain(std::string check, std::vector<std::pair<std::string, std::int64_t>> params,
                     std::string why);

/// Runs `body` (which returns a Report) and stamps its wall-clock time.
template <class F>
Report timed(F&& body) {
    auto t0 = std::chrono::steady_clock::now();
    Report r = std::forward<F>(body)();
    r.elapsed = std::chrono::steady_clock::now() - t0;
    return r;
}

}  // namespace pdseq
