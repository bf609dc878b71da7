#include "pdseq/report.hpp"

namespace pdseq {

std::string_view to_string(Status s) noexcept {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::OutOfDomain: return "out-of-domain";
    }
    return "unknown";
}

std::string Report::params_text() const {
    std::string out;
    for (const auto& [name, value] : params) {
        if (!out.empty()) out.push_back(' ');
        out += name + "=" + std::to_string(value);
    }
    return out;
}

Report compare_words(std::string check, std::vector<std::pair<std::string, std::int64_t>> params,
                     const Word& expected, const Word& actual) {
    Report r;
    r.check = std::move(check);
    r.params = std::move(params);
    if (expected == actual) return r;
    r.status = Status::Fail;
    std::size_t common = lcp_length(expected.letters(), actual.letters());
    r.mismatch_position = common + 1;
    r.counterexample = actual.to_text();
    r.detail = "expected length " + std::to_string(expected.size()) + ", got length " +
               std::to_string(actual.size()) + "; first difference at position " +
               std::to_string(common + 1);
    return r;
}

Report out_of_domain(std::string check, std::vector<std::pair<std::string, std::int64_t>> params,
                     std::string why) {
    Report r;
    r.check = std::move(check);
    r.params = std::move(params);
    r.status = Status::OutOfDomain;
    r.detail = std::move(why);
    return r;
}

}  // namespace pdseq
