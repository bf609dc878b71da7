#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pdseq {

/// Raised when an argument is outside an operation's domain
/// (letter out of range, bad slice bounds, k < 2, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A word would exceed the configured length cap.
class CapExceeded : public std::length_error {
public:
    CapExceeded(std::size_t requested, std::size_t cap)
        : std::length_error("length cap exceeded: requested " + std::to_string(requested) +
                            " letters, cap is " + std::to_string(cap)),
          requested_(requested),
          cap_(cap) {}

    std::size_t requested() const noexcept { return requested_; }
    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t requested_;
    std::size_t cap_;
};

/// A constructive identity produced a word that disagrees with the sequence.
/// Carries the 1-based position of the first disagreement (0 if unknown).
class FalsificationError : public std::runtime_error {
public:
    FalsificationError(const std::string& what, std::size_t position)
        : std::runtime_error(what), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace pdseq
