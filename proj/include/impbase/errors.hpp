#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace impbase {

// Operations that enumerate all 2^n subsets refuse universes larger than
// this unless the caller raises the limit explicitly.
inline constexpr std::size_t kEnumerationCap = 20;

// Default limit on the number of implications accepted by the exhaustive
// ordering search.
inline constexpr std::size_t kOrderingSearchCap = 10;

// An exhaustive operation was asked to enumerate too large a universe.
class CapExceededError : public std::runtime_error {
public:
    CapExceededError(std::size_t n, std::size_t cap)
        : std::runtime_error("universe of size " + std::to_string(n) +
                             " exceeds the enumeration cap of " + std::to_string(cap)),
          universe_size(n), cap(cap) {}

    std::size_t universe_size;
    std::size_t cap;
};

// A construction that needs a reduced closure system got an unreduced one.
class NotReducedError : public std::runtime_error {
public:
    explicit NotReducedError(const std::string& what) : std::runtime_error(what) {}
};

// The D-relation of the system contains a cycle; carries one witness cycle.
class DCycleError : public std::runtime_error {
public:
    explicit DCycleError(std::vector<int> witness,
                         const std::string& what = "closure system has a D-cycle")
        : std::runtime_error(what), cycle(std::move(witness)) {}

    std::vector<int> cycle;
};

// The ordering search was given more implications than its configured cap.
class SearchCapError : public std::runtime_error {
public:
    SearchCapError(std::size_t m, std::size_t cap)
        : std::runtime_error("basis of " + std::to_string(m) +
                             " implications exceeds the ordering search cap of " +
                             std::to_string(cap)) {}
};

// Malformed .imp/.fam input; the message names the line and token.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}

    std::size_t line;
};

} // namespace impbase
