#ifndef GHCT_ERRORS_HPP
#define GHCT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ghct {

// Raised when a brute-force routine is asked for an instance above its
// configured size limit.
class SizeCapError : public std::runtime_error {
public:
    explicit SizeCapError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input file; line is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line)
        : std::runtime_error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// An internal invariant failed; indicates a bug, not bad input.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace ghct

#endif
