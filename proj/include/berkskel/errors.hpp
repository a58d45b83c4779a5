#ifndef BERKSKEL_ERRORS_HPP
#define BERKSKEL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace berkskel {

/// Precondition on an operation's arguments does not hold.
class DomainError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// The input is well formed but outside what the library handles
/// (non-maximal blow-up centers, forms with poles in KS computations).
class UnsupportedError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Malformed model / form / trace document.
class ParseError : public std::runtime_error
{
public:
    ParseError(std::string location, const std::string& message)
        : std::runtime_error(location + ": " + message), location_(std::move(location))
    {
    }

    const std::string& location() const noexcept { return location_; }

private:
    std::string location_;
};

}  // namespace berkskel

#endif
