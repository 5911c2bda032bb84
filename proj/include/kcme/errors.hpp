#ifndef KCME_ERRORS_HPP
#define KCME_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kcme {

/// Malformed input text. line() is 1-based; 0 means "end of input".
class ParseError : public std::runtime_error {
   public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    [[nodiscard]] std::size_t line() const noexcept { return line_; }

   private:
    std::size_t line_;
};

/// Inputs that are well-typed but do not fit together (wrong lengths,
/// out-of-range cluster index, a vertex set that is not a cover, ...).
class StructuralError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// An oracle refused an instance above its size guard.
class SizeGuardError : public std::length_error {
   public:
    using std::length_error::length_error;
};

}  // namespace kcme

#endif  // KCME_ERRORS_HPP
