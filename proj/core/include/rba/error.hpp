#ifndef RBA_ERROR_HPP
#define RBA_ERROR_HPP

#include <stdexcept>
#include <string>

namespace rba {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Lexical or syntactic error, with a byte offset into the input.
struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t position)
        : Error(msg + " (at offset " + std::to_string(position) + ")"),
          pos(position) {}
    std::size_t pos;
};

}  // namespace rba

#endif
