#include "pslat/errors.hpp"

namespace pslat {

namespace {
std::string format_syntax(std::size_t offset, const std::vector<std::string>& expected) {
    std::string msg = "syntax error at byte " + std::to_string(offset) + ": expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
        if (i) msg += i + 1 == expected.size() ? " or " : ", ";
        msg += expected[i];
    }
    return msg;
}
}  // namespace

SyntaxError::SyntaxError(std::size_t offset_, std::vector<std::string> expected_)
    : std::runtime_error(format_syntax(offset_, expected_)),
      offset(offset_),
      expected(std::move(expected_)) {}

}  // namespace pslat
