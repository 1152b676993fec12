#include "aben/errors.hpp"

#include <sstream>

namespace aben {

namespace {

std::string syntax_message(std::size_t position,
                           const std::vector<std::string>& expected,
                           const std::string& detail) {
    std::ostringstream os;
    os << "syntax error at position " << position << ": " << detail;
    if (!expected.empty()) {
        os << " (expected ";
        for (std::size_t i = 0; i < expected.size(); ++i) {
            if (i) os << (i + 1 == expected.size() ? " or " : ", ");
            os << expected[i];
        }
        os << ")";
    }
    return os.str();
}

std::string offset_message(const char* what, std::size_t offset,
                           const std::string& reason) {
    std::ostringstream os;
    os << what << " at byte " << offset << ": " << reason;
    return os.str();
}

}  // namespace

SyntaxError::SyntaxError(std::size_t position, std::vector<std::string> expected,
                         const std::string& detail)
    : Error(syntax_message(position, expected, detail)),
      position_(position),
      expected_(std::move(expected)) {}

MalformedEnvelope::MalformedEnvelope(std::size_t offset, const std::string& reason)
    : Error(offset_message("malformed envelope", offset, reason)), offset_(offset) {}

MalformedKey::MalformedKey(std::size_t offset, const std::string& reason)
    : Error(offset_message("malformed key", offset, reason)), offset_(offset) {}

}  // namespace aben
