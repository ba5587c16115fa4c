#include "epsilon/error.hpp"

namespace eps {

Error::Error(std::string code, const std::string &msg)
    : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}

void fail(const std::string &code, const std::string &msg) { throw Error(code, msg); }

} // namespace eps
