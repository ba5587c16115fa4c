#pragma once

#include <stdexcept>
#include <string>

namespace eps {

// Every failure carries a short machine-readable code ("division-by-zero",
// "unsupported-wild-point", ...) next to the human message.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string &msg);
    const std::string &code() const noexcept { return code_; }

private:
    std::string code_;
};

[[noreturn]] void fail(const std::string &code, const std::string &msg);

} // namespace eps
