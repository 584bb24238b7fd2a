#pragma once

#include <stdexcept>
#include <string>

namespace editstat {

// Anything wrong with user-supplied data: malformed corpus files, invalid
// UTF-8, empty inputs, degenerate statistics. The CLI maps this to exit 2.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace editstat
