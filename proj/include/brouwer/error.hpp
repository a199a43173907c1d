#pragma once
#include <stdexcept>
#include <string>

namespace brouwer {

// every precondition violation in the library raises this
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace brouwer
