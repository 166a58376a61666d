#pragma once

#include <stdexcept>
#include <string>

namespace langev {

// Invalid scenario / ensemble configuration. The message names the offending
// field. CLI maps this to exit status 1.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace langev
