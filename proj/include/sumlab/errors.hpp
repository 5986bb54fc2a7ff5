#pragma once

#include <stdexcept>
#include <string>

namespace sumlab {

// Thrown when a request exceeds a desk-scale resource guard (as opposed to a
// malformed argument, which raises std::domain_error / std::invalid_argument).
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sumlab
