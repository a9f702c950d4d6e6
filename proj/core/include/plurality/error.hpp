#pragma once

#include <stdexcept>
#include <string>

namespace plurality {

/// Thrown for invalid domain input: bad construction arguments, malformed
/// documents, out-of-range ordinals, infeasible enumeration requests.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace plurality
