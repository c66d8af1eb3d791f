#pragma once

#include <stdexcept>
#include <string>

namespace stringc {

// Contract violation raised by every public operation (bad input, bad parameters).
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace stringc
