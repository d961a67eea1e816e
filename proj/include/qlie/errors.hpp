#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qlie {

// Division by an exactly-zero scalar (or inversion of zero).
class division_by_zero : public std::runtime_error {
public:
    division_by_zero() : std::runtime_error("division by zero") {}
    explicit division_by_zero(const std::string& what) : std::runtime_error(what) {}
};

// A scalar with a pole at q = 1; its classical limit / h-series does not exist.
class pole_error : public std::runtime_error {
public:
    explicit pole_error(const std::string& what) : std::runtime_error(what) {}
};

// Syntax or symbol error in the expression front end. Carries the byte
// offset of the offending token in the input string.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
          offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// Matrix operands of incompatible dimensions.
class dimension_mismatch : public std::runtime_error {
public:
    explicit dimension_mismatch(const std::string& what) : std::runtime_error(what) {}
};

// Embedding data violating its contract (twist coefficients not summing to 1,
// linearly dependent images).
class invalid_embedding : public std::runtime_error {
public:
    explicit invalid_embedding(const std::string& what) : std::runtime_error(what) {}
};

} // namespace qlie
