#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fuzzymin {

// Caller misuse: bad operands, unknown names, violated preconditions.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public UsageError {
public:
    ParseError(const std::string &message, std::size_t position)
        : UsageError(message + " at offset " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// An expression uses a constructor that the active feature set does not enable.
class FeatureError : public UsageError {
public:
    FeatureError(const std::string &feature, const std::string &construct)
        : UsageError("feature '" + feature + "' is required for " + construct),
          feature_(feature) {}

    const std::string &feature() const { return feature_; }

private:
    std::string feature_;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace fuzzymin
