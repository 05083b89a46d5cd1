#pragma once

#include <stdexcept>
#include <string>

namespace nstor {

/// Rejected input: malformed text, out-of-range parameters, violated preconditions.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A configured resource cap was hit; the instance is too large for desk scale.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SyntaxError : public InputError {
public:
    SyntaxError(const std::string& what, std::size_t line, std::size_t column)
        : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line), column_(column) {}
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

class InhomogeneousGenerator : public InputError {
public:
    InhomogeneousGenerator(const std::string& what, std::size_t line)
        : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class VariableOutOfRange : public InputError {
public:
    using InputError::InputError;
};

class ZeroGenerator : public InputError {
public:
    ZeroGenerator(const std::string& what, std::size_t line)
        : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class DimensionMismatch : public InputError {
public:
    using InputError::InputError;
};

class NoSplittableGenerator : public InputError {
public:
    using InputError::InputError;
};

class NotAdmissible : public InputError {
public:
    using InputError::InputError;
};

class IndexOutOfRange : public InputError {
public:
    using InputError::InputError;
};

class WrongDimension : public InputError {
public:
    using InputError::InputError;
};

class LogOfSmallValue : public InputError {
public:
    using InputError::InputError;
};

class DegreeCapExceeded : public ResourceError {
public:
    using ResourceError::ResourceError;
};

class TooManyGenerators : public ResourceError {
public:
    using ResourceError::ResourceError;
};

class StabilizationCapExceeded : public ResourceError {
public:
    StabilizationCapExceeded(const std::string& what, long long previous, long long last)
        : ResourceError(what + " (last two values " + std::to_string(previous) + ", " + std::to_string(last) + ")"),
          previous_(previous), last_(last) {}
    long long previous() const { return previous_; }
    long long last() const { return last_; }

private:
    long long previous_;
    long long last_;
};

class ColumnBudgetExceeded : public ResourceError {
public:
    using ResourceError::ResourceError;
};

class MinorBudgetExceeded : public ResourceError {
public:
    using ResourceError::ResourceError;
};

class ScaleExceeded : public ResourceError {
public:
    using ResourceError::ResourceError;
};

class PrecisionLoss : public ResourceError {
public:
    using ResourceError::ResourceError;
};

}  // namespace nstor
