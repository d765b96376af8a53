#pragma once

#include <stdexcept>
#include <string>

namespace tropext {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input: bad JSON, unknown fields, wrong shapes. CLI exit code 2.
struct SchemaError : Error {
    explicit SchemaError(const std::string& msg) : Error(msg) {}
};

// A mathematical precondition was violated. CLI exit code 3.
struct MathError : Error {
    explicit MathError(const std::string& msg) : Error(msg) {}
};

struct DimensionMismatch : MathError {
    explicit DimensionMismatch(const std::string& msg) : MathError(msg) {}
};

struct DivisionByZero : MathError {
    explicit DivisionByZero(const std::string& msg) : MathError(msg) {}
};

// pow(zero, 0) has no sanctioned value; refusing beats inventing one.
struct UndefinedPower : MathError {
    explicit UndefinedPower(const std::string& msg) : MathError(msg) {}
};

struct NonInjectiveEmbedding : MathError {
    explicit NonInjectiveEmbedding(const std::string& msg) : MathError(msg) {}
};

struct NonInjectiveWeights : MathError {
    explicit NonInjectiveWeights(const std::string& msg) : MathError(msg) {}
};

struct OrderIncompatible : MathError {
    explicit OrderIncompatible(const std::string& msg) : MathError(msg) {}
};

struct ZeroGenerator : MathError {
    explicit ZeroGenerator(const std::string& msg) : MathError(msg) {}
};

struct NotSelective : MathError {
    explicit NotSelective(const std::string& msg) : MathError(msg) {}
};

struct InfiniteUnitIndex : MathError {
    explicit InfiniteUnitIndex(const std::string& msg) : MathError(msg) {}
};

struct BaseNotZmax : MathError {
    explicit BaseNotZmax(const std::string& msg) : MathError(msg) {}
};

struct NotASubextension : MathError {
    explicit NotASubextension(const std::string& msg) : MathError(msg) {}
};

struct UnsupportedQuotientShape : MathError {
    explicit UnsupportedQuotientShape(const std::string& msg) : MathError(msg) {}
};

} // namespace tropext
