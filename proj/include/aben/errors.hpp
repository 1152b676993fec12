#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace aben {

// Root of the library's error hierarchy. Everything thrown on a domain
// error path derives from this; std::logic_error is reserved for API misuse.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// ---- parameter / curve layer ----

class ParameterSearchExhausted : public Error {
public:
    explicit ParameterSearchExhausted(const std::string& msg) : Error(msg) {}
};

class HashToPointFailure : public Error {
public:
    explicit HashToPointFailure(const std::string& msg) : Error(msg) {}
};

class NotInSubgroup : public Error {
public:
    explicit NotInSubgroup(const std::string& msg) : Error(msg) {}
};

// ---- policy language / secret sharing ----

class SyntaxError : public Error {
public:
    SyntaxError(std::size_t position, std::vector<std::string> expected,
                const std::string& detail);
    std::size_t position() const { return position_; }
    const std::vector<std::string>& expected() const { return expected_; }

private:
    std::size_t position_;
    std::vector<std::string> expected_;
};

class ThresholdOutOfRange : public Error {
public:
    explicit ThresholdOutOfRange(const std::string& msg) : Error(msg) {}
};

class DuplicateEvaluationPoint : public Error {
public:
    explicit DuplicateEvaluationPoint(const std::string& msg) : Error(msg) {}
};

class NotSatisfied : public Error {
public:
    explicit NotSatisfied(const std::string& msg) : Error(msg) {}
};

// ---- schemes ----

class PolicyNotSatisfied : public Error {
public:
    explicit PolicyNotSatisfied(const std::string& msg) : Error(msg) {}
};

class EmptyAttributeSet : public Error {
public:
    explicit EmptyAttributeSet(const std::string& msg) : Error(msg) {}
};

class DuplicateUniverseAttribute : public Error {
public:
    explicit DuplicateUniverseAttribute(const std::string& msg) : Error(msg) {}
};

class UnknownAttribute : public Error {
public:
    explicit UnknownAttribute(const std::string& msg) : Error(msg) {}
};

// ---- envelope / serialization ----

class AuthenticationFailure : public Error {
public:
    explicit AuthenticationFailure(const std::string& msg) : Error(msg) {}
};

// Parse failure of an envelope or ciphertext blob; carries the byte offset
// at which decoding stopped.
class MalformedEnvelope : public Error {
public:
    MalformedEnvelope(std::size_t offset, const std::string& reason);
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// Parse failure of a key or parameter blob.
class MalformedKey : public Error {
public:
    MalformedKey(std::size_t offset, const std::string& reason);
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// ---- benchmark harness ----

class EmptyCell : public Error {
public:
    explicit EmptyCell(const std::string& msg) : Error(msg) {}
};

class PlanInfeasible : public Error {
public:
    explicit PlanInfeasible(const std::string& msg) : Error(msg) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& msg) : Error(msg) {}
};

}  // namespace aben
