#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace crm {

// Bad user input: malformed text, wrong shape, dimension mismatch.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public InputError {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : InputError(msg + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const noexcept { return pos_; }

private:
    std::size_t pos_;
};

class NotRealError : public InputError {
public:
    using InputError::InputError;
};

class DimensionError : public InputError {
public:
    using InputError::InputError;
};

// A proof step met a configuration that pseudoconvexity rules out.
class PscContradiction : public std::runtime_error {
public:
    PscContradiction(const std::string& msg, std::string witness)
        : std::runtime_error(msg), witness_(std::move(witness)) {}
    const std::string& witness() const noexcept { return witness_; }

private:
    std::string witness_;
};

// Weight-lowering signal: the restriction needed by a step vanishes identically.
class DegenerateSlot : public std::runtime_error {
public:
    DegenerateSlot(const std::string& msg, int slot) : std::runtime_error(msg), slot_(slot) {}
    int slot() const noexcept { return slot_; }

private:
    int slot_;
};

// A construction step could not be completed and no contradiction was asserted.
class StepFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace crm
