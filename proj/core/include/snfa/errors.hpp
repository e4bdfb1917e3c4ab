#ifndef SNFA_ERRORS_HPP
#define SNFA_ERRORS_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace snfa {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A pattern of length zero was handed to the compiler or an oracle.
class EmptyPatternError : public Error {
public:
    EmptyPatternError() : Error("pattern must be non-empty") {}
};

/// An operation that needs at least one input symbol got an empty input.
class EmptyInputError : public Error {
public:
    EmptyInputError() : Error("input must be non-empty") {}
};

/// A scoring model violated its invariants (gap > 0, or mismatch > match).
class ModelError : public Error {
public:
    explicit ModelError(const std::string& what) : Error(what) {}
};

/// A placement request violated one of the array constraints.
class PlacementError : public Error {
public:
    enum class Kind {
        CapacityExceeded,
        FanoutExceeded,
        WireBudgetExceeded,
    };

    PlacementError(Kind kind, std::string what, std::int64_t observed, std::int64_t limit)
        : Error(std::move(what)), kind_(kind), observed_(observed), limit_(limit) {}

    Kind kind() const { return kind_; }
    /// The measured value that broke the constraint (states used, out-degree, or wire count).
    std::int64_t observed() const { return observed_; }
    std::int64_t limit() const { return limit_; }

    /// For FanoutExceeded: which automaton held the offending fan-out source.
    std::optional<std::uint32_t> automaton_index() const { return automaton_index_; }
    /// For FanoutExceeded: the offending state id, or nullopt when the start
    /// source itself exceeded the limit.
    std::optional<std::uint32_t> state_id() const { return state_id_; }
    bool names_start_source() const { return automaton_index_.has_value() && !state_id_.has_value(); }

    void set_fanout_source(std::uint32_t automaton_index, std::optional<std::uint32_t> state_id) {
        automaton_index_ = automaton_index;
        state_id_ = state_id;
    }

private:
    Kind kind_;
    std::int64_t observed_;
    std::int64_t limit_;
    std::optional<std::uint32_t> automaton_index_;
    std::optional<std::uint32_t> state_id_;
};

/// FASTA input that could not be parsed.
class FastaError : public Error {
public:
    enum class Kind { Malformed, EmptyFile };

    FastaError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

/// An automaton file that could not be parsed or failed validation.
class AutomatonFileError : public Error {
public:
    explicit AutomatonFileError(const std::string& what) : Error(what) {}
};

/// The exhaustive path oracle was asked for an instance beyond its guard rails.
class InstanceTooLargeError : public Error {
public:
    explicit InstanceTooLargeError(const std::string& what) : Error(what) {}
};

}  // namespace snfa

#endif  // SNFA_ERRORS_HPP
