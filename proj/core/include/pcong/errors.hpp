#pragma once

#include <stdexcept>

namespace pcong {

/// Default cap on partition weights, symmetric-function grades and series orders.
inline constexpr unsigned kDefaultWeightBound = 40;

/// A requested weight, grade or order exceeds the configured bound.
class bound_exceeded : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// An argument violates an operation's precondition.
class precondition_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Values from different coefficient rings (or an ideal of another ring) were combined.
class ring_mismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Trace data handed to multiplicity recovery is not a sum of Teichmüller characters.
class inconsistent_traces : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The elementary and deep verdicts diverged under a divided-power ideal.
class theorem_violation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace pcong
