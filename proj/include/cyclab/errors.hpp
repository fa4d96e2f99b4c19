#ifndef CYCLAB_ERRORS_HPP
#define CYCLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cyclab {

// Malformed digraph/report text. Carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Exact search refused: instance exceeds the oracle's vertex cap.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A lemma's degree precondition does not hold; the constructive routine
// makes no promise and the caller may fall back to the oracle.
class ConditionNotMet : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A construction failed on an instance that satisfies the lemma's
// hypothesis. This would contradict a proved statement, so it is a
// logic_error and is never silently swallowed.
class LemmaViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace cyclab

#endif
