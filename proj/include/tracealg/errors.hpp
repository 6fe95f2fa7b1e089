#pragma once

#include <stdexcept>
#include <string>

namespace tracealg {

// Exit-code taxonomy shared by the CLI and the verification harness:
//   0 success, 1 mathematical counterexample, 2 parse error,
//   3 resource cap exceeded, 4 engine disagreement.
// Mathematical counterexamples are report verdicts, not exceptions.

struct ParseError : std::runtime_error {
    int line = 0;
    int column = 0;
    ParseError(const std::string& msg, int line_, int column_)
        : std::runtime_error(msg), line(line_), column(column_) {}
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Degree / dimension / iteration budget exhausted.
struct CapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two independent computation paths produced different answers.
struct EngineError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace tracealg
