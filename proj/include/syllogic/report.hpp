#pragma once

#include <string>
#include <vector>

#include "syllogic/io.hpp"
#include "syllogic/opposition.hpp"

namespace syllogic {

inline constexpr const char* kToolVersion = "0.1.0";

struct PaperBounds {
    unsigned modelBound = 3;
    unsigned atomCount = 2;
};

struct Expectation {
    std::string id;
    std::string description;
    std::string expected;
    std::string observed;
    std::string status;  // pass | fail | inconclusive
};

struct PaperReport {
    PaperBounds bounds;
    Json sections;
    std::vector<Expectation> expectations;
    bool pass = false;

    Json toJson() const;
    /// Plain-text summary table, one row per expectation.
    std::string summary() const;
};

/// Runs every check of the verification suite. Throws BoundError when
/// modelBound is outside 1..4 or atomCount outside 1..3.
PaperReport runVerifyPaper(const PaperBounds& bounds);

/// DOT digraph with the four corners and six labelled edges. Failing edges are
/// drawn red and annotated with the id of the witness model listed in a comment.
std::string emitDiagram(const SquareReport& square);

}  // namespace syllogic
