#pragma once

#include <stdexcept>
#include <string>

namespace psyq {

// Error with source position for the text formats (algebra files, diagram
// codes, endomorphism lists). Lines and columns are 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, int col, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ", col " +
                             std::to_string(col) + ": " + what),
          line_(line), col_(col) {}

    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_;
    int col_;
};

} // namespace psyq
