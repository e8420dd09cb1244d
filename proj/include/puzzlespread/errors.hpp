#pragma once

#include <stdexcept>
#include <string>

namespace puzzlespread {

/// File could not be opened or written.
class IoError : public std::runtime_error {
  public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed CSV input; `line` is 1-based (the header is line 1).
class CsvParseError : public std::runtime_error {
  public:
    CsvParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const { return line_; }

  private:
    int line_;
};

}  // namespace puzzlespread
