#pragma once

#include <stdexcept>
#include <string>

namespace firefight {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ConfigInvalid : public Error {
public:
    using Error::Error;
};

class BudgetTooSmall : public Error {
public:
    using Error::Error;
};

class StartTooClose : public Error {
public:
    using Error::Error;
};

class SearchSpaceTooLarge : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

/// Genome text that does not follow the file grammar; carries the 1-based line.
class ParseError : public Error {
public:
    ParseError(int line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

}  // namespace firefight
