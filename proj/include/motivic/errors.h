#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace motivic {

class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/* A monomial or name does not belong to the presentation it is used with. */
class PresentationMismatch : public Error
{
public:
    using Error::Error;
};

/* Ill-formed differential data, e.g. an image of the wrong degree. */
class SpecError : public Error
{
public:
    using Error::Error;
};

/* Query outside the ingested or enumerated range. Distinct from a zero answer. */
class RangeError : public Error
{
public:
    using Error::Error;
};

class ParseError : public Error
{
public:
    ParseError(int line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line)
    {
    }
    int line() const { return line_; }

private:
    int line_;
};

class ValidationError : public Error
{
public:
    explicit ValidationError(std::vector<std::string> violations);
    const std::vector<std::string>& violations() const { return violations_; }

private:
    std::vector<std::string> violations_;
};

}  // namespace motivic
