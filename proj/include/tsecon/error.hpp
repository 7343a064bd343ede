#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace tsecon {

/// Base class for every error raised by the library. `kind()` is the stable
/// machine-readable name used in structured error output.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}

    [[nodiscard]] const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define TSECON_DEFINE_ERROR(Name)                                              \
    class Name : public Error {                                                \
    public:                                                                    \
        explicit Name(const std::string& message) : Error(#Name, message) {}  \
    }

TSECON_DEFINE_ERROR(EmptyInput);
TSECON_DEFINE_ERROR(LengthError);
TSECON_DEFINE_ERROR(CollinearError);
TSECON_DEFINE_ERROR(DofError);
TSECON_DEFINE_ERROR(DegenerateResiduals);
TSECON_DEFINE_ERROR(DegenerateFit);
TSECON_DEFINE_ERROR(DegenerateInput);
TSECON_DEFINE_ERROR(RangeError);
TSECON_DEFINE_ERROR(SegmentError);
TSECON_DEFINE_ERROR(AlignmentError);
TSECON_DEFINE_ERROR(MissingFixture);

#undef TSECON_DEFINE_ERROR

/// A year is missing from an otherwise consecutive sequence.
class GapError : public Error {
public:
    explicit GapError(int year)
        : Error("GapError", "missing year " + std::to_string(year)), year_(year) {}
    [[nodiscard]] int year() const noexcept { return year_; }

private:
    int year_;
};

/// A CSV line could not be parsed. Lines are 1-based and count the header.
class ParseError : public Error {
public:
    ParseError(int line, const std::string& what)
        : Error("ParseError", "line " + std::to_string(line) + ": " + what), line_(line) {}
    [[nodiscard]] int line() const noexcept { return line_; }

private:
    int line_;
};

class DivideByZero : public Error {
public:
    explicit DivideByZero(int year)
        : Error("DivideByZero", "zero denominator at year " + std::to_string(year)), year_(year) {}
    [[nodiscard]] int year() const noexcept { return year_; }

private:
    int year_;
};

}  // namespace tsecon
