#pragma once

#include <stdexcept>
#include <string>

namespace lexchoice {

// Base for all semantic errors raised by the library. Parsing problems get
// their own type because the CLI maps them to a different exit code.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

struct SpaceMismatch : Error {
    explicit SpaceMismatch(const std::string& what) : Error(what) {}
};

struct LengthMismatch : Error {
    explicit LengthMismatch(const std::string& what) : Error(what) {}
};

struct VectorOutsideSubspace : Error {
    explicit VectorOutsideSubspace(const std::string& what) : Error(what) {}
};

struct NonpositiveScale : Error {
    explicit NonpositiveScale(const std::string& what) : Error(what) {}
};

struct Incoherent : Error {
    explicit Incoherent(const std::string& what) : Error(what) {}
};

struct SavageNullPresent : Error {
    explicit SavageNullPresent(const std::string& what) : Error(what) {}
};

struct NotBinary : Error {
    explicit NotBinary(const std::string& what) : Error(what) {}
};

struct ExtensionInfeasible : Error {
    explicit ExtensionInfeasible(const std::string& what) : Error(what) {}
};

struct NotInImage : Error {
    explicit NotInImage(const std::string& what) : Error(what) {}
};

struct EmptyFamily : Error {
    explicit EmptyFamily(const std::string& what) : Error(what) {}
};

struct UniverseTooSmall : Error {
    explicit UniverseTooSmall(const std::string& what) : Error(what) {}
};

// Input file problems. `where` is "file:line" when the location is known.
struct ParseError : Error {
    std::string where;
    ParseError(std::string where_, const std::string& what)
        : Error(where_.empty() ? what : where_ + ": " + what), where(std::move(where_)) {}
};

}  // namespace lexchoice
