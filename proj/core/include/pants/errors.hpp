#pragma once

#include <stdexcept>
#include <string>

namespace pants {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// exact linear algebra
struct NonSquareError : Error { using Error::Error; };
struct SingularError : Error { using Error::Error; };
struct DimensionError : Error { using Error::Error; };
struct DivisionByZeroError : Error { using Error::Error; };

// geometry
struct DegeneratePointError : Error { using Error::Error; };
struct NotFiberDirectionError : Error { using Error::Error; };
struct OutsideDomainError : Error { using Error::Error; };
struct NoRootError : Error { using Error::Error; };
struct AtCenterError : Error { using Error::Error; };
struct RootFindError : Error { using Error::Error; };
struct DegenerateCrossingError : Error { using Error::Error; };

// categories
struct ShapeMismatchError : Error { using Error::Error; };
struct InvalidRepError : Error { using Error::Error; };
struct BadAutPairError : Error { using Error::Error; };

// file input; `where` is a path into the offending document
struct ParseError : Error {
    ParseError(const std::string& where, const std::string& what)
        : Error(where + ": " + what), where(where) {}
    std::string where;
};

}  // namespace pants
