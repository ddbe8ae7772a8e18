#pragma once

#include <stdexcept>

namespace groupdet {

// Base class for every error raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotAGroup : Error { using Error::Error; };
struct UnknownCatalogKey : Error { using Error::Error; };
struct NotNormal : Error { using Error::Error; };
struct NotAbelian : Error { using Error::Error; };
struct QuotientNotAbelian : Error { using Error::Error; };
struct NotASubgroupChain : Error { using Error::Error; };
struct InvalidTransversal : Error { using Error::Error; };
struct NotIndexTwo : Error { using Error::Error; };

struct DivisionByZero : Error { using Error::Error; };
struct ZeroPolynomial : Error { using Error::Error; };

struct GroupMismatch : Error { using Error::Error; };
struct SizeMismatch : Error { using Error::Error; };
struct NotSupportedOnSubgroup : Error { using Error::Error; };

struct SingularElement : Error { using Error::Error; };
struct SingularMatrix : Error { using Error::Error; };
struct SymbolicCoefficientsUnsupported : Error { using Error::Error; };

struct OrderCapExceeded : Error { using Error::Error; };
struct FixtureMissing : Error { using Error::Error; };
// Two determinant strategies disagreed in cross-check mode.
struct StrategyMismatch : Error { using Error::Error; };

}  // namespace groupdet
