#ifndef LIALG_ERRORS_HPP
#define LIALG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lialg {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// exact-arith
struct FieldMismatch : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct RationalLiteralInPrimeField : Error { using Error::Error; };

// linear-spaces
struct DimensionMismatch : Error { using Error::Error; };

// lie-core
struct DuplicateBracket : Error { using Error::Error; };
struct SelfBracketNonzero : Error { using Error::Error; };
struct JacobiViolation : Error {
    int i, j, k;
    JacobiViolation(const std::string& msg, int i_, int j_, int k_)
        : Error(msg), i(i_), j(j_), k(k_) {}
};
struct UnknownLabel : Error { using Error::Error; };
struct NotClosed : Error { using Error::Error; };
struct NotAnIdeal : Error { using Error::Error; };
struct NotASubalgebra : Error { using Error::Error; };
struct NonCommutingAction : Error { using Error::Error; };
struct NonSemisimpleAction : Error { using Error::Error; };
struct NotNilpotent : Error { using Error::Error; };
struct CharacteristicObstruction : Error { using Error::Error; };
struct NotInvariant : Error { using Error::Error; };
struct DecompositionFailure : Error { using Error::Error; };
struct NonSolvable : Error { using Error::Error; };

// subspace-lattice
struct InfiniteFieldEnumeration : Error { using Error::Error; };
struct BudgetExceeded : Error { using Error::Error; };

// frattini-theory / classification
struct TheoremViolation : Error { using Error::Error; };

// workbench
struct UnknownCatalogName : Error { using Error::Error; };
struct BadParameters : Error { using Error::Error; };
struct Unsupported : Error { using Error::Error; };

} // namespace lialg

#endif
