#pragma once

#include <stdexcept>
#include <string>

namespace tripv {

// Every failure raised by the library derives from Error so callers (the CLI
// in particular) can map them onto a single exit code.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define TRIPV_DEFINE_ERROR(Name)                                   \
    class Name : public Error {                                    \
    public:                                                        \
        explicit Name(const std::string& what) : Error(what) {}    \
    }

TRIPV_DEFINE_ERROR(DimensionMismatch);
TRIPV_DEFINE_ERROR(NotSquare);
TRIPV_DEFINE_ERROR(BadPrime);
TRIPV_DEFINE_ERROR(Singular);
TRIPV_DEFINE_ERROR(TooLarge);
TRIPV_DEFINE_ERROR(VertexOutOfRange);
TRIPV_DEFINE_ERROR(DegenerateTriangle);
TRIPV_DEFINE_ERROR(NotCubic);
TRIPV_DEFINE_ERROR(ZeroPolynomial);
TRIPV_DEFINE_ERROR(ZeroCandidate);
TRIPV_DEFINE_ERROR(NoBlackCircle);
TRIPV_DEFINE_ERROR(SizeOutOfRange);
TRIPV_DEFINE_ERROR(NotClosed);
TRIPV_DEFINE_ERROR(ParseError);
TRIPV_DEFINE_ERROR(SchemaMismatch);
TRIPV_DEFINE_ERROR(CorruptRecord);

#undef TRIPV_DEFINE_ERROR

}  // namespace tripv
