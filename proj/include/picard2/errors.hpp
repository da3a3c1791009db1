#pragma once

#include <stdexcept>
#include <string>

namespace picard2 {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define PICARD2_ERROR(Name)                                              \
    struct Name : Error {                                                \
        explicit Name(const std::string& m = #Name) : Error(m) {}        \
    }

PICARD2_ERROR(RadicandMismatch);
PICARD2_ERROR(DivisionByZero);
PICARD2_ERROR(SquareD);
PICARD2_ERROR(ZeroForm);
PICARD2_ERROR(DegenerateForm);
PICARD2_ERROR(DegenerateCone);
PICARD2_ERROR(SingularMatrix);
PICARD2_ERROR(NonUnimodular);
PICARD2_ERROR(InfiniteInput);
PICARD2_ERROR(DependentRows);
PICARD2_ERROR(NoPositiveVector);
PICARD2_ERROR(SignatureMismatch);
PICARD2_ERROR(NonIntegralCoefficients);
PICARD2_ERROR(NotCalabiYau);
PICARD2_ERROR(WrongDegree);
PICARD2_ERROR(WrongDimension);
PICARD2_ERROR(OverlapDetected);
PICARD2_ERROR(NoHyperbolicElement);
PICARD2_ERROR(NotInvolutionPair);
PICARD2_ERROR(NoRationalRay);
PICARD2_ERROR(PreconditionViolated);
PICARD2_ERROR(SchemaError);
PICARD2_ERROR(CheckFailed);

#undef PICARD2_ERROR

}  // namespace picard2
