#pragma once

#include <stdexcept>
#include <string>

namespace parlearn {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define PARLEARN_DEFINE_ERROR(Name)                                            \
  struct Name : Error {                                                        \
    using Error::Error;                                                        \
  }

PARLEARN_DEFINE_ERROR(ArityMismatch);
PARLEARN_DEFINE_ERROR(InvalidGraph);
PARLEARN_DEFINE_ERROR(ParseError);
PARLEARN_DEFINE_ERROR(ValidationError);

// exact_linalg
PARLEARN_DEFINE_ERROR(DimensionMismatch);
PARLEARN_DEFINE_ERROR(Singular);
PARLEARN_DEFINE_ERROR(DegenerateBlocks);
PARLEARN_DEFINE_ERROR(DegenerateColumns);

// learner / teacher
PARLEARN_DEFINE_ERROR(DegenerateIdempotent);
PARLEARN_DEFINE_ERROR(PoolExhausted);
PARLEARN_DEFINE_ERROR(BoundExhausted);
PARLEARN_DEFINE_ERROR(IterationCapExceeded);
PARLEARN_DEFINE_ERROR(SamplingCapExceeded);

#undef PARLEARN_DEFINE_ERROR

}  // namespace parlearn
