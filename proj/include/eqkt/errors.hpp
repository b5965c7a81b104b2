#pragma once

#include <stdexcept>
#include <string>

namespace eqkt {

/// Base class for every domain error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define EQKT_DECLARE_ERROR(Name)     \
  class Name : public Error {        \
   public:                           \
    using Error::Error;              \
  }

EQKT_DECLARE_ERROR(ModulusMismatch);
EQKT_DECLARE_ERROR(NotASubgroup);
EQKT_DECLARE_ERROR(IllFormedMap);
EQKT_DECLARE_ERROR(IllFormedHom);
EQKT_DECLARE_ERROR(CharacterDomainMismatch);
EQKT_DECLARE_ERROR(TargetMismatch);
EQKT_DECLARE_ERROR(ConstantMismatch);
EQKT_DECLARE_ERROR(UnsupportedParameter);
EQKT_DECLARE_ERROR(InvalidPair);

#undef EQKT_DECLARE_ERROR

}  // namespace eqkt
