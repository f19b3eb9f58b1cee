#pragma once

#include <stdexcept>
#include <string>

namespace artin {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define ARTIN_DECLARE_ERROR(Name)                 \
  class Name : public Error {                     \
   public:                                        \
    explicit Name(const std::string& what_arg)    \
        : Error(#Name ": " + what_arg) {}         \
  }

ARTIN_DECLARE_ERROR(ParseError);
ARTIN_DECLARE_ERROR(NonSphericalGraph);
ARTIN_DECLARE_ERROR(UnsupportedLabel);
ARTIN_DECLARE_ERROR(DisconnectedGraph);
ARTIN_DECLARE_ERROR(InfiniteLabel);
ARTIN_DECLARE_ERROR(InvalidHom);
ARTIN_DECLARE_ERROR(GroupTooLarge);
ARTIN_DECLARE_ERROR(NoCatalogEntry);
ARTIN_DECLARE_ERROR(InvalidAutomorphism);
ARTIN_DECLARE_ERROR(UnsupportedEquivalence);
ARTIN_DECLARE_ERROR(RelationViolation);
ARTIN_DECLARE_ERROR(Table1Missing);
ARTIN_DECLARE_ERROR(MembershipError);

#undef ARTIN_DECLARE_ERROR

}  // namespace artin
