#pragma once

#include <stdexcept>
#include <string>

namespace toricheap {

// Every library failure derives from Error and carries a stable type name
// that the CLI reports verbatim. Resource errors signal an inconclusive
// computation (a cap was hit), never a wrong answer.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& what)
      : std::runtime_error(what), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }
  virtual bool is_resource_limit() const noexcept { return false; }

 private:
  std::string name_;
};

class ResourceLimit : public Error {
 public:
  using Error::Error;
  bool is_resource_limit() const noexcept override { return true; }
};

#define TORICHEAP_DEFINE_ERROR(Type, Base)                                \
  class Type : public Base {                                              \
   public:                                                                \
    explicit Type(const std::string& what) : Base(#Type, what) {}         \
  };

TORICHEAP_DEFINE_ERROR(InvalidGraph, Error)
TORICHEAP_DEFINE_ERROR(UnknownGenerator, Error)
TORICHEAP_DEFINE_ERROR(ParseError, Error)
TORICHEAP_DEFINE_ERROR(OutOfRange, Error)
TORICHEAP_DEFINE_ERROR(NotReduced, Error)
TORICHEAP_DEFINE_ERROR(NotToricallyReduced, Error)
TORICHEAP_DEFINE_ERROR(NotASource, Error)
TORICHEAP_DEFINE_ERROR(NotAcyclic, Error)
TORICHEAP_DEFINE_ERROR(GraphMismatch, Error)
TORICHEAP_DEFINE_ERROR(NotACoxeterWord, Error)
TORICHEAP_DEFINE_ERROR(ShapeMismatch, Error)
TORICHEAP_DEFINE_ERROR(PreconditionViolated, Error)

TORICHEAP_DEFINE_ERROR(OrbitCapExceeded, ResourceLimit)
TORICHEAP_DEFINE_ERROR(ExtensionCapExceeded, ResourceLimit)
TORICHEAP_DEFINE_ERROR(ClassCapExceeded, ResourceLimit)
TORICHEAP_DEFINE_ERROR(TooLarge, ResourceLimit)

#undef TORICHEAP_DEFINE_ERROR

}  // namespace toricheap
