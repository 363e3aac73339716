#ifndef THETA_ERRORS_HPP
#define THETA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace theta {

// Base class for every failure the toolkit can signal. The CLI maps
// SchemaError to exit code 1 and every other Error to exit code 2.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

private:
  std::string code_;
};

#define THETA_DEFINE_ERROR(Name)                                  \
  class Name : public Error {                                     \
  public:                                                         \
    explicit Name(const std::string& what) : Error(#Name, what) {} \
  }

THETA_DEFINE_ERROR(InvalidSpecialization);
THETA_DEFINE_ERROR(CharacteristicClash);
THETA_DEFINE_ERROR(NonzeroRemainder);
THETA_DEFINE_ERROR(BadShape);
THETA_DEFINE_ERROR(ArityMismatch);
THETA_DEFINE_ERROR(NotInvariant);
THETA_DEFINE_ERROR(NotFoundWithinBound);
THETA_DEFINE_ERROR(NonInvertibleEntry);
THETA_DEFINE_ERROR(SingularMatrix);
THETA_DEFINE_ERROR(MissingSqrtQ);
THETA_DEFINE_ERROR(NotDiagonal);
THETA_DEFINE_ERROR(TooLarge);
THETA_DEFINE_ERROR(SchemaError);
THETA_DEFINE_ERROR(NotAUnit);

#undef THETA_DEFINE_ERROR

}  // namespace theta

#endif
