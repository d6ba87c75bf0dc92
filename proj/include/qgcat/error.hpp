#pragma once

#include <stdexcept>
#include <string>

namespace qgcat {

// Every failure the library reports derives from Error; kind() lets the CLI
// map failures onto exit statuses without string matching.
enum class ErrorKind {
    configuration,
    argument,
    level,
    scope,
    label,
    capacity,
    precision,
    modularity,
    division_by_zero,
    invariant,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

#define QGCAT_DEFINE_ERROR(Name, Kind)                                                             \
    class Name : public Error {                                                                    \
      public:                                                                                      \
        explicit Name(const std::string& what) : Error(ErrorKind::Kind, what) {}                   \
    };

QGCAT_DEFINE_ERROR(ConfigurationError, configuration)
QGCAT_DEFINE_ERROR(ArgumentError, argument)
QGCAT_DEFINE_ERROR(LevelError, level)
QGCAT_DEFINE_ERROR(ScopeError, scope)
QGCAT_DEFINE_ERROR(LabelError, label)
QGCAT_DEFINE_ERROR(CapacityError, capacity)
QGCAT_DEFINE_ERROR(PrecisionError, precision)
QGCAT_DEFINE_ERROR(ModularityError, modularity)
QGCAT_DEFINE_ERROR(DivisionByZero, division_by_zero)
QGCAT_DEFINE_ERROR(InvariantViolation, invariant)

#undef QGCAT_DEFINE_ERROR

} // namespace qgcat
