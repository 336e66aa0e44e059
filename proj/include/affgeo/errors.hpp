#pragma once
#include <stdexcept>
#include <string>

namespace affgeo {

// Every library failure carries a short machine-readable code (used by the CLI).
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what) : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

#define AFFGEO_ERROR(Name, code)                                              \
  class Name : public Error {                                                 \
   public:                                                                    \
    explicit Name(const std::string& what) : Error(code, what) {}             \
  }

AFFGEO_ERROR(TransversalityLost, "transversality-lost");
AFFGEO_ERROR(SingularMap, "singular-map");
AFFGEO_ERROR(NotElliptical, "not-elliptical");
AFFGEO_ERROR(DegeneratePoint, "degenerate-point");
AFFGEO_ERROR(NotPositiveDefinite, "not-positive-definite");
AFFGEO_ERROR(CubicDegenerate, "cubic-degenerate");
AFFGEO_ERROR(DomainViolation, "domain-violation");
AFFGEO_ERROR(UnknownCoordinate, "unknown-coordinate");
AFFGEO_ERROR(OutOfDomain, "out-of-domain");
AFFGEO_ERROR(ParseError, "parse-error");

#undef AFFGEO_ERROR

}  // namespace affgeo
