#pragma once

#include <stdexcept>
#include <string>

namespace inscribe {

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Polygon is not star-shaped with respect to the origin (or the origin is
/// not strictly interior).
class NotStarShapedError : public Error {
  public:
    using Error::Error;
};

/// Some pattern edge lies on a line through the origin, which makes the
/// gauge degenerate and the Lipschitz constant undefined.
class CoplanarFaceError : public Error {
  public:
    using Error::Error;
};

/// Problem-file or trace-file parsing failure; message carries the location.
class ParseError : public Error {
  public:
    using Error::Error;
};

/// Solver gave up (split cap, iteration cap, ...). Carries best-so-far state
/// where one exists.
class SolveError : public Error {
  public:
    SolveError(const std::string& what, double best_value, bool has_best)
        : Error(what), best_value(best_value), has_best(has_best) {}
    explicit SolveError(const std::string& what) : Error(what) {}

    double best_value = 0.0;
    bool has_best = false;
};

class TimeoutError : public Error {
  public:
    using Error::Error;
};

}  // namespace inscribe
