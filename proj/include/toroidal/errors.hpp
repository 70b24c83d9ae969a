#pragma once

#include <stdexcept>
#include <string>

namespace toroidal {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Rejected argument: bad type/rank pair, malformed matrix, index out of range.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Two series over different variable sets, or windows that cannot be compared.
class WindowMismatch : public Error {
 public:
  using Error::Error;
};

// A coefficient was requested outside the truncation window.
class OutOfWindow : public Error {
 public:
  using Error::Error;
};

// A geometric expansion that would not terminate inside the window.
class Divergence : public Error {
 public:
  using Error::Error;
};

// Vertex-operator construction needs a simply-laced root system.
class NotSimplyLaced : public Error {
 public:
  using Error::Error;
};

// A check needed vectors above the enumerated energy bound.
class SliceExhausted : public Error {
 public:
  SliceExhausted(int have, int need)
      : Error("slice exhausted: E_max=" + std::to_string(have) + " is too small, need E_max >= " +
              std::to_string(need)),
        have_emax(have),
        need_emax(need) {}
  int have_emax;
  int need_emax;
};

}  // namespace toroidal
