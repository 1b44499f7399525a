#pragma once

#include <stdexcept>
#include <string>

namespace p3cay {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A closure or search grew past its configured element bound.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

// A set that an operation requires to be invariant under a group action is not.
class NotInvariant : public Error {
 public:
  using Error::Error;
};

class NotSubgroup : public Error {
 public:
  using Error::Error;
};

// A structural fact the library itself guarantees failed to hold.
class InternalInvariant : public Error {
 public:
  using Error::Error;
};

class NotGraphAutomorphism : public Error {
 public:
  using Error::Error;
};

class OutOfRange : public Error {
 public:
  using Error::Error;
};

class BadPartition : public Error {
 public:
  using Error::Error;
};

class NotIsomorphism : public Error {
 public:
  using Error::Error;
};

class NotCliquePreserving : public Error {
 public:
  using Error::Error;
};

class NotAutomorphismGroup : public Error {
 public:
  using Error::Error;
};

class NoSArcs : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

inline void internal_check(bool cond, const std::string& what) {
  if (!cond) throw InternalInvariant(what);
}

}  // namespace p3cay
