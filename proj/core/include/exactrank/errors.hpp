#pragma once

#include <stdexcept>
#include <string>

namespace exactrank {

/// Base class for all library errors.
class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A numeric parameter is outside its documented domain.
class invalid_param_error : public error {
public:
  using error::error;
};

/// A comparison set contains duplicates or out-of-range items.
class invalid_set_error : public error {
public:
  using error::error;
};

/// Listwise comparison requested on an oracle that only supports pairs.
class listwise_unsupported_error : public error {
public:
  using error::error;
};

/// An operation that needs a nonempty list was given an empty one.
class empty_list_error : public error {
public:
  using error::error;
};

/// The iterative insertion schedule ran past its attempt cap, which in
/// practice means the instance has a gap smaller than ~2^-65.
class schedule_exhausted_error : public error {
public:
  using error::error;
};

/// Instance construction or deserialization rejected the data.
class invalid_instance_error : public error {
public:
  using error::error;
};

}  // namespace exactrank
