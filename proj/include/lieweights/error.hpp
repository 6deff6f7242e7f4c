#pragma once

#include <stdexcept>
#include <string>

namespace lieweights {

/// A computation would exceed a configured enumeration bound.
class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A series coefficient was requested beyond its truncation order.
class range_error : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// The (group, prime) pair has no stubborn-subgroup classification available.
class unsupported_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A function was called outside its documented domain.
class contract_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An automizer descriptor tree is not well formed.
class structure_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace lieweights
