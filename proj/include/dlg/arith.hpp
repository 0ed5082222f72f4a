#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace dlg {

using Z = mpz_class;
using Q = mpq_class;

/// Input outside the domain of an operation.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation contradicted one of its own consistency checks.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Refusal to build an object larger than the configured cap.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string to_string(const Z& z) { return z.get_str(); }
inline std::string to_string(const Q& q) { return q.get_str(); }

/// Exact binomial coefficient; zero outside 0 <= k <= n.
Z binomial(long n, long k);

}  // namespace dlg
