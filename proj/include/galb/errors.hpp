#pragma once

#include <stdexcept>
#include <string>

namespace galb {

// Base for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid graph construction input: self-loop, duplicate edge, endpoint
// out of range. The message names the offending pair.
class GraphError : public Error {
 public:
  using Error::Error;
};

// Weight vector does not fit the graph (length) or its declared range.
class WeightError : public Error {
 public:
  using Error::Error;
};

// Invalid demand: equal endpoints, duplicate (src, dst) pair, bad node,
// non-positive units.
class FlowError : public Error {
 public:
  using Error::Error;
};

// Invalid optimizer or generator configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// No directed path exists between the two nodes.
class UnreachableError : public Error {
 public:
  UnreachableError(int src, int dst)
      : Error("no directed path from node " + std::to_string(src) +
              " to node " + std::to_string(dst)),
        src_(src),
        dst_(dst) {}

  int src() const { return src_; }
  int dst() const { return dst_; }

 private:
  int src_;
  int dst_;
};

// Exhaustive-search candidate count exceeds the enumeration budget.
class BudgetExceededError : public Error {
 public:
  BudgetExceededError(const std::string& what, double approx_candidates)
      : Error(what), approx_candidates_(approx_candidates) {}

  double approx_candidates() const { return approx_candidates_; }

 private:
  double approx_candidates_;
};

// Malformed or inconsistent topology/flows/weights document.
class DocumentError : public Error {
 public:
  using Error::Error;
};

}  // namespace galb
