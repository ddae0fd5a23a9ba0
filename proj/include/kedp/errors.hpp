#pragma once

#include <stdexcept>
#include <string>

namespace kedp {

// Instance text that does not conform to the format. `line` is 1-based and
// counts every physical line of the input, comments included.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// The instance does not admit k edge-disjoint st-paths; carries the number
// of disjoint paths that do exist.
class Infeasible : public std::runtime_error {
 public:
  explicit Infeasible(int max_flow)
      : std::runtime_error("infeasible: max flow " + std::to_string(max_flow)),
        max_flow_(max_flow) {}
  int max_flow() const { return max_flow_; }

 private:
  int max_flow_;
};

// An exhaustive oracle was asked to solve an instance beyond its limits.
class OracleLimit : public std::runtime_error {
 public:
  explicit OracleLimit(const std::string& msg) : std::runtime_error(msg) {}
};

// A structural precondition failed (non-acyclic or non-minimal input where
// a minimal acyclic digraph was required, paths not covering an edge set,
// leftover flow that should not exist).
class StructureError : public std::runtime_error {
 public:
  explicit StructureError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace kedp
