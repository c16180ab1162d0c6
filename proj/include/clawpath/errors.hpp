#pragma once

#include <array>
#include <stdexcept>
#include <string>

#include "clawpath/vertex_set.hpp"

namespace clawpath {

// Malformed input: bad edge list, unknown vertex, bad terminal list.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An operation's documented precondition does not hold.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class NotClawFree : public PreconditionError {
 public:
  NotClawFree(VertexId center, std::array<VertexId, 3> leaves)
      : PreconditionError("graph contains a claw centred at " + std::to_string(center)),
        center(center),
        leaves(leaves) {}
  VertexId center;
  std::array<VertexId, 3> leaves;
};

// A budgeted search ran out of nodes or time.
class SearchExhausted : public std::runtime_error {
 public:
  SearchExhausted() : std::runtime_error("search budget exhausted") {}
  using std::runtime_error::runtime_error;
};

}  // namespace clawpath
