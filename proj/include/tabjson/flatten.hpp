#pragma once

#include <stdexcept>
#include <string>

#include "tabjson/data_model.hpp"

namespace tabjson {

struct FlattenOptions {
  std::string separator = ".";
};

class FlattenError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Replaces every nested frame column `p` holding column `c` with a column
/// named `p<sep>c`, recursively, at the nested column's position. Vector and
/// list columns are kept as they are. Throws FlattenError when two joined
/// names collide and std::invalid_argument for an empty separator.
Frame flatten(const Frame& frame, const FlattenOptions& opts = {});

}  // namespace tabjson
