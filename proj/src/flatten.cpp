#include "tabjson/flatten.hpp"

#include <unordered_set>

namespace tabjson {

namespace {

void hoist(const Frame& frame, const std::string& prefix, const FlattenOptions& opts,
           std::vector<NamedColumn>& out) {
  for (const auto& col : frame.columns) {
    std::string name = prefix.empty() ? col.name : prefix + opts.separator + col.name;
    if (const auto* nested = std::get_if<Boxed<Frame>>(&col.column)) {
      hoist(**nested, name, opts, out);
    } else {
      out.push_back(NamedColumn{std::move(name), col.column});
    }
  }
}

}  // namespace

Frame flatten(const Frame& frame, const FlattenOptions& opts) {
  if (opts.separator.empty()) throw std::invalid_argument("flatten separator must not be empty");
  Frame out;
  out.nrow = frame.nrow;
  out.row_names = frame.row_names;
  hoist(frame, "", opts, out.columns);
  std::unordered_set<std::string> seen;
  for (const auto& col : out.columns) {
    if (!seen.insert(col.name).second) {
      throw FlattenError("flattening produces the column name \"" + col.name + "\" twice");
    }
  }
  return out;
}

}  // namespace tabjson
