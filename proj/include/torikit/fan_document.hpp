#pragma once

// The on-disk fan format:
//
//   {"name": "A2 minus origin", "rank": 2,
//    "rays": [[1,0],[0,1]], "cones": [[0],[1]]}
//
// `cones` lists cones by ray index; maximal cones suffice. `name` is
// optional, every other field is required and nothing else is accepted.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "torikit/fan.hpp"
#include "torikit/lattice.hpp"

namespace torikit {

struct FanDocument {
  std::size_t rank = 0;
  std::vector<IntVector> rays;
  std::vector<std::vector<std::size_t>> cones;
  std::optional<std::string> name;

  friend bool operator==(const FanDocument&, const FanDocument&) = default;
};

// Strict parse. ParseError for malformed text, wrong types or unknown
// fields (with line/column or field path); ValidationError for ray length
// mismatches, duplicate rays and out-of-range indices.
FanDocument parse_fan(std::string_view text);

std::string serialize_fan(const FanDocument& doc);

// Validates the cones into a fan (FanError if they do not form one).
Fan build_fan(const FanDocument& doc);

// Rays of the fan in sorted order, maximal cones as index lists.
FanDocument document_from_fan(const Fan& f, std::optional<std::string> name = std::nullopt);

}  // namespace torikit
