#pragma once

#include "rbchar/classify.hpp"
#include "rbchar/element.hpp"
#include "rbchar/finite_ring.hpp"
#include "rbchar/ideal.hpp"

#include "json.hpp"

#include <cstddef>
#include <vector>

namespace rbchar {

using nlohmann::json;

/// Elements are lists of [degree, "coefficient"] in decreasing degree.
json element_to_json(const RBElement& f);
RBElement element_from_json(const AlgebraCtx& ctx, const json& j);

/// {"ring": "z", "weight": "1", "generators": [[[1,"2"],[0,"2"]]], "bound": 8}
struct IdealFile {
  AlgebraCtx ctx;
  std::vector<RBElement> generators;
  std::size_t bound;
};

IdealFile ideal_file_from_json(const json& j);
json to_json(const IdealFile& file);

/// {"omegas": ["0","2",...], "ascent": [[1,"2"]], "stable": true, "slack_used": 6}
/// Ideals are written as their canonical generators.
json saturation_report(const SaturationState& state);

/// {"ring": "z", "pairs": [[0,"4"],[2,"2"]]}
json ascent_to_json(const AscentSet& ascent);
AscentSet ascent_from_json(const json& j);

/// {"prime": false, "quotient": "...", "witness": ["a1", "a1"]}
json prime_report_to_json(const PrimeReport& report);

/// {"orders": [2,4], "unit": [1,1], "mult": [[[..],[..]],[[..],[..]]], "operator": [[..],[..]]}
/// mult[i][j] lists the components of e_i·e_j; operator[i] those of P(e_i).
struct RingFile {
  FiniteRing ring;
  RBOperatorTable op;
};

RingFile ring_file_from_json(const json& j);
json to_json(const RingFile& file);

json characteristic_to_json(const CharacteristicReport& report);

}  // namespace rbchar
