#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "repcensus/errors.hpp"

namespace repcensus {

// The nine families of simple complex Lie groups. Canonical order; used for
// sorting records and for the table column layout.
enum class Family : int {
  SL = 0,      // SL_rank, weight tuple has rank-1 shifted labels (>= 1)
  SOodd = 1,   // SO_{2 rank + 1}
  SOeven = 2,  // SO_{2 rank}
  Sp = 3,      // Sp_{2 rank}
  G2 = 4,
  F4 = 5,
  E6 = 6,
  E7 = 7,
  E8 = 8,
};

inline constexpr int kFamilyCount = 9;

inline constexpr std::array<Family, kFamilyCount> kAllFamilies = {
    Family::SL, Family::SOodd, Family::SOeven, Family::Sp, Family::G2,
    Family::F4, Family::E6,    Family::E7,     Family::E8,
};

bool is_exceptional(Family f);
bool is_classical(Family f);

// Fixed rank of an exceptional family (2, 4, 6, 7, 8).
std::int64_t exceptional_rank(Family f);

// CSV / CLI token, e.g. "so-even". parse_family throws RangeError on an
// unknown token.
std::string family_token(Family f);
Family parse_family(const std::string& token);

struct GroupId {
  Family family;
  std::int64_t rank;

  // Length of the weight tuple for this group.
  std::int64_t weight_length() const;

  // Throws InvariantViolationError when rank is outside the family's valid
  // range (SL >= 2, SOodd >= 1, SOeven >= 2, Sp >= 1, exceptional fixed).
  void validate() const;

  friend bool operator==(const GroupId&, const GroupId&) = default;
  friend auto operator<=>(const GroupId&, const GroupId&) = default;
};

std::string group_name(const GroupId& g);  // e.g. "SO_8", "SL_4", "E8"

enum class Convention { Paper, StrictSimple };

std::string convention_token(Convention c);
Convention parse_convention(const std::string& token);

// Smallest rank a family contributes to a census under the convention.
std::int64_t family_min_rank(Family f, Convention c);

}  // namespace repcensus
