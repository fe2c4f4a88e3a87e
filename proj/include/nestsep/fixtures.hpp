// Standard small-group fixtures shared by the unit and acceptance suites.

#ifndef NESTSEP_FIXTURES_HPP_
#define NESTSEP_FIXTURES_HPP_

#include <string>
#include <vector>

#include "nestsep/group.hpp"

namespace nestsep {

GroupRef quaternion_group();  // Q8, labels 1,-1,i,-i,j,-j,k,-k
GroupRef klein_four_group();

struct Fixture {
  std::string name;
  GroupRef group;
};

// Deterministic fixture list: trivial, C2, C3, C4, V4, C5, C6, S3, C7, C8,
// C4xC2, C2^3, D4, Q8. Constructed once and cached.
const std::vector<Fixture>& fixture_groups();
std::vector<Fixture> fixture_groups_up_to(int max_order);

}  // namespace nestsep

#endif  // NESTSEP_FIXTURES_HPP_
