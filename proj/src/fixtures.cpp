#include "nestsep/fixtures.hpp"

#include <array>

namespace nestsep {

GroupRef quaternion_group() {
  // elements (s, x): sign s in {0:+,1:-}, axis x in {0:1, 1:i, 2:j, 3:k}
  // index = x*2 + s so the order is 1,-1,i,-i,j,-j,k,-k
  auto idx = [](int s, int x) { return x * 2 + s; };
  // axis multiplication: table[x][y] = (sign, axis) of x*y
  static const std::array<std::array<std::pair<int, int>, 4>, 4> axis = {{
      {{{0, 0}, {0, 1}, {0, 2}, {0, 3}}},  // 1*{1,i,j,k}
      {{{0, 1}, {1, 0}, {0, 3}, {1, 2}}},  // i*{1,i,j,k} = i,-1,k,-j
      {{{0, 2}, {1, 3}, {1, 0}, {0, 1}}},  // j*{1,i,j,k} = j,-k,-1,i
      {{{0, 3}, {0, 2}, {1, 1}, {1, 0}}},  // k*{1,i,j,k} = k,j,-i,-1
  }};
  std::vector<std::vector<int>> table(8, std::vector<int>(8));
  for (int s1 = 0; s1 < 2; ++s1)
    for (int x1 = 0; x1 < 4; ++x1)
      for (int s2 = 0; s2 < 2; ++s2)
        for (int x2 = 0; x2 < 4; ++x2) {
          auto [s, x] = axis[x1][x2];
          table[idx(s1, x1)][idx(s2, x2)] = idx((s1 + s2 + s) % 2, x);
        }
  std::vector<std::string> labels = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  return FiniteGroup::from_table(table, {idx(0, 1), idx(0, 2)}, labels);
}

GroupRef klein_four_group() { return direct_product(cyclic_group(2), cyclic_group(2)); }

const std::vector<Fixture>& fixture_groups() {
  static const std::vector<Fixture> fixtures = [] {
    std::vector<Fixture> fs;
    fs.push_back({"trivial", trivial_group()});
    fs.push_back({"C2", cyclic_group(2)});
    fs.push_back({"C3", cyclic_group(3)});
    fs.push_back({"C4", cyclic_group(4)});
    fs.push_back({"C2xC2", klein_four_group()});
    fs.push_back({"C5", cyclic_group(5)});
    fs.push_back({"C6", cyclic_group(6)});
    fs.push_back({"S3", symmetric_group(3)});
    fs.push_back({"C7", cyclic_group(7)});
    fs.push_back({"C8", cyclic_group(8)});
    fs.push_back({"C4xC2", direct_product(cyclic_group(4), cyclic_group(2))});
    fs.push_back({"C2xC2xC2", direct_product(klein_four_group(), cyclic_group(2))});
    fs.push_back({"D4", dihedral_group(4)});
    fs.push_back({"Q8", quaternion_group()});
    return fs;
  }();
  return fixtures;
}

std::vector<Fixture> fixture_groups_up_to(int max_order) {
  std::vector<Fixture> out;
  for (const auto& f : fixture_groups())
    if (f.group->order() <= max_order) out.push_back(f);
  return out;
}

}  // namespace nestsep
