// Small helpers shared by the unit tests.
#pragma once

#include "tukey/datasets.hpp"
#include "tukey/geometry.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace tukey::test {

inline Rational q(const char* text) { return parse_rational(text); }

inline VectorQ vec(std::initializer_list<const char*> xs) {
  VectorQ v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (const char* x : xs) v[i++] = q(x);
  return v;
}

inline PointCloud cloud(std::initializer_list<std::initializer_list<const char*>> rows) {
  std::vector<std::vector<Rational>> data;
  for (const auto& r : rows) {
    std::vector<Rational> row;
    for (const char* x : r) row.push_back(q(x));
    data.push_back(std::move(row));
  }
  return PointCloud::from_rows(data);
}

inline PointCloud sq4() { return gen_square4().cloud; }
inline PointCloud t4() { return gen_triangle_plus_center().cloud; }

}  // namespace tukey::test
