#pragma once

#include <vector>

#include "group_catalog.h"

namespace oracle {

/// Character degrees from the class algebra, in double precision: class-sum
/// eigenvectors w satisfy chi(1)^2 = |G| / sum_k |w_k|^2 / |C_k|.
std::vector<long long> burnside_degrees(const Table& table);

/// Number of conjugacy classes.
std::size_t class_count(const Table& table);

}  // namespace oracle
