#pragma once

#include <vector>

#include "covers/rational.hpp"

namespace covers::exact {

// Diagonal of the Smith normal form of an integer matrix (any shape).
// Entries are nonnegative and each divides the next.
std::vector<Int> smith_diagonal(std::vector<std::vector<Int>> mat);

}  // namespace covers::exact
