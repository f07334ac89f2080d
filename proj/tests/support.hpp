#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "fincat/common.hpp"

#ifndef FIXTURE_DIR
#define FIXTURE_DIR "fixtures"
#endif

namespace testsupport {

inline std::string fixture(const std::string& rel) { return std::string(FIXTURE_DIR) + "/" + rel; }

// Sorted copy, for comparing sets given as vectors.
template <class T>
std::vector<T> sorted(std::vector<T> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace testsupport
