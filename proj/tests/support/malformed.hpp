#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace opcalc::testing {

/// Malformed equations paired with the byte offset of the first offending character.
inline const std::vector<std::pair<std::string, std::size_t>> kMalformedEquations = {
    {"", 0},
    {"y(t+1)-y(t)=", 12},
    {"y(t+1)-y(t)", 11},
    {"y(t+1)-y(t)==1", 12},
    {"y(t+1)-y(t)=1)", 13},
    {"y(t+1)-y(t)=(1", 14},
    {"y(t+1)-y(t)=2^", 14},
    {"y(t+1)-y(t)=1 $", 14},
    {"y(s+1)-y(t)=1", 2},
    {"y(t+)-y(t)=1", 4},
    {"y(t+1-y(t)=1", 5},
    {"y(t+1)-*y(t)=1", 7},
    {"y(t+1)-y(t)=cos(pi*s)", 19},
    {"y(t+1)-y(t)=cos(pi)", 18},
    {"y(t+1)-y(t)=1/", 14},
    {"y(t+1)-y(t)=sin(2*pi*t", 22},
    {"y(t+1)-y(t)=t^", 14},
    {"y(t+1)-y(t)=2^(t+)", 17},
    {"y(t+1)-y(t)=#", 12},
    {"y(t+1.5)-y(t)=1", 4},
    {"y(t+1)-y(t)=y", 13},
    {"y(t+1)-y(t)=3.^t", 14},
};

}  // namespace opcalc::testing
