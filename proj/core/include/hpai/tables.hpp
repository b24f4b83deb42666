#pragma once

#include <map>
#include <string>

#include "hpai/momentum.hpp"

namespace hpai {

/// Discrete probability distribution over action/counteraction ids.
/// std::map keeps ids in lexicographic order, which the deterministic
/// inverse-CDF sampler relies on.
using Distribution = std::map<std::string, double>;

/// Counteraction id -> motion id.
using C2MMap = std::map<std::string, std::string>;

/// Motion id -> momentum it induces per segment (the M2Mm table).
using MotionDb = std::map<std::string, MomentumVector>;

/// AI action id -> predicted player momentum (the A2Mm table).
using A2MmTable = std::map<std::string, MomentumVector>;

}  // namespace hpai
