#pragma once

#include <string>

#include "hankel_lti/hope.hpp"
#include "hankel_lti/state_space.hpp"

namespace hlti {

/// JSON fixture format: {kind, n, a: [[re,im],...], b, c, d: [re,im]}
/// with kind "continuous-diagonal" or "discrete-diagonal".
std::string to_json_string(const DiagonalContinuousSystem& sys);
std::string to_json_string(const DiagonalDiscreteSystem& sys);
DiagonalContinuousSystem continuous_from_json_string(const std::string& text);
DiagonalDiscreteSystem discrete_from_json_string(const std::string& text);

/// {n, h: [[re,im],...], d: [re,im]}
std::string to_json_string(const MarkovParams& params);
MarkovParams markov_from_json_string(const std::string& text);

}  // namespace hlti
