#pragma once

// Random single-point corruptions of a serialized solution, for exercising
// the verifier.

#include <random>
#include <string>

#include "inclusionkit/io.hpp"

namespace inclusionkit {

/// Corrupts one value of a solution JSON in place and describes the change.
/// Every corruption changes the function or its geometry, so a correct
/// verifier must reject the result.
std::string inject_fault(Json& solution, std::mt19937_64& rng);

} // namespace inclusionkit
