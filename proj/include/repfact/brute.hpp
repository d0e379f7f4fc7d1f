#pragma once

#include <functional>
#include <vector>

#include "repfact/factorize.hpp"
#include "repfact/word.hpp"

// Definition-direct reference implementations. These never touch the
// RepetitionTable or the width DP; claim checks and tests use them as the
// independent side of every dual-route comparison.
namespace repfact::brute {

/// Period check straight from the definition, O(|w|^2).
std::vector<std::size_t> periods(const Word& w);

bool is_repetition(const Word& w);

/// Enumerates every repetition factorization of w by extending cut
/// sequences left to right, pruning at the first non-repetition block.
/// Cut sequences arrive in lexicographic order.
void enumerate_factorizations(const Word& w,
                              const std::function<void(const Factorization&)>& visit);

/// WidthProfile assembled from full enumeration.
WidthProfile profile(const Word& w);

} // namespace repfact::brute
