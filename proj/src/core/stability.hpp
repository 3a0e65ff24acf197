#pragma once

// Stabilization of k |-> c(t + k*u) for a direction u with c(u) = 1: the
// sequence is eventually constant, with limit
//
//     max(0, 1 + min{ L_ij(t) : u in closure of C(i,j) })
//
// (the clamp covers directions along which t + k*u never enters the support
// cone). The limit chamber of u + eps*t, found by symbolic perturbation,
// provides an independent route to the same value and is asserted against
// the minimum.

#include <optional>

#include "core/types.hpp"

namespace su3 {

// Throws std::domain_error unless t, u are lattice points, u lies in the
// cone and c(u) = 1.
i64 stable_value(const TripleLabel& t, const TripleLabel& u);

// Smallest k <= k_max with c(t + j*u) equal to stable_value(t, u) for every
// j in [k, k_max], computed with the closed form; nullopt when the sequence
// has not settled by k_max.
std::optional<i64> stabilization_index(const TripleLabel& t,
                                       const TripleLabel& u, i64 k_max);

}  // namespace su3
