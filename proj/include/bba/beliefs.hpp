#pragma once

#include <boost/rational.hpp>
#include <cstddef>
#include <vector>

#include "bba/core.hpp"

namespace bba {

using Rat = boost::rational<long long>;

// Exact-rational probability mass over the worlds of a universe.
struct MassFunction {
  std::vector<Rat> mass;  // one entry per world, nonnegative, sums to 1

  static MassFunction point(int worlds, int at);
  static MassFunction uniform(int worlds);
};

struct Profile {
  std::vector<MassFunction> members;  // n >= 1, all over the same universe

  std::size_t n() const { return members.size(); }
};

struct BinaryBelief {
  IssueSel accepted = 0;  // bit per agenda issue
};

void validate_mass(const MassFunction& p, int worlds);

Rat prob(const MassFunction& p, WorldSet issue);
std::vector<Rat> profile_vector(const Profile& pr, WorldSet issue);

// True iff every issue entailed by the accepted set is accepted; on failure
// *violating (if given) receives the first offending issue index.
bool is_deductively_closed(const Agenda& a, const BinaryBelief& bel,
                           std::size_t* violating = nullptr);
bool is_consistent_belief(const Agenda& a, const BinaryBelief& bel);
bool is_complete_belief(const Agenda& a, const BinaryBelief& bel);

// All mass functions with masses in {0, 1/d, ..., 1}; deterministic order.
std::vector<MassFunction> enumerate_grid_masses(int worlds, int d);

inline constexpr std::size_t kDefaultProfileCap = 2'000'000;

// All n-tuples of grid mass functions, odometer order (last individual
// varies fastest).
std::vector<Profile> enumerate_grid_profiles(int worlds, int n, int d,
                                             std::size_t cap = kDefaultProfileCap);

}  // namespace bba
