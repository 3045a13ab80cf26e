#pragma once

// Hand-built fixture agendas used across the test suites.
//
// Four-world universes index their worlds as w00=0, w10=1, w01=2, w11=3
// (first digit: p, second: q).

#include "bba/core.hpp"

namespace fixtures {

using namespace bba;

// {A, ~A} over two worlds, A = {0}.
inline Agenda pair_agenda() {
  return make_agenda(Universe::of(2), {0b01}, true, {"A"});
}

// {p, q, p&q} closed: {p,~p,q,~q,c,~c} over four worlds.
inline Agenda conj_agenda() {
  Universe u = Universe::named({"w00", "w10", "w01", "w11"});
  return make_agenda(u, {0b1010, 0b1100, 0b1000}, true, {"p", "q", "c"});
}

// {p, q, p<->q} closed: {p,~p,q,~q,e,~e} over four worlds.
inline Agenda bicond_agenda() {
  Universe u = Universe::named({"w00", "w10", "w01", "w11"});
  return make_agenda(u, {0b1010, 0b1100, 0b1001}, true, {"p", "q", "e"});
}

// All six contingent subsets of a three-world universe.
inline Agenda alg3_agenda() {
  Universe u = Universe::named({"1", "2", "3"});
  return make_agenda(u, {0b001, 0b010, 0b100, 0b011, 0b101, 0b110}, true,
                     {"{1}", "{2}", "{3}", "{1,2}", "{1,3}", "{2,3}"});
}

// {p,~p,q,~q} over four worlds: logically independent pairs.
inline Agenda simple4_agenda() {
  Universe u = Universe::named({"w00", "w10", "w01", "w11"});
  return make_agenda(u, {0b1010, 0b1100}, true, {"p", "q"});
}

inline std::size_t idx(const Agenda& a, const std::string& name) {
  return *a.index_of_name(name);
}

inline IssueSel sel(const Agenda& a, std::initializer_list<const char*> names) {
  IssueSel s = 0;
  for (const char* n : names) s |= IssueSel{1} << idx(a, n);
  return s;
}

}  // namespace fixtures
