#pragma once

#include "hitchin2/universe.hpp"

namespace hitchin2 {

// Standard variable universes. Order fixes the canonical monomial order
// and the printed term order of every emitted formula.

inline UniversePtr chart_universe() {
  static UniversePtr u = make_universe({"r", "s", "t", "R", "S", "T"});
  return u;
}

inline UniversePtr cotangent_universe() {
  static UniversePtr u =
      make_universe({"r", "s", "t", "R", "S", "T", "c_r", "c_s", "c_t"});
  return u;
}

inline UniversePtr detmap_universe() {
  static UniversePtr u =
      make_universe({"r", "s", "t", "R", "S", "T", "c_r", "c_s", "c_t", "x"});
  return u;
}

inline UniversePtr nr_v_universe() {
  static UniversePtr u = make_universe({"r", "s", "t", "v0", "v1", "v2", "v3"});
  return u;
}

inline UniversePtr nr_u_universe() {
  static UniversePtr u = make_universe({"r", "s", "t", "u0", "u1", "u2", "u3"});
  return u;
}

inline UniversePtr table2_universe() {
  static UniversePtr u = make_universe(
      {"r", "s", "t", "u0", "u1", "u2", "u3", "eta0", "eta1", "eta2"});
  return u;
}

inline UniversePtr surface_universe() {
  static UniversePtr u = make_universe({"r", "s", "t", "x1", "x2"});
  return u;
}

inline UniversePtr params_universe() {
  static UniversePtr u = make_universe({"r", "s", "t"});
  return u;
}

inline UniversePtr vgp_universe() {
  static UniversePtr u = make_universe({"r", "s", "t", "h0", "h1", "h2"});
  return u;
}

inline UniversePtr fiber_universe() {
  // the v-coordinates together with the chart value solved for
  static UniversePtr u =
      make_universe({"r", "s", "t", "v0", "v1", "v2", "v3", "T"});
  return u;
}

}  // namespace hitchin2
