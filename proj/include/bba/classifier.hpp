#pragma once

#include "bba/properties.hpp"

namespace bba {

// Verdicts for the three impossibility rows:
//   row 1 (oligarchy):     UD, ZP, CP, IND + CDC          <=> PC and EN
//   row 2 (triviality):    UD, ZP, CP, IND + CDC + AN     <=> NC
//   row 3 (impossibility): UD, CP, IND + CCS and CCP      <=> blocked
struct ClassificationReport {
  PropertyFlags flags;
  bool oligarchy_applies = false;
  bool triviality_applies = false;
  bool impossibility_applies = false;
  MisFamily mis;
  EntailmentGraph graph;
};

ClassificationReport classify(const Agenda& a);

}  // namespace bba
