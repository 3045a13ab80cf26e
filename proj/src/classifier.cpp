#include "bba/classifier.hpp"

namespace bba {

ClassificationReport classify(const Agenda& a) {
  ClassificationReport rep;
  rep.mis = minimally_inconsistent_subsets(a);
  rep.graph = entailment_graph(a, rep.mis);
  rep.flags = compute_flags(a, rep.mis, rep.graph);
  rep.oligarchy_applies = rep.flags.path_connected && rep.flags.even_negatable;
  rep.triviality_applies = rep.flags.negation_connected;
  rep.impossibility_applies = rep.flags.blocked;
  return rep;
}

}  // namespace bba
