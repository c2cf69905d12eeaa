#include "topobim/pairs.hpp"

#include "topobim/error.hpp"

namespace topobim {

OpenPair::OpenPair(Topology topology, Mask open) : topology_(std::move(topology)), open_(open) {
  if (!topology_.is_open(open_)) {
    throw Error(ErrorCode::kNotOpen, topology_.labels().select(open_).to_string() +
                                         " is not open in the topology on " +
                                         topology_.labels().to_string());
  }
}

OpenPair OpenPair::from_labels(Topology topology, const LabelSet& open) {
  const Mask m = topology.labels().mask_of(open);
  return OpenPair(std::move(topology), m);
}

AdmissiblePair::AdmissiblePair(Topology base, Topology refinement)
    : base_(std::move(base)), refinement_(std::move(refinement)) {
  if (!is_admissible(refinement_, base_)) {
    throw Error(ErrorCode::kNotAdmissible, "refinement is not admissible for the base topology on " +
                                               base_.labels().to_string());
  }
}

}  // namespace topobim
