#pragma once

#include <string>
#include <vector>

#include "qhtoric/ssalg.hpp"

namespace qhtoric {

// Disjoint union of two coefficient systems.  Left-factor variables keep
// their names and positions; a right-factor name that collides picks up a
// numeric suffix (_2, _3, ...).  Declared relations come along, rewritten
// through the renaming.
struct MergedSystem {
  ParamSystemPtr sys;
  std::vector<std::size_t> left;   // left var index  -> merged index
  std::vector<std::size_t> right;  // right var index -> merged index
};

MergedSystem merge_param_systems(const ParamSystemPtr& a, const ParamSystemPtr& b);

// Re-express over the merged system through an index map.  This is the
// renaming-aware counterpart of map_onto, which matches by name only.
MPoly transport(const MPoly& p, const ParamSystemPtr& dst,
                const std::vector<std::size_t>& where);
FieldElem transport(const FieldElem& c, const ParamSystemPtr& dst,
                    const std::vector<std::size_t>& where);

// Tensor product over the merged coefficient field.  Basis element (i, k)
// sits at flat index i * dim(b) + k with label "<a_i>⊗<b_k>"; structure
// constants multiply componentwise; unity is unity⊗unity.
FDAlgebra tensor(const FDAlgebra& a, const FDAlgebra& b);

// Product verdict with factor bookkeeping.  The product algebra gets the
// trace-form test; `consistent` records whether that verdict matches what
// the factor certificates force: semisimple factors make a semisimple
// product, a nilpotent in either factor transports to x⊗1, and a field
// summand survives tensoring with a semisimple partner (idempotent e⊗1,
// re-validated in the product).  An Inconclusive factor forces nothing.
struct KunnethReport {
  FDAlgebra product;
  Certificate certificate;
  bool consistent = false;
};

KunnethReport kunneth_check(const FDAlgebra& a, const Certificate& ca,
                            const FDAlgebra& b, const Certificate& cb,
                            std::size_t dim_bound = 12);

}  // namespace qhtoric
