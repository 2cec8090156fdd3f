#pragma once

// Lets Eigen fixed-size matrices carry exact cyclotomic scalars.

#include <Eigen/Core>

#include "csg/cyclofield.hpp"

namespace Eigen {

template <>
struct NumTraits<csg::CycloElement> : GenericNumTraits<csg::CycloElement> {
  using Real = csg::CycloElement;
  using NonInteger = csg::CycloElement;
  using Nested = csg::CycloElement;
  using Literal = csg::CycloElement;

  enum {
    IsComplex = 0,  // conjugation is a field automorphism, not Eigen's conj
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 50,
    MulCost = 200
  };

  // exact arithmetic
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
