#pragma once

#include <string>

#include "algeo/algebra.hpp"
#include "algeo/rep.hpp"

namespace algeo::test {

inline FiniteAlgebra c2() {
  return load_algebra(
      "algebra C2\nsize 2\n"
      "op add 2\n0 1 1 0\n"
      "op neg 1\n0 1\n"
      "op e 0\n0\n");
}

inline FiniteAlgebra c3() {
  return load_algebra(
      "algebra C3\nsize 3\n"
      "op add 2\n0 1 2 1 2 0 2 0 1\n"
      "op neg 1\n0 2 1\n"
      "op e 0\n0\n");
}

inline FiniteAlgebra m2() {
  return load_algebra(
      "algebra M2\nsize 2\n"
      "op meet 2\n0 0 0 1\n");
}

inline FiniteRepresentation c2_regular_z3() {
  return load_representation(
      "rep C2regZ3\nmodulus 3\ndim 2\ngroup 2\n0 1\n1 0\n"
      "action\n1 0 0 1\n0 1 1 0\n");
}

inline FiniteRepresentation c2_regular_z2() {
  return load_representation(
      "rep C2regZ2\nmodulus 2\ndim 2\ngroup 2\n0 1\n1 0\n"
      "action\n1 0 0 1\n0 1 1 0\n");
}

inline FiniteRepresentation c2_dim1_z2() {
  return load_representation(
      "rep C2dim1\nmodulus 2\ndim 1\ngroup 2\n0 1\n1 0\n"
      "action\n1\n1\n");
}

}  // namespace algeo::test
