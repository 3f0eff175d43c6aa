#pragma once

namespace pbc {

// Numerical tolerances shared by the library, the CLI and the test suites.
//
// `algebraic` guards identities that hold exactly in real arithmetic
// (normalization, Bayes vs. bracket, linearity). `insertion` is the looser
// bound for quantities assembled from many summed terms, such as expanding a
// bracket through a partition.
struct Tolerances {
  double algebraic = 1e-12;
  double insertion = 1e-10;

  // Process-wide instance. Reads PBC_TOL_ALGEBRAIC / PBC_TOL_INSERTION from
  // the environment once; defaults above otherwise.
  static const Tolerances& active();
};

}  // namespace pbc
