#pragma once

namespace sea {

// Every numeric threshold used by the matrix model and the verifier. Defaults
// are the documented ones; the CLI can override psd/comm/cluster.
struct Tolerances {
  double psd = 1e-9;        // eigenvalue slack for 0 <= A <= I
  double projection = 1e-8; // ||P^2 - P||_F
  double eig = 1e-10;       // decomposition residual, relative to ||A||_F
  double cluster = 1e-8;    // eigenvalues closer than this are one cluster
  double kernel = 1e-8;     // |lambda| below this counts as kernel
  double comm = 1e-9;       // ||ab - ba||_F for a|b
  double residual = 1e-8;   // pass threshold for verifier residuals
  double hermitian = 1e-9;  // ||A - A*||_F relative, on input
};

}  // namespace sea
