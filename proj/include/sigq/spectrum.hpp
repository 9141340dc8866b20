#pragma once

#include <vector>

#include "sigq/graph.hpp"
#include "sigq/matrix.hpp"

namespace sigq {

enum class SpectrumSource { Signless, Laplacian };

struct Spectrum {
    std::vector<double> eigenvalues;  // sorted descending
    SpectrumSource source = SpectrumSource::Signless;
};

// Eigenvalues of a symmetric integer matrix by cyclic Jacobi rotations.
// Throws std::runtime_error when the off-diagonal mass has not dropped below
// tol after max_sweeps sweeps.
Spectrum eigenvalues(const SymMatrix& m, double tol = 1e-12, int max_sweeps = 100,
                     SpectrumSource source = SpectrumSource::Signless);

// IE(G): sum of square roots of the signless Laplacian eigenvalues.
double incidence_energy(const LabeledGraph& g);

}  // namespace sigq
