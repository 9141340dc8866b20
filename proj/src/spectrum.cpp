#include "sigq/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sigq {

Spectrum eigenvalues(const SymMatrix& m, double tol, int max_sweeps, SpectrumSource source) {
    const int n = m.size();
    std::vector<std::vector<double>> a(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = m.at(i, j).get_d();

    auto off_norm = [&]() {
        double s = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) s += a[i][j] * a[i][j];
        return std::sqrt(2 * s);
    };

    int sweep = 0;
    while (off_norm() > tol) {
        if (++sweep > max_sweeps)
            throw std::runtime_error("eigenvalues: Jacobi iteration did not converge");
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                if (a[p][q] == 0.0) continue;
                double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (int k = 0; k < n; ++k) {
                    double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }

    Spectrum out;
    out.source = source;
    out.eigenvalues.resize(n);
    for (int i = 0; i < n; ++i) out.eigenvalues[i] = a[i][i];
    std::sort(out.eigenvalues.begin(), out.eigenvalues.end(), std::greater<double>());
    return out;
}

double incidence_energy(const LabeledGraph& g) {
    Spectrum s = eigenvalues(signless_laplacian(g));
    double ie = 0;
    for (double nu : s.eigenvalues) ie += std::sqrt(std::max(nu, 0.0));
    return ie;
}

}  // namespace sigq
