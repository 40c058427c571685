// dev scratch: rank-15 investigation for the s=1 weight-0 basis
#include <Eigen/Dense>
#include <cstdio>

#include "spincons/analysis.hpp"

using namespace spincons;

int main() {
    const double L = 6.283185307179586;
    auto gens = ckv_generators();
    auto basis = killing_basis(1, 0);
    std::printf("basis size %zu\n", basis.size());

    Rng rng(99);
    std::vector<SolutionField> fams;
    for (int j = 0; j < 24; ++j) fams.push_back(random_commensurate_family(rng, 2, 3, L, 2));

    // quantities at two time samples
    Eigen::MatrixXd M(basis.size(), fams.size() * 2);
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = 0; j < fams.size(); ++j) {
            CurrentEval c = density_current_T(fams[j], 0, gens[0], basis[i]);
            M(i, 2 * j) = conserved_quantity(c, 0.0, 11, L);
            M(i, 2 * j + 1) = conserved_quantity(c, 0.37, 11, L);
        }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeFullU);
    std::printf("singular values:");
    for (int i = 0; i < svd.singularValues().size(); ++i)
        std::printf(" %.2e", svd.singularValues()(i));
    std::printf("\n");
    // which direction is null?
    Eigen::VectorXd u = svd.matrixU().col(14);
    std::printf("null functional direction:");
    for (size_t i = 0; i < basis.size(); ++i) std::printf(" %.3f", u(i));
    std::printf("\n");
    for (size_t i = 0; i < basis.size(); ++i)
        if (std::abs(u(i)) > 0.2) std::printf("  strong: %zu = %s\n", i, basis[i].label.c_str());
    // single-time rank for comparison
    {
        Eigen::MatrixXd M0 = M(Eigen::all, Eigen::seq(0, Eigen::last, 2));
        Eigen::JacobiSVD<Eigen::MatrixXd> s0(M0);
        int r = 0;
        for (int i = 0; i < s0.singularValues().size(); ++i)
            if (s0.singularValues()(i) > 1e-8 * s0.singularValues()(0)) ++r;
        std::printf("rank single-time: %d, two-time: ", r);
        int r2 = 0;
        for (int i = 0; i < svd.singularValues().size(); ++i)
            if (svd.singularValues()(i) > 1e-8 * svd.singularValues()(0)) ++r2;
        std::printf("%d\n", r2);
    }
    return 0;
}
