#ifndef CE_SRC_FLATTEN_HPP
#define CE_SRC_FLATTEN_HPP

#include <vector>

#include "ce/expr.hpp"

namespace ce::detail {

// Primitive-term decomposition: f(x) = sum coeff_i * atom_i(scale_i * x),
// with Fourier nodes resolved exactly during the walk.
struct FlatTerm {
    enum class Kind { Eigen, Autocorr, FtSquared };
    Kind kind;
    double coeff;
    double scale;
    int k = 0;                      // Eigen degree
    const BallUnion* balls = nullptr;
};

struct FlatForm {
    int dim = 0;
    std::vector<FlatTerm> terms;
    std::vector<ExprPtr> keep_alive; // owners of the BallUnion pointers
};

FlatForm flatten(const ExprPtr& f);

// Monomial coefficients of L_k^(alpha): L = sum_j c_j y^j.
std::vector<double> laguerre_coefficients(int k, double alpha);

} // namespace ce::detail

#endif
