// Tests every coordinate point of G(5, R_2) against the Hilbert scheme of one point on a plane conic.

#include "nstor/grassmann.hpp"
#include "nstor/parse.hpp"

#include <iostream>

using namespace nstor;

int main() {
    const auto X = parse_ideal<Rational>("x0*x2 - x1^2", 2);
    const auto H = hilb_equations<Rational>(2, 2, HilbertPolynomial::constant(1), X);
    std::cout << "G(" << H.n << ", " << H.dim_v << "), " << H.plucker_quadrics.size() << " quadrics, "
              << H.linear_conditions.size() << " linear conditions, " << to_string(H.fitting.minor_count())
              << " minors of size " << H.m << "\n";
    for (std::size_t k = 0; k < H.basis_v.size(); ++k) {
        std::vector<std::vector<Rational>> rows;
        for (std::size_t j = 0; j < H.basis_v.size(); ++j)
            if (j != k) {
                std::vector<Rational> e(H.basis_v.size());
                e[j] = Rational(1L);
                rows.push_back(e);
            }
        const auto c = H.check(plucker_coordinates(H.index, rows));
        std::cout << "without " << H.basis_v[k].to_string() << ": rank " << c.lambda_rank << " fitting " << c.fitting
                  << " linear " << c.linear << (c.accepted() ? "  accepted" : "") << "\n";
    }
}
