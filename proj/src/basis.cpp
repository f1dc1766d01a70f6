#include "blockade/basis.hpp"

#include <cassert>

#include "blockade/errors.hpp"

namespace blockade {

namespace {

// Occupation numbers of |r; t, m_t> from the simultaneous T^z, U^z, V^z
// eigenvalues: m_u = (p + 2q - 3r - 2m_t)/4 and m_v = (p + 2q - 3r + 2m_t)/4
// on row r of the weight diagram, combined with
// n0 = (n + 2m_t + 2m_v)/3, n1 = (n - 2m_t + 2m_u)/3, nr = r + lambda3.
BasisLabel make_label(const Partition& lambda, int row, int t2, int mt2) {
    const int n = lambda.n();
    const int p = lambda.p();
    const int q = lambda.q();
    BasisLabel s;
    s.row = row;
    s.t2 = t2;
    s.mt2 = mt2;
    const int six_n0 = 2 * n + 3 * mt2 + p + 2 * q - 3 * row;
    const int six_n1 = 2 * n - 3 * mt2 + p + 2 * q - 3 * row;
    assert(six_n0 % 6 == 0 && six_n1 % 6 == 0);
    s.n0 = six_n0 / 6;
    s.n1 = six_n1 / 6;
    s.nr = row + lambda.lambda3;
    assert(s.n0 >= 0 && s.n1 >= 0 && s.n0 + s.n1 + s.nr == n);
    return s;
}

}  // namespace

int IrrepBasis::row0_index_of(int n0) const {
    for (int j = 0; j < row0_size(); ++j) {
        if (states[static_cast<std::size_t>(j)].n0 == n0) {
            return j;
        }
    }
    return -1;
}

int IrrepBasis::index_of(int row, int t2, int mt2) const {
    for (int j = 0; j < dim(); ++j) {
        const BasisLabel& s = states[static_cast<std::size_t>(j)];
        if (s.row == row && s.t2 == t2 && s.mt2 == mt2) {
            return j;
        }
    }
    return -1;
}

IrrepBasis build_basis(const Partition& lambda) {
    validate(lambda);
    if (lambda.lambda3 >= 2) {
        throw ValidationError("sector " + to_string(lambda) +
                              " holds no state with fewer than two Rydberg excitations");
    }
    const int p = lambda.p();
    const int q = lambda.q();

    IrrepBasis basis;
    basis.partition = lambda;
    basis.states.reserve(static_cast<std::size_t>(blockaded_dimension(lambda)));

    // Row 0: always singly occupied with t = p/2.
    for (int mt2 = p; mt2 >= -p; mt2 -= 2) {
        basis.states.push_back(make_label(lambda, 0, p, mt2));
    }

    // Row 1 exists only for lambda3 = 0; its t content follows the four-case
    // rule: t = (p+1)/2 appears when q != 0, t = (p-1)/2 when p != 0.
    if (lambda.lambda3 == 0) {
        if (q != 0) {
            for (int mt2 = p + 1; mt2 >= -(p + 1); mt2 -= 2) {
                basis.states.push_back(make_label(lambda, 1, p + 1, mt2));
            }
        }
        if (p != 0) {
            for (int mt2 = p - 1; mt2 >= -(p - 1); mt2 -= 2) {
                basis.states.push_back(make_label(lambda, 1, p - 1, mt2));
            }
        }
    }

    assert(basis.dim() == blockaded_dimension(lambda));
    return basis;
}

}  // namespace blockade
