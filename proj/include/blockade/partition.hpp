#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace blockade {

using BigInt = boost::multiprecision::cpp_int;

/// Young-diagram label (lambda1, lambda2, lambda3) of one SU(3) sector of an
/// n-atom ensemble. The irrep itself is fixed by p = lambda1 - lambda2 and
/// q = lambda2 - lambda3; lambda3 additionally tells how many Rydberg
/// excitations the top row of the weight diagram carries.
struct Partition {
    int lambda1 = 0;
    int lambda2 = 0;
    int lambda3 = 0;

    constexpr int n() const { return lambda1 + lambda2 + lambda3; }
    constexpr int p() const { return lambda1 - lambda2; }
    constexpr int q() const { return lambda2 - lambda3; }

    friend bool operator==(const Partition&, const Partition&) = default;
};

std::string to_string(const Partition& lambda);

/// Throws ValidationError unless lambda1 >= lambda2 >= lambda3 >= 0 and n >= 1.
void validate(const Partition& lambda);

/// All partitions of n into three ordered parts, in descending lexicographic
/// order. With blockade_only, sectors with lambda3 >= 2 are dropped: every one
/// of their states holds at least two Rydberg excitations.
std::vector<Partition> enumerate_partitions(int n, bool blockade_only = true);

/// Number of identical copies of the block in the full Hamiltonian
/// (dimension of the symmetric-group irrep, hook formula), exact.
BigInt multiplicity(const Partition& lambda);

/// Dimension (p+1)(q+1)(p+q+2)/2 of the unrestricted SU(3) irrep.
std::int64_t su3_dimension(const Partition& lambda);

/// Number of irrep basis states with at most one Rydberg excitation:
/// 3(p+1) - (p+2)[q==0] for lambda3 = 0, p+1 for lambda3 = 1, 0 otherwise.
int blockaded_dimension(const Partition& lambda);

}  // namespace blockade
