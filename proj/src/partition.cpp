#include "blockade/partition.hpp"

#include "blockade/errors.hpp"

namespace blockade {

std::string to_string(const Partition& lambda) {
    return "(" + std::to_string(lambda.lambda1) + "," + std::to_string(lambda.lambda2) + "," +
           std::to_string(lambda.lambda3) + ")";
}

void validate(const Partition& lambda) {
    if (lambda.lambda3 < 0 || lambda.lambda2 < lambda.lambda3 || lambda.lambda1 < lambda.lambda2) {
        throw ValidationError("partition parts must satisfy lambda1 >= lambda2 >= lambda3 >= 0, got " +
                              to_string(lambda));
    }
    if (lambda.n() < 1) {
        throw ValidationError("partition must have n >= 1 atoms, got " + to_string(lambda));
    }
}

std::vector<Partition> enumerate_partitions(int n, bool blockade_only) {
    if (n < 1) {
        throw ValidationError("atom count must be >= 1, got " + std::to_string(n));
    }
    std::vector<Partition> result;
    for (int l1 = n; l1 >= (n + 2) / 3; --l1) {
        const int rest = n - l1;
        for (int l2 = std::min(l1, rest); 2 * l2 >= rest; --l2) {
            const int l3 = rest - l2;
            if (blockade_only && l3 >= 2) {
                continue;
            }
            result.push_back(Partition{l1, l2, l3});
        }
    }
    return result;
}

namespace {

BigInt factorial(int k) {
    BigInt f = 1;
    for (int i = 2; i <= k; ++i) {
        f *= i;
    }
    return f;
}

}  // namespace

BigInt multiplicity(const Partition& lambda) {
    validate(lambda);
    const int p = lambda.p();
    const int q = lambda.q();
    const BigInt numerator =
        factorial(lambda.n()) * (p + q + 2) * (p + 1) * (q + 1);
    const BigInt denominator =
        factorial(lambda.lambda1 + 2) * factorial(lambda.lambda2 + 1) * factorial(lambda.lambda3);
    const BigInt mu = numerator / denominator;
    if (mu * denominator != numerator) {
        throw NumericalError("hook formula did not divide exactly for " + to_string(lambda));
    }
    return mu;
}

std::int64_t su3_dimension(const Partition& lambda) {
    validate(lambda);
    const std::int64_t p = lambda.p();
    const std::int64_t q = lambda.q();
    return (p + 1) * (q + 1) * (p + q + 2) / 2;
}

int blockaded_dimension(const Partition& lambda) {
    validate(lambda);
    const int p = lambda.p();
    const int q = lambda.q();
    if (lambda.lambda3 == 0) {
        return 3 * (p + 1) - (q == 0 ? p + 2 : 0);
    }
    if (lambda.lambda3 == 1) {
        return p + 1;
    }
    return 0;
}

}  // namespace blockade
