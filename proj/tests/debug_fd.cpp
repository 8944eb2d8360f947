#include "ptscatter/oracle.hpp"
#include "ptscatter/bound.hpp"

#include <cstdio>

int main() {
    using namespace ptscatter;
    model::PotentialParams p{6.0, 1e-9, model::CaseKind::MuImaginary};
    for (int n : {240, 360, 1000, 2000}) {
        auto eigs = oracle::bound_oracle(p, n, 12.0);
        std::printf("n=%d count=%zu:", n, eigs.size());
        for (auto e : eigs) std::printf("  (%.8f, %.2e)", e.real(), e.imag());
        std::printf("\n");
    }
    return 0;
}
