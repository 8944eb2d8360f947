#include "ptscatter/model.hpp"

#include <complex>
#include <cstdio>
#include <vector>

using Complex = std::complex<double>;
using namespace ptscatter;

static void solve_tridiag(std::vector<Complex> sub, std::vector<Complex> diag,
                          std::vector<Complex> super, std::vector<Complex>& x) {
    const size_t n = diag.size();
    std::vector<Complex> super2(n, Complex(0.0, 0.0));
    for (size_t i = 0; i + 1 < n; ++i) {
        if (std::abs(sub[i]) > std::abs(diag[i])) {
            std::swap(diag[i], sub[i]);
            std::swap(super[i], diag[i + 1]);
            if (i + 2 < n) std::swap(super2[i], super[i + 1]);
            std::swap(x[i], x[i + 1]);
        }
        if (diag[i] == Complex(0.0, 0.0)) diag[i] = Complex(1e-300, 0.0);
        const Complex f = sub[i] / diag[i];
        diag[i + 1] -= f * super[i];
        if (i + 2 < n) super[i + 1] -= f * super2[i];
        x[i + 1] -= f * x[i];
    }
    if (diag[n - 1] == Complex(0.0, 0.0)) diag[n - 1] = Complex(1e-300, 0.0);
    x[n - 1] /= diag[n - 1];
    if (n >= 2) x[n - 2] = (x[n - 2] - super[n - 2] * x[n - 1]) / diag[n - 2];
    for (size_t ir = n; ir >= 3; --ir) {
        const size_t i = ir - 3;
        x[i] = (x[i] - super[i] * x[i + 1] - super2[i] * x[i + 2]) / diag[i];
    }
}

int main() {
    model::PotentialParams p{6.0, 1e-9, model::CaseKind::MuImaginary};
    const int n = 2000;
    const double box = 12.0;
    const double h = 2.0 * box / (n + 1);
    std::vector<Complex> sub(n - 1, Complex(-1.0 / (h * h), 0.0)), super = sub, diag(n);
    for (int i = 0; i < n; ++i)
        diag[i] = 2.0 / (h * h) + model::effective_potential(p, -box + (i + 1) * h);

    for (Complex seed : {Complex(1.99915728, 0.0), Complex(4.99836559, 0.0)}) {
        std::vector<Complex> x(n), y(n);
        for (int i = 0; i < n; ++i)
            x[i] = Complex(1.0 + 1e-3 * std::sin(17.0 * i + 0.3), 1e-3 * std::cos(29.0 * i));
        Complex shift = seed + Complex(1e-10, 1e-12);
        Complex lambda = shift;
        for (int iter = 0; iter < 12; ++iter) {
            std::vector<Complex> d2 = diag;
            for (int i = 0; i < n; ++i) d2[i] -= shift;
            solve_tridiag(sub, d2, super, x);
            double norm = 0.0;
            for (auto& v : x) norm += std::norm(v);
            norm = std::sqrt(norm);
            for (auto& v : x) v /= norm;
            Complex xx(0, 0), xtax(0, 0);
            for (int i = 0; i < n; ++i) {
                Complex v = diag[i] * x[i];
                if (i > 0) v += sub[i - 1] * x[i - 1];
                if (i + 1 < n) v += super[i] * x[i + 1];
                y[i] = v;
                xtax += x[i] * v;
                xx += x[i] * x[i];
            }
            Complex next = xtax / xx;
            std::printf("  seed %.6f iter %d -> (%.10f, %.2e)  |xx|=%.3f\n", seed.real(), iter,
                        next.real(), next.imag(), std::abs(xx));
            lambda = next;
            if (iter >= 2) shift = lambda;
        }
        std::printf("seed %.6f final %.10f\n", seed.real(), lambda.real());
    }
    return 0;
}
