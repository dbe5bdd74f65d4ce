#include "dbo/transform.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace dbo {

namespace {

// FFTW planner is not thread-safe; plans are cached per size and executed
// with fftw_execute_dft on per-call buffers, which is thread-safe.
struct PlanPair {
    fftw_plan forward = nullptr;
    fftw_plan backward = nullptr;
};

std::mutex planner_mutex;

PlanPair& plans_for(int n) {
    static std::map<int, PlanPair> cache;
    std::lock_guard<std::mutex> lock(planner_mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    fftw_complex* buf = fftw_alloc_complex(n);
    PlanPair p;
    p.forward = fftw_plan_dft_1d(n, buf, buf, FFTW_FORWARD, FFTW_ESTIMATE);
    p.backward = fftw_plan_dft_1d(n, buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE);
    fftw_free(buf);
    return cache.emplace(n, p).first->second;
}

struct Buffer {
    fftw_complex* data;
    explicit Buffer(int n) : data(fftw_alloc_complex(n)) {}
    ~Buffer() { fftw_free(data); }
    Buffer(const Buffer&) = delete;
    Buffer& operator=(const Buffer&) = delete;
};

} // namespace

SpectralField forward_transform(const PhysicalField& f) {
    if (!f.grid) throw std::invalid_argument("field has no grid");
    if (!f.all_finite()) throw std::invalid_argument("non-finite samples");
    const int n = f.grid->n_points;
    const double dx = f.grid->dx;

    Buffer buf(n);
    for (int j = 0; j < n; ++j) {
        buf.data[j][0] = f.samples[j];
        buf.data[j][1] = 0.0;
    }
    fftw_execute_dft(plans_for(n).forward, buf.data, buf.data);

    // x_j = -L + j dx gives e^{-i xi_k x_j} = (-1)^k e^{-2 pi i k j / n}.
    std::vector<cplx> coeff(n);
    for (int i = 0; i < n; ++i) {
        const int k = i - n / 2;
        const int m = (k + n) % n;
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        coeff[i] = sign * dx * cplx(buf.data[m][0], buf.data[m][1]);
    }
    return SpectralField(f.grid, std::move(coeff));
}

namespace {

void inverse_into(const SpectralField& F, Buffer& buf) {
    const int n = F.grid->n_points;
    const double scale = 1.0 / (n * F.grid->dx);
    for (int i = 0; i < n; ++i) {
        const int k = i - n / 2;
        const int m = (k + n) % n;
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        const cplx v = sign * scale * F.coefficients[i];
        buf.data[m][0] = v.real();
        buf.data[m][1] = v.imag();
    }
    fftw_execute_dft(plans_for(n).backward, buf.data, buf.data);
}

} // namespace

PhysicalField inverse_transform(const SpectralField& F) {
    if (!F.grid) throw std::invalid_argument("field has no grid");
    const int n = F.grid->n_points;
    for (const cplx& c : F.coefficients)
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
            throw std::invalid_argument("non-finite coefficients");

    Buffer buf(n);
    inverse_into(F, buf);
    std::vector<double> samples(n);
    for (int j = 0; j < n; ++j) samples[j] = buf.data[j][0];
    return PhysicalField(F.grid, std::move(samples));
}

double inverse_imag_residual(const SpectralField& F) {
    const int n = F.grid->n_points;
    Buffer buf(n);
    inverse_into(F, buf);
    double im2 = 0.0, tot2 = 0.0;
    for (int j = 0; j < n; ++j) {
        im2 += buf.data[j][1] * buf.data[j][1];
        tot2 += buf.data[j][0] * buf.data[j][0] + buf.data[j][1] * buf.data[j][1];
    }
    return tot2 > 0.0 ? std::sqrt(im2 / tot2) : 0.0;
}

} // namespace dbo
