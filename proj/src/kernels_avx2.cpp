// AVX2/FMA kernels. This translation unit is compiled with -mavx2 -mfma on
// x86-64 targets; dispatch stays behind a runtime CPU check so the binary
// still runs on machines without AVX2.

#include "tcs/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#define TCS_HAVE_AVX2_TU 1
#include <immintrin.h>
#else
#define TCS_HAVE_AVX2_TU 0
#endif

namespace tcs::kernels {

#if TCS_HAVE_AVX2_TU

namespace {

double dot_avx2(const double* x, const double* y, std::size_t n)
{
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 4), _mm256_loadu_pd(y + i + 4), acc1);
    }
    for (; i + 4 <= n; i += 4)
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
    acc0 = _mm256_add_pd(acc0, acc1);
    __m128d lo = _mm256_castpd256_pd128(acc0);
    __m128d hi = _mm256_extractf128_pd(acc0, 1);
    lo = _mm_add_pd(lo, hi);
    lo = _mm_add_sd(lo, _mm_unpackhi_pd(lo, lo));
    double acc = _mm_cvtsd_f64(lo);
    for (; i < n; ++i)
        acc += x[i] * y[i];
    return acc;
}

void axpy_avx2(double a, const double* x, double* y, std::size_t n)
{
    const __m256d va = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d vy = _mm256_loadu_pd(y + i);
        vy = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), vy);
        _mm256_storeu_pd(y + i, vy);
    }
    for (; i < n; ++i)
        y[i] += a * x[i];
}

void rot_avx2(double* x, double* y, std::size_t n, double c, double s)
{
    const __m256d vc = _mm256_set1_pd(c);
    const __m256d vs = _mm256_set1_pd(s);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d vx = _mm256_loadu_pd(x + i);
        const __m256d vy = _mm256_loadu_pd(y + i);
        _mm256_storeu_pd(x + i, _mm256_fmsub_pd(vc, vx, _mm256_mul_pd(vs, vy)));
        _mm256_storeu_pd(y + i, _mm256_fmadd_pd(vs, vx, _mm256_mul_pd(vc, vy)));
    }
    for (; i < n; ++i) {
        const double xi = x[i];
        const double yi = y[i];
        x[i] = c * xi - s * yi;
        y[i] = s * xi + c * yi;
    }
}

void gemv_avx2(const double* a, std::size_t dim, const double* x, double* y)
{
    for (std::size_t i = 0; i < dim; ++i)
        y[i] = dot_avx2(a + i * dim, x, dim);
}

bool cpu_has_avx2_fma()
{
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

} // namespace

const Backend* avx2_backend()
{
    static const Backend backend{"avx2", dot_avx2, axpy_avx2, rot_avx2, gemv_avx2};
    static const bool usable = cpu_has_avx2_fma();
    return usable ? &backend : nullptr;
}

#else

const Backend* avx2_backend()
{
    return nullptr;
}

#endif

} // namespace tcs::kernels
