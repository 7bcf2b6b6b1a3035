// AVX2 variants of the statevector kernels. Compiled with -mavx2 and selected
// at runtime; see dispatch.cpp. Each __m256d holds two complex<double>.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <bit>
#include <cmath>

#include "cswitch/kernels.hpp"

namespace cswitch::kernels {
namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

inline double* dp(cplx* p) { return reinterpret_cast<double*>(p); }
inline const double* dp(const cplx* p) { return reinterpret_cast<const double*>(p); }

// Complex multiply of two packed pairs (re0, im0, re1, im1).
inline __m256d cmul(__m256d a, __m256d b) {
  __m256d b_re = _mm256_movedup_pd(b);                 // (br0, br0, br1, br1)
  __m256d b_im = _mm256_permute_pd(b, 0xF);            // (bi0, bi0, bi1, bi1)
  __m256d a_sw = _mm256_permute_pd(a, 0x5);            // (ai0, ar0, ai1, ar1)
  return _mm256_fmaddsub_pd(a, b_re, _mm256_mul_pd(a_sw, b_im));
}

void v_apply_h(cplx* a, size_t n, uint32_t q) {
  const size_t stride = size_t(1) << q;
  const __m256d f = _mm256_set1_pd(kInvSqrt2);
  if (stride == 1) {
    if (n < 4) {
      for (size_t i = 0; i < n; i += 2) {
        cplx u = a[i], v = a[i + 1];
        a[i] = (u + v) * kInvSqrt2;
        a[i + 1] = (u - v) * kInvSqrt2;
      }
      return;
    }
    // Pairs are adjacent; process two pairs (4 amplitudes) per iteration.
    for (size_t i = 0; i + 8 <= 2 * n; i += 8) {
      __m256d lo = _mm256_loadu_pd(dp(a) + i);      // a[i/2], a[i/2+1]
      __m256d hi = _mm256_loadu_pd(dp(a) + i + 4);  // next two
      // Reshuffle into (u0,u1) and (v0,v1): u = even amps, v = odd amps.
      __m256d u = _mm256_permute2f128_pd(lo, hi, 0x20);
      __m256d v = _mm256_permute2f128_pd(lo, hi, 0x31);
      __m256d s = _mm256_mul_pd(_mm256_add_pd(u, v), f);
      __m256d d = _mm256_mul_pd(_mm256_sub_pd(u, v), f);
      _mm256_storeu_pd(dp(a) + i, _mm256_permute2f128_pd(s, d, 0x20));
      _mm256_storeu_pd(dp(a) + i + 4, _mm256_permute2f128_pd(s, d, 0x31));
    }
    return;
  }
  for (size_t hi = 0; hi < n; hi += 2 * stride) {
    for (size_t lo = 0; lo < stride; lo += 2) {
      double* pu = dp(a + hi + lo);
      double* pv = dp(a + hi + lo + stride);
      __m256d u = _mm256_loadu_pd(pu);
      __m256d v = _mm256_loadu_pd(pv);
      _mm256_storeu_pd(pu, _mm256_mul_pd(_mm256_add_pd(u, v), f));
      _mm256_storeu_pd(pv, _mm256_mul_pd(_mm256_sub_pd(u, v), f));
    }
  }
}

void v_apply_phase(cplx* a, size_t n, uint32_t q, cplx phase) {
  const size_t stride = size_t(1) << q;
  const __m256d ph = _mm256_setr_pd(phase.real(), phase.imag(), phase.real(), phase.imag());
  if (stride == 1) {
    for (size_t i = 1; i < n; i += 2) a[i] *= phase;
    return;
  }
  for (size_t hi = 0; hi < n; hi += 2 * stride) {
    for (size_t lo = 0; lo < stride; lo += 2) {
      double* pv = dp(a + hi + lo + stride);
      _mm256_storeu_pd(pv, cmul(_mm256_loadu_pd(pv), ph));
    }
  }
}

void v_apply_x(cplx* a, size_t n, uint32_t q) {
  const size_t stride = size_t(1) << q;
  if (stride == 1) {
    for (size_t i = 0; i < n; i += 2) std::swap(a[i], a[i + 1]);
    return;
  }
  for (size_t hi = 0; hi < n; hi += 2 * stride) {
    for (size_t lo = 0; lo < stride; lo += 2) {
      double* pu = dp(a + hi + lo);
      double* pv = dp(a + hi + lo + stride);
      __m256d u = _mm256_loadu_pd(pu);
      __m256d v = _mm256_loadu_pd(pv);
      _mm256_storeu_pd(pu, v);
      _mm256_storeu_pd(pv, u);
    }
  }
}

void v_apply_y(cplx* a, size_t n, uint32_t q) {
  const size_t stride = size_t(1) << q;
  // -i*v = (v.im, -v.re); i*u = (-u.im, u.re)
  const __m256d neg_im = _mm256_setr_pd(1.0, -1.0, 1.0, -1.0);
  const __m256d neg_re = _mm256_setr_pd(-1.0, 1.0, -1.0, 1.0);
  if (stride == 1) {
    const cplx im(0.0, 1.0);
    for (size_t i = 0; i < n; i += 2) {
      cplx u = a[i], v = a[i + 1];
      a[i] = -im * v;
      a[i + 1] = im * u;
    }
    return;
  }
  for (size_t hi = 0; hi < n; hi += 2 * stride) {
    for (size_t lo = 0; lo < stride; lo += 2) {
      double* pu = dp(a + hi + lo);
      double* pv = dp(a + hi + lo + stride);
      __m256d u = _mm256_loadu_pd(pu);
      __m256d v = _mm256_loadu_pd(pv);
      _mm256_storeu_pd(pu, _mm256_mul_pd(_mm256_permute_pd(v, 0x5), neg_im));
      _mm256_storeu_pd(pv, _mm256_mul_pd(_mm256_permute_pd(u, 0x5), neg_re));
    }
  }
}

void v_apply_cnot(cplx* a, size_t n, uint32_t c, uint32_t t) {
  const size_t cbit = size_t(1) << c;
  const size_t tbit = size_t(1) << t;
  if (tbit == 1) {
    for (size_t i = 0; i < n; i += 2) {
      if (i & cbit) std::swap(a[i], a[i + 1]);
    }
    return;
  }
  if (cbit == 1) {
    // Control on bit 0: the two lanes of a vector differ, keep it scalar.
    for (size_t hi = 0; hi < n; hi += 2 * tbit) {
      for (size_t lo = 1; lo < tbit; lo += 2) {
        std::swap(a[hi + lo], a[hi + lo + tbit]);
      }
    }
    return;
  }
  // Iterate over blocks with control set and target clear.
  for (size_t hi = 0; hi < n; hi += 2 * tbit) {
    for (size_t lo = 0; lo < tbit; lo += 2) {
      size_t i = hi + lo;
      if (!(i & cbit)) continue;
      double* pu = dp(a + i);
      double* pv = dp(a + i + tbit);
      __m256d u = _mm256_loadu_pd(pu);
      __m256d v = _mm256_loadu_pd(pv);
      _mm256_storeu_pd(pu, v);
      _mm256_storeu_pd(pv, u);
    }
  }
}

double v_prob_one(const cplx* a, size_t n, uint32_t q) {
  const size_t stride = size_t(1) << q;
  __m256d acc = _mm256_setzero_pd();
  double tail = 0.0;
  if (stride == 1) {
    for (size_t i = 1; i < n; i += 2) tail += std::norm(a[i]);
    return tail;
  }
  for (size_t hi = 0; hi < n; hi += 2 * stride) {
    for (size_t lo = 0; lo < stride; lo += 2) {
      __m256d v = _mm256_loadu_pd(dp(a + hi + lo + stride));
      acc = _mm256_fmadd_pd(v, v, acc);
    }
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  return lanes[0] + lanes[1] + lanes[2] + lanes[3] + tail;
}

void v_project(cplx* a, size_t n, uint32_t q, int outcome, double norm) {
  const size_t stride = size_t(1) << q;
  const double scale = 1.0 / std::sqrt(norm);
  const __m256d sc = _mm256_set1_pd(scale);
  const __m256d zero = _mm256_setzero_pd();
  if (stride == 1) {
    for (size_t i = 0; i < n; i += 2) {
      a[i + outcome] *= scale;
      a[i + 1 - outcome] = 0.0;
    }
    return;
  }
  for (size_t hi = 0; hi < n; hi += 2 * stride) {
    for (size_t lo = 0; lo < stride; lo += 2) {
      double* pu = dp(a + hi + lo);
      double* pv = dp(a + hi + lo + stride);
      double* keep = outcome ? pv : pu;
      double* kill = outcome ? pu : pv;
      _mm256_storeu_pd(keep, _mm256_mul_pd(_mm256_loadu_pd(keep), sc));
      _mm256_storeu_pd(kill, zero);
    }
  }
}

double v_expect_pauli(const cplx* a, size_t n, uint64_t xm, uint64_t zm, uint8_t k) {
  const cplx ik = (k == 0) ? cplx(1, 0) : (k == 1) ? cplx(0, 1) : (k == 2) ? cplx(-1, 0) : cplx(0, -1);
  double acc = 0.0;
  if (xm == 0) {
    // Diagonal: sum (-1)^{j.zm} |a[j]|^2, vectorized with sign flips.
    __m256d vac = _mm256_setzero_pd();
    for (size_t j = 0; j + 2 <= n; j += 2) {
      __m256d v = _mm256_loadu_pd(dp(a + j));
      __m256d sq = _mm256_mul_pd(v, v);
      double s0 = (std::popcount(j & zm) & 1) ? -1.0 : 1.0;
      double s1 = (std::popcount((j + 1) & zm) & 1) ? -1.0 : 1.0;
      __m256d sg = _mm256_setr_pd(s0, s0, s1, s1);
      vac = _mm256_fmadd_pd(sq, sg, vac);
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, vac);
    acc = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    return acc * ik.real();
  }
  // Generic case; scalar body (memory-gather bound, little SIMD benefit).
  for (size_t j = 0; j < n; ++j) {
    size_t src = j ^ xm;
    double s = (std::popcount(src & zm) & 1) ? -1.0 : 1.0;
    acc += (std::conj(a[j]) * (ik * s) * a[src]).real();
  }
  return acc;
}

cplx v_inner_product(const cplx* a, const cplx* b, size_t n) {
  // conj(a)*b accumulated in two lanes.
  __m256d acc = _mm256_setzero_pd();
  const __m256d conj_mask = _mm256_setr_pd(1.0, -1.0, 1.0, -1.0);
  for (size_t i = 0; i + 2 <= n; i += 2) {
    __m256d va = _mm256_mul_pd(_mm256_loadu_pd(dp(a + i)), conj_mask);
    __m256d vb = _mm256_loadu_pd(dp(b + i));
    acc = _mm256_add_pd(acc, cmul(va, vb));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  cplx out(lanes[0] + lanes[2], lanes[1] + lanes[3]);
  if (n & 1) out += std::conj(a[n - 1]) * b[n - 1];
  return out;
}

double v_norm_sq(const cplx* a, size_t n) {
  __m256d acc = _mm256_setzero_pd();
  for (size_t i = 0; i + 2 <= n; i += 2) {
    __m256d v = _mm256_loadu_pd(dp(a + i));
    acc = _mm256_fmadd_pd(v, v, acc);
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double out = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  if (n & 1) out += std::norm(a[n - 1]);
  return out;
}

}  // namespace

const KernelTable* avx2_table() {
  static const KernelTable t = {
      v_apply_h, v_apply_phase, v_apply_x, v_apply_y, v_apply_cnot,
      v_prob_one, v_project, v_expect_pauli, v_inner_product, v_norm_sq,
  };
  return &t;
}

}  // namespace cswitch::kernels

#else

#include "cswitch/kernels.hpp"

namespace cswitch::kernels {
const KernelTable* avx2_table() { return nullptr; }
}  // namespace cswitch::kernels

#endif
