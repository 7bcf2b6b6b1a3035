#include <bit>
#include <cmath>

#include "cswitch/kernels.hpp"

// Reference kernels. Loops are written over pair blocks: for target qubit q
// the pairs are (base, base + 2^q) with base ranging over indices whose q-th
// bit is clear.

namespace cswitch::kernels {
namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

void s_apply_h(cplx* a, size_t n, uint32_t q) {
  const size_t stride = size_t(1) << q;
  for (size_t hi = 0; hi < n; hi += 2 * stride) {
    for (size_t lo = 0; lo < stride; ++lo) {
      cplx u = a[hi + lo];
      cplx v = a[hi + lo + stride];
      a[hi + lo] = (u + v) * kInvSqrt2;
      a[hi + lo + stride] = (u - v) * kInvSqrt2;
    }
  }
}

void s_apply_phase(cplx* a, size_t n, uint32_t q, cplx phase) {
  const size_t stride = size_t(1) << q;
  for (size_t hi = 0; hi < n; hi += 2 * stride) {
    for (size_t lo = 0; lo < stride; ++lo) {
      a[hi + lo + stride] *= phase;
    }
  }
}

void s_apply_x(cplx* a, size_t n, uint32_t q) {
  const size_t stride = size_t(1) << q;
  for (size_t hi = 0; hi < n; hi += 2 * stride) {
    for (size_t lo = 0; lo < stride; ++lo) {
      std::swap(a[hi + lo], a[hi + lo + stride]);
    }
  }
}

void s_apply_y(cplx* a, size_t n, uint32_t q) {
  const size_t stride = size_t(1) << q;
  const cplx im(0.0, 1.0);
  for (size_t hi = 0; hi < n; hi += 2 * stride) {
    for (size_t lo = 0; lo < stride; ++lo) {
      cplx u = a[hi + lo];
      cplx v = a[hi + lo + stride];
      a[hi + lo] = -im * v;
      a[hi + lo + stride] = im * u;
    }
  }
}

void s_apply_cnot(cplx* a, size_t n, uint32_t c, uint32_t t) {
  const size_t cbit = size_t(1) << c;
  const size_t tbit = size_t(1) << t;
  for (size_t i = 0; i < n; ++i) {
    if ((i & cbit) && !(i & tbit)) {
      std::swap(a[i], a[i | tbit]);
    }
  }
}

double s_prob_one(const cplx* a, size_t n, uint32_t q) {
  const size_t stride = size_t(1) << q;
  double p = 0.0;
  for (size_t hi = 0; hi < n; hi += 2 * stride) {
    for (size_t lo = 0; lo < stride; ++lo) {
      p += std::norm(a[hi + lo + stride]);
    }
  }
  return p;
}

void s_project(cplx* a, size_t n, uint32_t q, int outcome, double norm) {
  const size_t stride = size_t(1) << q;
  const double scale = 1.0 / std::sqrt(norm);
  for (size_t hi = 0; hi < n; hi += 2 * stride) {
    for (size_t lo = 0; lo < stride; ++lo) {
      size_t keep = hi + lo + (outcome ? stride : 0);
      size_t kill = hi + lo + (outcome ? 0 : stride);
      a[keep] *= scale;
      a[kill] = 0.0;
    }
  }
}

double s_expect_pauli(const cplx* a, size_t n, uint64_t xm, uint64_t zm, uint8_t k) {
  // <psi|P|psi> = sum_j conj(a[j]) * phase(j) * a[j ^ xm], with
  // phase(j) = i^k * (-1)^{popcount(j & zm)} applied to the source index
  // j ^ xm of the X-flip. P acts as P|j'> = i^k (-1)^{j' . zm} |j' ^ xm>.
  double acc = 0.0;
  const cplx ik = (k == 0) ? cplx(1, 0) : (k == 1) ? cplx(0, 1) : (k == 2) ? cplx(-1, 0) : cplx(0, -1);
  for (size_t j = 0; j < n; ++j) {
    size_t src = j ^ xm;
    double s = (std::popcount(src & zm) & 1) ? -1.0 : 1.0;
    acc += (std::conj(a[j]) * (ik * s) * a[src]).real();
  }
  return acc;
}

cplx s_inner_product(const cplx* a, const cplx* b, size_t n) {
  cplx acc(0, 0);
  for (size_t i = 0; i < n; ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

double s_norm_sq(const cplx* a, size_t n) {
  double acc = 0.0;
  for (size_t i = 0; i < n; ++i) acc += std::norm(a[i]);
  return acc;
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable t = {
      s_apply_h, s_apply_phase, s_apply_x, s_apply_y, s_apply_cnot,
      s_prob_one, s_project, s_expect_pauli, s_inner_product, s_norm_sq,
  };
  return t;
}

}  // namespace cswitch::kernels
