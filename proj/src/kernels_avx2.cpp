#include <immintrin.h>

#include "swh/kernels.hpp"

namespace swh::kernels {

namespace {

void add_avx2(int64_t* d, const int64_t* s, size_t len) {
  size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(d + i));
    __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(s + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(d + i), _mm256_add_epi64(a, b));
  }
  for (; i < len; ++i) d[i] += s[i];
}

void sub_avx2(int64_t* d, const int64_t* s, size_t len) {
  size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(d + i));
    __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(s + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(d + i), _mm256_sub_epi64(a, b));
  }
  for (; i < len; ++i) d[i] -= s[i];
}

// Lanes k..k+3 only read d[k-stride..k-stride+3], all final once stride >= 4.
void stride_accumulate_avx2(int64_t* d, size_t len, size_t stride) {
  if (stride == 0) return;
  size_t k = stride;
  if (stride >= 4) {
    for (; k + 4 <= len; k += 4) {
      __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(d + k));
      __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(d + k - stride));
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(d + k), _mm256_add_epi64(a, b));
    }
  }
  for (; k < len; ++k) d[k] += d[k - stride];
}

void broadcast_add_avx2(int64_t* out, const int64_t* in, size_t len, int64_t c) {
  __m256i vc = _mm256_set1_epi64x(c);
  size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), _mm256_add_epi64(a, vc));
  }
  for (; i < len; ++i) out[i] = in[i] + c;
}

const Table kAvx2{add_avx2, sub_avx2, stride_accumulate_avx2, broadcast_add_avx2};

}  // namespace

const Table* avx2_table_ptr() { return &kAvx2; }

}  // namespace swh::kernels
