#pragma once

#include <cstddef>
#include <cstdint>

// Integer lattice-counting inner loops. Each kernel has a scalar reference and an
// AVX2 variant; the active table is picked once from cpuid.
namespace swh::kernels {

enum class Backend { Scalar, Avx2 };

struct Table {
  // d[i] += s[i]
  void (*add)(int64_t* d, const int64_t* s, size_t len);
  // d[i] -= s[i]
  void (*sub)(int64_t* d, const int64_t* s, size_t len);
  // d[k] += d[k - stride] for k = stride..len-1, in increasing k
  void (*stride_accumulate)(int64_t* d, size_t len, size_t stride);
  // out[i] = in[i] + c
  void (*broadcast_add)(int64_t* out, const int64_t* in, size_t len, int64_t c);
};

const Table& scalar_table();
const Table& avx2_table();  // same as scalar_table() when built without AVX2
bool avx2_available();

const Table& active();
Backend active_backend();
// For tests and benchmarks; falls back to scalar if AVX2 is missing.
void force_backend(Backend b);

}  // namespace swh::kernels
