#include "swh/kernels.hpp"

#include <atomic>

namespace swh::kernels {

namespace {

void add_scalar(int64_t* d, const int64_t* s, size_t len) {
  for (size_t i = 0; i < len; ++i) d[i] += s[i];
}

void sub_scalar(int64_t* d, const int64_t* s, size_t len) {
  for (size_t i = 0; i < len; ++i) d[i] -= s[i];
}

void stride_accumulate_scalar(int64_t* d, size_t len, size_t stride) {
  if (stride == 0) return;
  for (size_t k = stride; k < len; ++k) d[k] += d[k - stride];
}

void broadcast_add_scalar(int64_t* out, const int64_t* in, size_t len, int64_t c) {
  for (size_t i = 0; i < len; ++i) out[i] = in[i] + c;
}

const Table kScalar{add_scalar, sub_scalar, stride_accumulate_scalar, broadcast_add_scalar};

}  // namespace

// defined in kernels_avx2.cpp
const Table* avx2_table_ptr();

const Table& scalar_table() { return kScalar; }

bool avx2_available() {
#if defined(__x86_64__) || defined(__i386__)
  return avx2_table_ptr() != nullptr && __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const Table& avx2_table() { return avx2_available() ? *avx2_table_ptr() : kScalar; }

namespace {
std::atomic<const Table*> g_active{nullptr};
std::atomic<Backend> g_backend{Backend::Scalar};
}  // namespace

const Table& active() {
  const Table* t = g_active.load(std::memory_order_acquire);
  if (!t) {
    bool v = avx2_available();
    t = v ? avx2_table_ptr() : &kScalar;
    g_backend.store(v ? Backend::Avx2 : Backend::Scalar);
    g_active.store(t, std::memory_order_release);
  }
  return *t;
}

Backend active_backend() {
  active();
  return g_backend.load();
}

void force_backend(Backend b) {
  if (b == Backend::Avx2 && avx2_available()) {
    g_backend.store(Backend::Avx2);
    g_active.store(avx2_table_ptr());
  } else {
    g_backend.store(Backend::Scalar);
    g_active.store(&kScalar);
  }
}

}  // namespace swh::kernels
