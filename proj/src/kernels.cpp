#include "ttlearn/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>

namespace ttlearn::kernels {

namespace {

const Backend* pick_default() {
  if (const char* env = std::getenv("TTLEARN_KERNELS")) {
    const std::string name(env);
    if (name == "scalar") {
      return &reference();
    }
    if (name == "avx2") {
      if (const Backend* b = avx2()) {
        return b;
      }
      throw std::invalid_argument("TTLEARN_KERNELS=avx2 but CPU lacks AVX2/FMA");
    }
    throw std::invalid_argument("unknown TTLEARN_KERNELS value: " + name);
  }
  if (const Backend* b = avx2()) {
    return b;
  }
  return &reference();
}

std::atomic<const Backend*>& slot() {
  static std::atomic<const Backend*> current{pick_default()};
  return current;
}

}  // namespace

const Backend& active() { return *slot().load(std::memory_order_relaxed); }

void force_backend(const std::string& name) {
  if (name == "scalar") {
    slot().store(&reference(), std::memory_order_relaxed);
    return;
  }
  if (name == "avx2") {
    if (const Backend* b = avx2()) {
      slot().store(b, std::memory_order_relaxed);
      return;
    }
    throw std::invalid_argument("avx2 backend unavailable on this CPU");
  }
  throw std::invalid_argument("unknown kernel backend: " + name);
}

}  // namespace ttlearn::kernels
