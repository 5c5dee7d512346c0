#include <cstdlib>

#include "krein/kernels.hpp"

namespace krein::kern {

bool avx2_available() {
#if (defined(__x86_64__) || defined(_M_X64)) && defined(__GNUC__)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

#if !(defined(__x86_64__) || defined(_M_X64))
const Ops& avx2_ops() { return scalar_ops(); }
#endif

namespace {

struct Selection {
  const Ops* ops;
  std::string name;
};

Selection select() {
  const char* env = std::getenv("KREIN_KERNELS");
  if (env != nullptr) {
    std::string want(env);
    if (want == "scalar") return {&scalar_ops(), "scalar"};
    if (want == "avx2" && avx2_available()) return {&avx2_ops(), "avx2"};
  }
  if (avx2_available()) return {&avx2_ops(), "avx2"};
  return {&scalar_ops(), "scalar"};
}

const Selection& selection() {
  static const Selection s = select();
  return s;
}

}  // namespace

const Ops& ops() { return *selection().ops; }
const std::string& active_kernel_name() { return selection().name; }

}  // namespace krein::kern
