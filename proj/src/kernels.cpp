#include "sdc/kernels.hpp"

#include <cstdlib>
#include <stdexcept>

namespace sdc::kernels {

#ifdef SDC_HAVE_AVX2
const Dispatch& avx2();
#endif
#ifdef SDC_HAVE_NEON
const Dispatch& neon();
#endif

namespace {

const Dispatch* pick_auto() {
#ifdef SDC_HAVE_AVX2
    if (__builtin_cpu_supports("avx2")) return &avx2();
#endif
#ifdef SDC_HAVE_NEON
    return &neon();
#endif
    return &scalar();
}

const Dispatch* resolve(const std::string& name) {
    if (name == "auto") return pick_auto();
    if (name == "scalar") return &scalar();
#ifdef SDC_HAVE_AVX2
    if (name == "avx2") {
        if (!__builtin_cpu_supports("avx2"))
            throw std::runtime_error("kernel variant 'avx2' not supported by this CPU");
        return &avx2();
    }
#endif
#ifdef SDC_HAVE_NEON
    if (name == "neon") return &neon();
#endif
    throw std::runtime_error("unknown kernel variant '" + name + "'");
}

const Dispatch*& selected() {
    static const Dispatch* d = [] {
        const char* env = std::getenv("SDF_KERNEL");
        return resolve(env ? env : "auto");
    }();
    return d;
}

}  // namespace

const Dispatch& active() { return *selected(); }

void force(const std::string& name) { selected() = resolve(name); }

std::vector<std::string> available() {
    std::vector<std::string> v{"auto", "scalar"};
#ifdef SDC_HAVE_AVX2
    if (__builtin_cpu_supports("avx2")) v.push_back("avx2");
#endif
#ifdef SDC_HAVE_NEON
    v.push_back("neon");
#endif
    return v;
}

}  // namespace sdc::kernels
