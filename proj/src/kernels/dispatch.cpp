#include <atomic>

#include "dgli/error.hpp"
#include "dgli/kernels.hpp"

namespace dgli::kernels {

namespace {

Backend detect_default() {
#ifdef DGLI_HAVE_AVX2
    if (__builtin_cpu_supports("avx2")) return Backend::avx2;
#endif
    return Backend::scalar;
}

std::atomic<Backend>& current() {
    static std::atomic<Backend> backend{detect_default()};
    return backend;
}

}  // namespace

bool backend_supported(Backend b) {
    switch (b) {
        case Backend::scalar:
            return true;
        case Backend::avx2:
#ifdef DGLI_HAVE_AVX2
            return __builtin_cpu_supports("avx2");
#else
            return false;
#endif
    }
    return false;
}

Backend active_backend() { return current().load(); }

void set_backend(Backend b) {
    if (!backend_supported(b)) {
        throw Error("kernel backend not supported on this machine: " +
                    backend_name(b));
    }
    current().store(b);
}

std::string backend_name(Backend b) {
    switch (b) {
        case Backend::scalar: return "scalar";
        case Backend::avx2: return "avx2";
    }
    return "unknown";
}

void PairBatch::reserve(std::size_t n) {
    for (auto* col : {&ax, &ay, &az, &bx, &by, &bz, &cx, &cy, &cz, &dx, &dy, &dz}) {
        col->reserve(n);
    }
}

void PairBatch::clear() {
    for (auto* col : {&ax, &ay, &az, &bx, &by, &bz, &cx, &cy, &cz, &dx, &dy, &dz}) {
        col->clear();
    }
}

void PairBatch::push(const Segment& first, const Segment& second) {
    ax.push_back(first.start.x);
    ay.push_back(first.start.y);
    az.push_back(first.start.z);
    bx.push_back(first.end.x);
    by.push_back(first.end.y);
    bz.push_back(first.end.z);
    cx.push_back(second.start.x);
    cy.push_back(second.start.y);
    cz.push_back(second.start.z);
    dx.push_back(second.end.x);
    dy.push_back(second.end.y);
    dz.push_back(second.end.z);
}

void gli_batch(const PairBatch& batch, double* out) {
#ifdef DGLI_HAVE_AVX2
    if (active_backend() == Backend::avx2) {
        gli_batch_avx2(batch, out);
        return;
    }
#endif
    gli_batch_scalar(batch, out);
}

#ifndef DGLI_HAVE_AVX2
void gli_batch_avx2(const PairBatch&, double*) {
    throw Error("avx2 kernel not built");
}
#endif

}  // namespace dgli::kernels
