#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "dgli/geometry.hpp"

namespace dgli::kernels {

enum class Backend { scalar, avx2 };

bool backend_supported(Backend b);
Backend active_backend();
// Throws Error if the backend is not supported on this machine.
void set_backend(Backend b);
std::string backend_name(Backend b);

// Structure-of-arrays layout for segment pairs (a,b) = first segment,
// (c,d) = second.  Callers canonicalize operand order before pushing.
struct PairBatch {
    std::vector<double> ax, ay, az, bx, by, bz;
    std::vector<double> cx, cy, cz, dx, dy, dz;

    std::size_t size() const { return ax.size(); }
    void reserve(std::size_t n);
    void clear();
    void push(const Segment& first, const Segment& second);
};

// Writing-integral value for every pair in the batch, dispatched to the
// active backend.  out must hold batch.size() doubles.
void gli_batch(const PairBatch& batch, double* out);

void gli_batch_scalar(const PairBatch& batch, double* out);
// Throws Error when this build carries no avx2 kernel; check
// backend_supported(Backend::avx2) first.
void gli_batch_avx2(const PairBatch& batch, double* out);

}  // namespace dgli::kernels
