#include "dgli/kernels.hpp"

#include "gli_core.hpp"

namespace dgli::kernels {

void gli_batch_scalar(const PairBatch& b, double* out) {
    for (std::size_t i = 0; i < b.size(); ++i) {
        out[i] = detail::gli_pair(b.ax[i], b.ay[i], b.az[i], b.bx[i], b.by[i],
                                  b.bz[i], b.cx[i], b.cy[i], b.cz[i], b.dx[i],
                                  b.dy[i], b.dz[i]);
    }
}

}  // namespace dgli::kernels
