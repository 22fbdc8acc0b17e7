#include "inscribe/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace inscribe {

std::vector<BoxLabel> classify_boxes(DomainEstimator& est, std::span<const Box> boxes, double t,
                                     int threads) {
    est.prepare(t);
    std::vector<BoxLabel> labels(boxes.size());
    const DomainEstimator& cest = est;
#ifdef _OPENMP
    if (threads > 1) {
#pragma omp parallel for schedule(static) num_threads(threads)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(boxes.size()); ++i)
            labels[i] = cest.classify(boxes[i], t);
        return labels;
    }
#else
    (void)threads;
#endif
    for (std::size_t i = 0; i < boxes.size(); ++i) labels[i] = cest.classify(boxes[i], t);
    return labels;
}

std::vector<BoxLabel> classify_boxes_serial(DomainEstimator& est, std::span<const Box> boxes,
                                            double t) {
    est.prepare(t);
    std::vector<BoxLabel> labels(boxes.size());
    const DomainEstimator& cest = est;
    for (std::size_t i = 0; i < boxes.size(); ++i) labels[i] = cest.classify(boxes[i], t);
    return labels;
}

int hardware_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace inscribe
