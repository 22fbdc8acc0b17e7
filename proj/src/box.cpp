#include "inscribe/box.hpp"

#include <cmath>

namespace inscribe {

Box::Box(std::vector<double> lo_, std::vector<double> hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
    if (lo.size() != hi.size() || lo.empty())
        throw Error("box corners must be non-empty vectors of equal dimension");
    for (std::size_t i = 0; i < lo.size(); ++i)
        if (!(lo[i] <= hi[i])) throw Error("box has lo > hi on axis " + std::to_string(i));
}

double Box::diameter() const {
    double s = 0.0;
    for (std::size_t i = 0; i < lo.size(); ++i) {
        const double w = hi[i] - lo[i];
        s += w * w;
    }
    return std::sqrt(s);
}

std::vector<double> Box::center() const {
    std::vector<double> c(lo.size());
    for (std::size_t i = 0; i < lo.size(); ++i) c[i] = 0.5 * (lo[i] + hi[i]);
    return c;
}

double Box::volume() const {
    double v = 1.0;
    for (std::size_t i = 0; i < lo.size(); ++i) v *= hi[i] - lo[i];
    return v;
}

bool Box::contains(std::span<const double> x) const {
    if (x.size() != lo.size()) throw Error("point dimension does not match box dimension");
    for (std::size_t i = 0; i < lo.size(); ++i)
        if (x[i] < lo[i] || x[i] > hi[i]) return false;
    return true;
}

std::vector<Box> split(const Box& b) {
    const std::size_t n = b.dim();
    std::vector<double> mid(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (b.hi[i] <= b.lo[i]) throw Error("cannot split box with zero-width axis " + std::to_string(i));
        mid[i] = 0.5 * (b.lo[i] + b.hi[i]);
    }
    std::vector<Box> out;
    out.reserve(std::size_t{1} << n);
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        Box child;
        child.lo.resize(n);
        child.hi.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (std::size_t{1} << i)) {
                child.lo[i] = mid[i];
                child.hi[i] = b.hi[i];
            } else {
                child.lo[i] = b.lo[i];
                child.hi[i] = mid[i];
            }
        }
        out.push_back(std::move(child));
    }
    return out;
}

void ActiveSet::split_all() {
    std::vector<Box> next;
    next.reserve(boxes_.size() * 4);
    for (const Box& b : boxes_)
        for (Box& c : split(b)) next.push_back(std::move(c));
    boxes_ = std::move(next);
}

std::size_t ActiveSet::prune(const std::vector<bool>& keep) {
    std::vector<Box> next;
    next.reserve(boxes_.size());
    for (std::size_t i = 0; i < boxes_.size(); ++i)
        if (keep[i]) next.push_back(std::move(boxes_[i]));
    const std::size_t removed = boxes_.size() - next.size();
    boxes_ = std::move(next);
    return removed;
}

}  // namespace inscribe
