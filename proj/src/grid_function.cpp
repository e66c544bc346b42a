#include "quarklet/grid_function.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace quarklet {

GridFunction::GridFunction(Window w, int level, std::vector<double> samples, Interp interp)
    : window_(w), level_(level), samples_(std::move(samples)), interp_(interp) {
    if (w.hi <= w.lo) throw std::invalid_argument("window must have positive width");
    if (level < 0 || level > 26) throw std::invalid_argument("grid level out of range");
    long long expected = ((long long)w.width() << level) + 1;
    if ((long long)samples_.size() != expected)
        throw std::invalid_argument("sample count " + std::to_string(samples_.size()) + " does not match grid (" +
                                    std::to_string(expected) + " nodes)");
}

GridFunction GridFunction::sampled(const std::function<double(double)>& f, Window w, int level, Interp interp) {
    long long n = ((long long)w.width() << level) + 1;
    std::vector<double> s(static_cast<size_t>(n));
    double step = std::ldexp(1.0, -level);
    for (long long i = 0; i < n; ++i) s[size_t(i)] = f(double(w.lo) + double(i) * step);
    return GridFunction(w, level, std::move(s), interp);
}

GridFunction GridFunction::zero(Window w, int level) {
    long long n = ((long long)w.width() << level) + 1;
    return GridFunction(w, level, std::vector<double>(size_t(n), 0.0));
}

double GridFunction::step() const { return std::ldexp(1.0, -level_); }

double GridFunction::node_x(long long i) const { return double(window_.lo) + std::ldexp(double(i), -level_); }

double GridFunction::eval(double x) const {
    double t = std::ldexp(x - double(window_.lo), level_);
    if (t < 0.0) return 0.0;
    auto i = (long long)std::floor(t);
    if (interp_ == Interp::left_constant) {
        return i < node_count() - 1 ? samples_[size_t(i)] : 0.0;
    }
    if (i >= node_count() - 1) return (t == double(node_count() - 1)) ? samples_.back() : 0.0;
    double frac = t - double(i);
    return samples_[size_t(i)] * (1.0 - frac) + samples_[size_t(i) + 1] * frac;
}

GridFunction& GridFunction::axpy(double alpha, const GridFunction& other) {
    if (other.window_.lo != window_.lo || other.window_.hi != window_.hi || other.level_ != level_ ||
        other.interp_ != interp_)
        throw std::invalid_argument("grid mismatch in axpy");
    for (size_t i = 0; i < samples_.size(); ++i) samples_[i] += alpha * other.samples_[i];
    return *this;
}

}  // namespace quarklet
