#pragma once

#include <functional>
#include <vector>

namespace quarklet {

/// Integer-endpoint window [lo, hi] on the real line.
struct Window {
    int lo = 0;
    int hi = 0;
    int width() const { return hi - lo; }
};

/// How node samples extend to the continuum between grid points.
/// `linear` suits continuous functions; `left_constant` represents
/// right-open step functions with dyadic jumps exactly.
enum class Interp { linear, left_constant };

/// Real function on R represented by node samples on the uniform dyadic grid
/// of step 2^-level over a finite window; interpolated between nodes and zero
/// outside the window.  The finite proxy used by every transform and norm
/// estimator.
class GridFunction {
  public:
    GridFunction() = default;
    GridFunction(Window w, int level, std::vector<double> samples, Interp interp = Interp::linear);

    static GridFunction sampled(const std::function<double(double)>& f, Window w, int level,
                                Interp interp = Interp::linear);
    static GridFunction zero(Window w, int level);

    Window window() const { return window_; }
    int level() const { return level_; }
    double step() const;
    long long node_count() const { return (long long)samples_.size(); }
    const std::vector<double>& samples() const { return samples_; }
    std::vector<double>& samples() { return samples_; }

    Interp interp() const { return interp_; }
    double node_x(long long i) const;
    double eval(double x) const;

    GridFunction& axpy(double alpha, const GridFunction& other);  // this += alpha * other (same grid)

  private:
    Window window_{};
    int level_ = 0;
    std::vector<double> samples_;
    Interp interp_ = Interp::linear;
};

}  // namespace quarklet
