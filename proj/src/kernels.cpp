#include "w2line/kernels.hpp"

#include <exception>
#include <optional>

#include "w2line/curvature.hpp"
#include "w2line/isometry1d.hpp"
#include "w2line/transport1d.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace w2line::kernels {

namespace {

// Exceptions must not cross an OpenMP region; keep the first and rethrow.
class ErrorSlot {
 public:
  template <typename F>
  void run(F&& f) {
    try {
      f();
    } catch (...) {
#pragma omp critical(w2line_error_slot)
      if (!error_) error_ = std::current_exception();
    }
  }
  void rethrow() const {
    if (error_) std::rethrow_exception(error_);
  }

 private:
  std::exception_ptr error_;
};

}  // namespace

int thread_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::vector<double> pairwise_w2(std::span<const Measure1D> measures) {
  const auto n = static_cast<std::ptrdiff_t>(measures.size());
  std::vector<double> out(measures.size() * measures.size(), 0.0);
  ErrorSlot slot;
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    slot.run([&] {
      for (std::ptrdiff_t j = i + 1; j < n; ++j) {
        out[i * n + j] = out[j * n + i] = wasserstein2(measures[i], measures[j]);
      }
    });
  }
  slot.rethrow();
  return out;
}

std::vector<Measure1D> flow_batch(std::span<const Measure1D> measures, double t) {
  const auto n = static_cast<std::ptrdiff_t>(measures.size());
  std::vector<std::optional<Measure1D>> images(measures.size());
  ErrorSlot slot;
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    slot.run([&] { images[i].emplace(exotic_flow(measures[i], t)); });
  }
  slot.rethrow();
  std::vector<Measure1D> out;
  out.reserve(images.size());
  for (auto& img : images) out.push_back(std::move(*img));
  return out;
}

std::vector<double> comparison_defects(std::span<const Triangle1D> triangles,
                                       std::span<const double> ts) {
  const auto n = static_cast<std::ptrdiff_t>(triangles.size());
  const auto k = static_cast<std::ptrdiff_t>(ts.size());
  std::vector<double> out(triangles.size() * ts.size());
  ErrorSlot slot;
#pragma omp parallel for collapse(2) schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    for (std::ptrdiff_t j = 0; j < k; ++j) {
      slot.run([&] {
        const auto& tri = triangles[i];
        out[i * k + j] = comparison_defect(tri.x, tri.y, tri.z, ts[j]);
      });
    }
  }
  slot.rethrow();
  return out;
}

}  // namespace w2line::kernels
