#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#ifdef HOPFCAT_HAVE_OPENMP
#include <omp.h>
#endif

namespace hopfcat {

/* Every check sweep runs through one of these two paths. The serial path is
   the reference; arithmetic is exact, so both paths produce identical results
   and the parallel path may merge in any order. */
enum class ExecMode { Serial, Parallel };

namespace detail {
inline std::atomic<ExecMode> g_exec_mode{
#ifdef HOPFCAT_HAVE_OPENMP
    ExecMode::Parallel
#else
    ExecMode::Serial
#endif
};
}  // namespace detail

inline ExecMode default_exec_mode() { return detail::g_exec_mode.load(); }
inline void set_default_exec_mode(ExecMode mode) { detail::g_exec_mode.store(mode); }

inline void set_thread_count(int n) {
#ifdef HOPFCAT_HAVE_OPENMP
  if (n > 0) omp_set_num_threads(n);
#else
  (void)n;
#endif
}

template <class Fn>
void parallel_for(std::size_t n, ExecMode mode, Fn&& fn) {
#ifdef HOPFCAT_HAVE_OPENMP
  if (mode == ExecMode::Parallel && n > 1) {
#pragma omp parallel for schedule(dynamic, 64)
    for (long long i = 0; i < static_cast<long long>(n); ++i)
      fn(static_cast<std::size_t>(i));
    return;
  }
#endif
  (void)mode;
  for (std::size_t i = 0; i < n; ++i) fn(i);
}

/* fn(i) -> std::optional<std::string>; engaged results are failures. Returned
   in index order so witnesses are deterministic under any schedule. */
template <class Fn>
std::vector<std::pair<std::size_t, std::string>> collect_failures(std::size_t n,
                                                                  ExecMode mode,
                                                                  Fn&& fn) {
  std::vector<std::pair<std::size_t, std::string>> failures;
#ifdef HOPFCAT_HAVE_OPENMP
  if (mode == ExecMode::Parallel && n > 1) {
#pragma omp parallel
    {
      std::vector<std::pair<std::size_t, std::string>> local;
#pragma omp for schedule(dynamic, 64) nowait
      for (long long i = 0; i < static_cast<long long>(n); ++i) {
        auto r = fn(static_cast<std::size_t>(i));
        if (r) local.emplace_back(static_cast<std::size_t>(i), std::move(*r));
      }
#pragma omp critical
      failures.insert(failures.end(), local.begin(), local.end());
    }
    std::sort(failures.begin(), failures.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return failures;
  }
#endif
  (void)mode;
  for (std::size_t i = 0; i < n; ++i) {
    auto r = fn(i);
    if (r) failures.emplace_back(i, std::move(*r));
  }
  return failures;
}

}  // namespace hopfcat
