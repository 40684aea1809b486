#include "stack.hpp"

#include <pthread.h>

#include <cstdint>
#include <exception>

namespace clazy::detail {
namespace {

constexpr std::size_t kReserve = 256 * 1024;

struct Job {
  const std::function<void()>* fn;
  std::exception_ptr error;
};

void* trampoline(void* arg) {
  auto* job = static_cast<Job*>(arg);
  try {
    (*job->fn)();
  } catch (...) {
    job->error = std::current_exception();
  }
  return nullptr;
}

std::uintptr_t compute_floor() noexcept {
  pthread_attr_t attr;
  if (pthread_getattr_np(pthread_self(), &attr) != 0) return 0;
  void* addr = nullptr;
  std::size_t size = 0;
  const int rc = pthread_attr_getstack(&attr, &addr, &size);
  pthread_attr_destroy(&attr);
  if (rc != 0 || size <= kReserve) return 0;
  return reinterpret_cast<std::uintptr_t>(addr) + kReserve;
}

}  // namespace

void run_with_stack(std::size_t bytes, const std::function<void()>& fn) {
  pthread_attr_t attr;
  if (pthread_attr_init(&attr) != 0) return fn();
  Job job{&fn, nullptr};
  pthread_t thread;
  const bool started = pthread_attr_setstacksize(&attr, bytes) == 0 &&
                       pthread_create(&thread, &attr, trampoline, &job) == 0;
  pthread_attr_destroy(&attr);
  if (!started) return fn();
  pthread_join(thread, nullptr);
  if (job.error) std::rethrow_exception(job.error);
}

bool stack_nearly_exhausted() noexcept {
  thread_local const std::uintptr_t floor = compute_floor();
  char probe;
  // Stacks grow downward on every platform this builds for.
  return floor != 0 && reinterpret_cast<std::uintptr_t>(&probe) < floor;
}

}  // namespace clazy::detail
