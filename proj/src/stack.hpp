#pragma once

#include <cstddef>
#include <functional>

namespace clazy::detail {

/// Runs `fn` to completion on a new thread whose stack is `bytes` large,
/// rethrowing whatever it throws. Runs inline when such a thread cannot be
/// created.
void run_with_stack(std::size_t bytes, const std::function<void()>& fn);

/// True when the calling thread is within a safety margin of the end of its
/// stack.
bool stack_nearly_exhausted() noexcept;

}  // namespace clazy::detail
