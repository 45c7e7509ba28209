#pragma once

#include <cstddef>
#include <cstdlib>
#include <new>

#if defined(__linux__)
#include <sys/mman.h>
#endif

namespace pathmin::detail {

// Allocator that asks for transparent huge pages on large blocks. Tables of
// the index are probed at random, so TLB reach matters more than footprint.
template <typename T>
class HugePageAllocator {
  public:
    using value_type = T;

    HugePageAllocator() = default;
    template <typename U>
    HugePageAllocator(const HugePageAllocator<U>&) noexcept {}

    T* allocate(std::size_t count) {
        const std::size_t bytes = count * sizeof(T);
        if (!is_large(bytes)) return static_cast<T*>(::operator new(bytes));
        const std::size_t rounded = round_up(bytes);
        void* p = std::aligned_alloc(kHugePage, rounded);
        if (p == nullptr) throw std::bad_alloc();
#if defined(__linux__) && defined(MADV_HUGEPAGE)
        ::madvise(p, rounded, MADV_HUGEPAGE);
#endif
        return static_cast<T*>(p);
    }

    void deallocate(T* p, std::size_t count) noexcept {
        if (is_large(count * sizeof(T))) {
            std::free(p);
        } else {
            ::operator delete(p);
        }
    }

    template <typename U>
    bool operator==(const HugePageAllocator<U>&) const noexcept {
        return true;
    }

  private:
    static constexpr std::size_t kHugePage = std::size_t{2} << 20;

    static bool is_large(std::size_t bytes) { return bytes >= 2 * kHugePage; }
    static std::size_t round_up(std::size_t bytes) { return (bytes + kHugePage - 1) / kHugePage * kHugePage; }
};

}  // namespace pathmin::detail
