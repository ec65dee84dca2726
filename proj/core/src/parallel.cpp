#include "bergman/parallel.hpp"

#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace bergman {

int worker_count() {
  if (const char* env = std::getenv("BERGMAN_WORKERS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 1024) {
      return static_cast<int>(v);
    }
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_chunks(int n, int workers,
                     const std::function<void(int, int)>& fn) {
  if (n <= 0) return;
  if (workers > n) workers = n;
  if (workers <= 1 || n < 4) {
    fn(0, n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(workers));
  int base = n / workers;
  int extra = n % workers;
  int begin = 0;
  for (int w = 0; w < workers; ++w) {
    int len = base + (w < extra ? 1 : 0);
    int end = begin + len;
    pool.emplace_back([&fn, begin, end] { fn(begin, end); });
    begin = end;
  }
  for (auto& t : pool) t.join();
}

}  // namespace bergman
