#pragma once
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <future>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

namespace bw {

/* Error taxonomy: `usage` and `invalid_input` map to CLI exit 2.  Failed
 * mathematical checks are ordinary verdicts, not errors; the CLI reports
 * them and exits 1.  Everything else is an internal bug. */
enum class Errc { usage, invalid_input, unsupported, internal };

class Error : public std::runtime_error {
 public:
  Error(Errc c, const std::string& msg) : std::runtime_error(msg), code(c) {}
  Errc code;
};

[[noreturn]] inline void fail(Errc c, const std::string& msg) { throw Error(c, msg); }

inline void require(bool cond, Errc c, const std::string& msg) {
  if (!cond) fail(c, msg);
}

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(std::uint64_t v);

/* Worker cap: BW_THREADS if set (min 1), else hardware_concurrency. */
int worker_count();

/* Order-preserving parallel map; falls back to a plain loop when one worker. */
template <class R>
std::vector<R> parallel_map(std::size_t n, const std::function<R(std::size_t)>& fn) {
  std::vector<R> out(n);
  int workers = worker_count();
  if (workers <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  auto run = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      out[i] = fn(i);
    }
  };
  std::vector<std::thread> pool;
  int k = std::min<std::size_t>(workers, n);
  for (int t = 0; t < k - 1; ++t) pool.emplace_back(run);
  run();
  for (auto& th : pool) th.join();
  return out;
}

std::vector<std::string> split_ws(const std::string& s);
std::string trim(const std::string& s);

}  // namespace bw
