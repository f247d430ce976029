#include "vplin/grid.hpp"

#include <charconv>
#include <cstdlib>
#include <mutex>
#include <thread>

namespace vplin {

GridSpec GridSpec::parse(const std::string& s) {
  const auto p1 = s.find(':');
  const auto p2 = (p1 == std::string::npos) ? p1 : s.find(':', p1 + 1);
  if (p2 == std::string::npos)
    throw DomainError("grid spec must be \"a:b:n\": " + s);
  GridSpec g;
  char* end = nullptr;
  const std::string sa = s.substr(0, p1);
  const std::string sb = s.substr(p1 + 1, p2 - p1 - 1);
  const std::string sn = s.substr(p2 + 1);
  g.a = std::strtod(sa.c_str(), &end);
  if (end == sa.c_str() || *end) throw DomainError("bad grid start: " + sa);
  g.b = std::strtod(sb.c_str(), &end);
  if (end == sb.c_str() || *end) throw DomainError("bad grid end: " + sb);
  g.n = int(std::strtol(sn.c_str(), &end, 10));
  if (end == sn.c_str() || *end || g.n < 1)
    throw DomainError("bad grid count: " + sn);
  if (g.a > g.b) throw DomainError("grid start exceeds end");
  return g;
}

std::vector<double> GridSpec::points() const {
  std::vector<double> pts(n);
  if (n == 1) {
    pts[0] = a;
    return pts;
  }
  const double h = (b - a) / (n - 1);
  for (int i = 0; i < n; ++i) pts[i] = a + h * i;
  pts[n - 1] = b;
  return pts;
}

std::string format_double(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void parallel_for(int n, int threads, const std::function<void(int)>& body) {
  if (threads <= 1 || n <= 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  const int nw = std::min(threads, n);
  std::vector<std::thread> pool;
  pool.reserve(nw);
  std::exception_ptr err;
  std::mutex err_mu;
  for (int t = 0; t < nw; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (int i = t; i < n; i += nw) body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mu);
        if (!err) err = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace vplin
