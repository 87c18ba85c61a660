#include "lgpmh/generators.hpp"

#include <array>
#include <numeric>

#include "lgpmh/error.hpp"

namespace lgpmh {

namespace {

int param(std::span<const int> p, std::size_t i, int fallback, std::string_view tag) {
  if (i < p.size()) return p[i];
  if (fallback < 0)
    fail(ErrorKind::parameter, std::string(tag) + ": missing parameter #" + std::to_string(i + 1));
  return fallback;
}

void require(bool ok, std::string_view tag, const std::string& why) {
  if (!ok) fail(ErrorKind::parameter, std::string(tag) + ": " + why);
}

Graph complete(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, std::move(e));
}

Graph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(e));
}

Graph generalized_petersen(int n, int k) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) {
    e.emplace_back(i, (i + 1) % n);
    e.emplace_back(i, n + i);
    e.emplace_back(n + i, n + (i + k) % n);
  }
  return Graph(2 * n, std::move(e));
}

}  // namespace

std::vector<std::string> named_graph_tags() {
  return {"complete", "bipartite", "cycle",   "path",      "star",  "petersen",
          "prism",    "cube",      "bowtie",  "dsquare",   "gpetersen", "flower", "moebius"};
}

Graph make_named_graph(std::string_view tag, std::span<const int> p) {
  if (tag == "complete") {
    int n = param(p, 0, -1, tag);
    require(n >= 1, tag, "n must be >= 1");
    return complete(n);
  }
  if (tag == "bipartite") {
    int a = param(p, 0, -1, tag);
    int b = param(p, 1, a, tag);
    require(a >= 1 && b >= 1, tag, "sides must be >= 1");
    std::vector<Edge> e;
    for (int i = 0; i < a; ++i)
      for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
    return Graph(a + b, std::move(e));
  }
  if (tag == "cycle") {
    int n = param(p, 0, -1, tag);
    require(n >= 3, tag, "n must be >= 3");
    return cycle(n);
  }
  if (tag == "path") {
    int n = param(p, 0, -1, tag);
    require(n >= 1, tag, "n must be >= 1");
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, std::move(e));
  }
  if (tag == "star") {
    int k = param(p, 0, -1, tag);
    require(k >= 1, tag, "k must be >= 1");
    std::vector<Edge> e;
    for (int i = 1; i <= k; ++i) e.emplace_back(0, i);
    return Graph(k + 1, std::move(e));
  }
  if (tag == "petersen") {
    std::vector<std::array<int, 2>> subsets;
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j) subsets.push_back({i, j});
    std::vector<Edge> e;
    for (std::size_t a = 0; a < subsets.size(); ++a)
      for (std::size_t b = a + 1; b < subsets.size(); ++b) {
        const auto& s = subsets[a];
        const auto& t = subsets[b];
        if (s[0] != t[0] && s[0] != t[1] && s[1] != t[0] && s[1] != t[1])
          e.emplace_back(static_cast<int>(a), static_cast<int>(b));
      }
    return Graph(10, std::move(e));
  }
  if (tag == "prism") {
    int k = param(p, 0, 3, tag);
    require(k >= 3, tag, "k must be >= 3");
    std::vector<Edge> e;
    for (int i = 0; i < k; ++i) {
      e.emplace_back(i, (i + 1) % k);
      e.emplace_back(k + i, k + (i + 1) % k);
      e.emplace_back(i, k + i);
    }
    return Graph(2 * k, std::move(e));
  }
  if (tag == "moebius") {
    int n = param(p, 0, -1, tag);
    require(n >= 4 && n % 2 == 0, tag, "n must be even and >= 4");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    for (int i = 0; i < n / 2; ++i) e.emplace_back(i, i + n / 2);
    return Graph(n, std::move(e));
  }
  if (tag == "cube") {
    int d = param(p, 0, 3, tag);
    require(d >= 1 && d <= 10, tag, "dimension must be in 1..10");
    std::vector<Edge> e;
    for (int x = 0; x < (1 << d); ++x)
      for (int b = 0; b < d; ++b)
        if (!(x & (1 << b))) e.emplace_back(x, x | (1 << b));
    return Graph(1 << d, std::move(e));
  }
  if (tag == "bowtie") {
    return Graph(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}});
  }
  if (tag == "dsquare") {
    return Graph(7, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}, {4, 5}, {5, 6}, {0, 6}});
  }
  if (tag == "gpetersen") {
    int n = param(p, 0, -1, tag);
    int k = param(p, 1, -1, tag);
    require(n >= 3 && k >= 1 && 2 * k < n, tag, "need n >= 3 and 1 <= k < n/2");
    return generalized_petersen(n, k);
  }
  if (tag == "flower") {
    int k = param(p, 0, -1, tag);
    require(k >= 3 && k % 2 == 1, tag, "k must be odd and >= 3");
    // Vertex 4i+0 = a_i (hub), 4i+1 = b_i, 4i+2 = c_i, 4i+3 = d_i.
    auto a = [](int i) { return 4 * i; };
    auto b = [](int i) { return 4 * i + 1; };
    auto c = [](int i) { return 4 * i + 2; };
    auto d = [](int i) { return 4 * i + 3; };
    std::vector<Edge> e;
    for (int i = 0; i < k; ++i) {
      int j = (i + 1) % k;
      e.emplace_back(a(i), b(i));
      e.emplace_back(a(i), c(i));
      e.emplace_back(a(i), d(i));
      e.emplace_back(b(i), b(j));
      if (i + 1 < k) {
        e.emplace_back(c(i), c(j));
        e.emplace_back(d(i), d(j));
      } else {
        // c and d strands close into one 2k-cycle.
        e.emplace_back(c(i), d(0));
        e.emplace_back(d(i), c(0));
      }
    }
    return Graph(4 * k, std::move(e));
  }
  fail(ErrorKind::parameter, "unknown graph tag '" + std::string(tag) + "'");
}

}  // namespace lgpmh
