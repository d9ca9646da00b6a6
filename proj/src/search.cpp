// Triangle presentations over the Fano plane.  Edge labels x in {0..6} are
// matched to lines λ(x) of a fixed plane; each label pair (x, a) with
// a ∈ λ(x) is an arc, and a presentation partitions the 21 arcs into
// directed triangles (x, a, b): arcs (x,a), (a,b), (b,x).  Each triangle
// becomes a chamber of a one-vertex complex on seven loops.

#include <algorithm>
#include <array>
#include <numeric>

#include "atorsion/complexes.hpp"
#include "atorsion/error.hpp"

namespace atorsion {

namespace {

constexpr int kPoints = 7;

// Lines of PG(2,2) as translates of the difference set {0, 1, 3} mod 7.
std::array<std::array<int, 3>, kPoints> fano_lines() {
  std::array<std::array<int, 3>, kPoints> lines{};
  for (int i = 0; i < kPoints; ++i) lines[i] = {i, (i + 1) % kPoints, (i + 3) % kPoints};
  return lines;
}

class TriangleSearch {
 public:
  TriangleSearch(const std::array<int, kPoints>& lambda, bool exhaustive) : exhaustive_(exhaustive) {
    const auto lines = fano_lines();
    for (int x = 0; x < kPoints; ++x)
      for (int a : lines[lambda[x]]) arc_[x][a] = true;
  }

  // Number of decompositions found (at most one unless exhaustive).
  std::size_t run() {
    recurse();
    return found_;
  }

  const std::vector<std::array<int, 3>>& first() const { return first_; }

 private:
  bool available(int x, int a) const { return arc_[x][a] && !used_[x][a]; }

  void recurse() {
    // Smallest unused arc, if any.
    int x = -1, a = -1;
    for (int i = 0; i < kPoints && x < 0; ++i)
      for (int j = 0; j < kPoints; ++j)
        if (available(i, j)) {
          x = i;
          a = j;
          break;
        }
    if (x < 0) {
      if (found_++ == 0) first_ = current_;
      return;
    }
    used_[x][a] = true;
    for (int b = 0; b < kPoints && (exhaustive_ || found_ == 0); ++b) {
      if (!available(a, b)) continue;
      used_[a][b] = true;
      if (available(b, x)) {
        used_[b][x] = true;
        current_.push_back({x, a, b});
        recurse();
        current_.pop_back();
        used_[b][x] = false;
      }
      used_[a][b] = false;
    }
    used_[x][a] = false;
  }

  bool exhaustive_;
  bool arc_[kPoints][kPoints] = {};
  bool used_[kPoints][kPoints] = {};
  std::vector<std::array<int, 3>> current_, first_;
  std::size_t found_ = 0;
};

}  // namespace

PresentationSearch search_presentation(unsigned q, bool exhaustive) {
  if (q != 2) fail(ErrorKind::range, "search-presentation supports q = 2 only (got q = " + std::to_string(q) + ")");

  PresentationSearch result;
  std::array<int, kPoints> lambda;
  std::iota(lambda.begin(), lambda.end(), 0);
  do {
    ++result.correspondences_tried;
    TriangleSearch search(lambda, exhaustive);
    const std::size_t n = search.run();
    if (n > 0 && !result.complex) {
      std::vector<DirectedEdge> loops(kPoints, DirectedEdge{0, 0});
      std::vector<Chamber> chambers;
      for (const auto& t : search.first())
        chambers.push_back({{static_cast<std::size_t>(t[0]), static_cast<std::size_t>(t[1]), static_cast<std::size_t>(t[2])}});
      result.complex.emplace(1, std::move(loops), std::move(chambers));
    }
    result.solutions += n;
    if (!exhaustive && result.complex) break;
  } while (std::next_permutation(lambda.begin(), lambda.end()));
  return result;
}

}  // namespace atorsion
