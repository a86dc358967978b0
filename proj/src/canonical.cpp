#include "ccx/canonical.hpp"

#include <algorithm>

namespace ccx {

namespace {

// BFS relabeling code for one start edge and scan direction. Vertices are
// emitted in label order; each vertex's rotation is scanned starting at the
// edge it was discovered through, assigning fresh labels on first contact.
void code_for_start(const Triangulation& t, int u0, int v0, int dir, std::string& out) {
  int n = t.n();
  out.clear();
  out.push_back(static_cast<char>(n));
  static thread_local std::vector<int> label, order, entry;
  label.assign(n, 0);
  order.clear();
  entry.assign(n, -1);
  label[u0] = 1;
  order.push_back(u0);
  entry[u0] = v0;
  int next_label = 1;
  for (size_t qi = 0; qi < order.size(); ++qi) {
    int v = order[qi];
    auto nb = t.neighbors(v);
    int d = static_cast<int>(nb.size());
    int s = static_cast<int>(std::find(nb.begin(), nb.end(), entry[v]) - nb.begin());
    for (int i = 0; i < d; ++i) {
      int w = nb[(s + (dir > 0 ? i : d - i)) % d];
      if (label[w] == 0) {
        label[w] = ++next_label;
        order.push_back(w);
        entry[w] = v;
      }
      out.push_back(static_cast<char>(label[w]));
    }
    out.push_back(0);
  }
}

}  // namespace

std::string CanonicalCode::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string h;
  h.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    h.push_back(digits[c >> 4]);
    h.push_back(digits[c & 15]);
  }
  return h;
}

CanonicalCode canonical_code(const Triangulation& t) {
  if (t.n() > 255) fail(ErrorKind::OutOfRange, "canonical code limited to 255 vertices");
  std::string best, cur;
  for (int dir : {+1, -1})
    for (auto [u, v] : t.edges())
      for (int flip = 0; flip < 2; ++flip) {
        code_for_start(t, flip ? v : u, flip ? u : v, dir, cur);
        if (best.empty() || cur < best) best = cur;
      }
  return CanonicalCode{std::move(best)};
}

}  // namespace ccx
