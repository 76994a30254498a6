#include "nilo/sl3.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nilo::sl3 {

namespace {

void require_nonnegative(int a, int b, const char* who) {
  if (a < 0 || b < 0) {
    throw std::invalid_argument(std::string(who) + ": parameters must be nonnegative, got (" +
                                std::to_string(a) + ", " + std::to_string(b) + ")");
  }
}

}  // namespace

MonomialArray::MonomialArray(int a, int b) : a_(a), b_(b) {
  require_nonnegative(a, b, "MonomialArray");
}

Monomial MonomialArray::entry(int i, int j) const {
  if (!in_range(i, j)) {
    throw std::out_of_range("MonomialArray::entry: position (" + std::to_string(i) + ", " +
                            std::to_string(j) + ") outside a " + std::to_string(a_ + 1) + " x " +
                            std::to_string(b_ + 1) + " array");
  }
  return Monomial{i, a_ - i, b_ - j, j};
}

int invariant_dim(int a, int b) {
  require_nonnegative(a, b, "invariant_dim");
  return (a + 1) * (b + 1);
}

int branching_multiplicity(int a, int b, int k) {
  if (a < 0 || b < 0) return 0;
  // Positions (i,j) on the anti-diagonal i + j = k inside [0,a] x [0,b].
  const int lo = std::max(0, k - b);
  const int hi = std::min(a, k);
  return hi >= lo ? hi - lo + 1 : 0;
}

std::vector<int> branching_multiplicities(int a, int b) {
  if (a < 0 || b < 0) return {};
  std::vector<int> out(static_cast<std::size_t>(a + b) + 1);
  for (int k = 0; k <= a + b; ++k) out[static_cast<std::size_t>(k)] = branching_multiplicity(a, b, k);
  return out;
}

namespace {

std::optional<Monomial> act(const MonomialArray& arr, int i, int j, int di, int dj,
                            const char* who) {
  if (!arr.in_range(i, j)) {
    throw std::out_of_range(std::string(who) + ": position (" + std::to_string(i) + ", " +
                            std::to_string(j) + ") outside the array");
  }
  if (!arr.in_range(i + di, j + dj)) return std::nullopt;
  return arr.entry(i + di, j + dj);
}

}  // namespace

std::optional<Monomial> act_e1(const MonomialArray& arr, int i, int j) {
  return act(arr, i, j, 1, 0, "act_e1");
}

std::optional<Monomial> act_e2(const MonomialArray& arr, int i, int j) {
  return act(arr, i, j, 0, 1, "act_e2");
}

bool is_cyclic(const MonomialArray& arr) {
  const int rows = arr.a() + 1;
  const int cols = arr.b() + 1;
  std::vector<char> seen(static_cast<std::size_t>(rows) * cols, 0);
  std::vector<std::pair<int, int>> stack{{0, 0}};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const auto [i, j] = stack.back();
    stack.pop_back();
    for (const auto& [ni, nj] : {std::pair{i + 1, j}, std::pair{i, j + 1}}) {
      if (!arr.in_range(ni, nj)) continue;
      char& mark = seen[static_cast<std::size_t>(ni) * cols + nj];
      if (mark) continue;
      mark = 1;
      ++reached;
      stack.emplace_back(ni, nj);
    }
  }
  return reached == arr.size();
}

}  // namespace nilo::sl3
