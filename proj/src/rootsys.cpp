#include "nilo/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace nilo {

bool SimpleType::valid() const {
  switch (series) {
    case Series::A: return rank >= 1;
    case Series::B: return rank >= 2;
    case Series::C: return rank >= 2;
    case Series::D: return rank >= 3;
    case Series::E: return rank >= 6 && rank <= 8;
    case Series::F: return rank == 4;
    case Series::G: return rank == 2;
  }
  return false;
}

std::string SimpleType::to_string() const {
  return std::string(1, static_cast<char>(series)) + std::to_string(rank);
}

std::optional<SimpleType> SimpleType::parse(std::string_view s) {
  if (s.size() < 2) return std::nullopt;
  char c = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  if (c < 'A' || c > 'G') return std::nullopt;
  int rank = 0;
  auto [ptr, ec] = std::from_chars(s.data() + 1, s.data() + s.size(), rank);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  SimpleType t{static_cast<Series>(c), rank};
  if (!t.valid()) return std::nullopt;
  return t;
}

namespace {

// cartan(i, j) = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i), Bourbaki numbering.
Eigen::MatrixXi cartan_matrix(SimpleType t) {
  const int n = t.rank;
  Eigen::MatrixXi a = 2 * Eigen::MatrixXi::Identity(n, n);
  auto bond = [&](int i, int j) {  // single edge, 1-based nodes
    a(i - 1, j - 1) = -1;
    a(j - 1, i - 1) = -1;
  };
  auto chain = [&](int from, int to) {
    for (int i = from; i < to; ++i) bond(i, i + 1);
  };
  switch (t.series) {
    case Series::A:
      chain(1, n);
      break;
    case Series::B:  // alpha_n short
      chain(1, n - 1);
      a(n - 2, n - 1) = -1;
      a(n - 1, n - 2) = -2;
      break;
    case Series::C:  // alpha_n long
      chain(1, n - 1);
      a(n - 2, n - 1) = -2;
      a(n - 1, n - 2) = -1;
      break;
    case Series::D:
      chain(1, n - 1);
      bond(n - 2, n);
      break;
    case Series::E:
      chain(3, n);
      bond(1, 3);
      bond(2, 4);
      break;
    case Series::F:  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      bond(1, 2);
      bond(3, 4);
      a(1, 2) = -1;
      a(2, 1) = -2;
      break;
    case Series::G:  // alpha_1 short, alpha_2 long
      a(0, 1) = -3;
      a(1, 0) = -1;
      break;
  }
  return a;
}

// Symmetrizers d_i = (alpha_i, alpha_i)/2 with long roots at 1, found from
// d_i a(i,j) = d_j a(j,i) by graph traversal, then normalized.
std::vector<Rational> symmetrizers(const Eigen::MatrixXi& a) {
  const int n = static_cast<int>(a.rows());
  std::vector<Rational> d(static_cast<size_t>(n), Rational(0));
  d[0] = Rational(1);
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (int j = 0; j < n; ++j) {
      if (j == i || a(i, j) == 0) continue;
      Rational dj = d[static_cast<size_t>(i)] * Rational(a(i, j)) / Rational(a(j, i));
      if (d[static_cast<size_t>(j)].is_zero()) {
        d[static_cast<size_t>(j)] = dj;
        stack.push_back(j);
      } else if (d[static_cast<size_t>(j)] != dj) {
        throw std::logic_error("inconsistent symmetrizer");
      }
    }
  }
  Rational dmax = d[0];
  for (const auto& v : d) dmax = std::max(dmax, v);
  for (auto& v : d) v /= dmax;
  return d;
}

}  // namespace

RootSystem::RootSystem(SimpleType t) : type_(t) {
  if (!t.valid()) throw std::invalid_argument("invalid simple type " + t.to_string());
  const int n = t.rank;
  cartan_ = cartan_matrix(t);
  d_ = symmetrizers(cartan_);

  // Height-inductive closure: gamma + alpha_i is a root iff the alpha_i-string
  // through gamma has q = p - <gamma, alpha_i^vee> > 0, where p counts the
  // steps down already known at lower height.
  std::map<std::vector<int>, int> seen;
  std::vector<Eigen::VectorXi> pos;
  auto key = [n](const Eigen::VectorXi& v) {
    return std::vector<int>(v.data(), v.data() + n);
  };
  for (int i = 0; i < n; ++i) {
    Eigen::VectorXi alpha = Eigen::VectorXi::Zero(n);
    alpha(i) = 1;
    seen.emplace(key(alpha), static_cast<int>(pos.size()));
    pos.push_back(alpha);
  }
  for (size_t head = 0; head < pos.size(); ++head) {
    Eigen::VectorXi gamma = pos[head];
    for (int i = 0; i < n; ++i) {
      int pair = (cartan_.row(i) * gamma)(0);
      int p = 0;
      Eigen::VectorXi down = gamma;
      for (;;) {
        down(i) -= 1;
        if (!seen.count(key(down))) break;
        ++p;
      }
      if (p - pair > 0) {
        Eigen::VectorXi up = gamma;
        up(i) += 1;
        auto k = key(up);
        if (!seen.count(k)) {
          seen.emplace(k, static_cast<int>(pos.size()));
          pos.push_back(up);
        }
      }
    }
  }

  std::sort(pos.begin(), pos.end(), [n](const Eigen::VectorXi& x, const Eigen::VectorXi& y) {
    int hx = x.sum(), hy = y.sum();
    if (hx != hy) return hx < hy;
    return std::lexicographical_compare(x.data(), x.data() + n, y.data(), y.data() + n);
  });
  npos_ = static_cast<int>(pos.size());
  roots_ = pos;
  for (int i = 0; i < npos_; ++i) roots_.push_back(-pos[static_cast<size_t>(i)]);

  index_.clear();
  heights_.resize(roots_.size());
  pairing_.resize(static_cast<int>(roots_.size()), n);
  for (int i = 0; i < static_cast<int>(roots_.size()); ++i) {
    const Eigen::VectorXi& g = roots_[static_cast<size_t>(i)];
    index_.emplace(std::vector<int>(g.data(), g.data() + n), i);
    heights_[static_cast<size_t>(i)] = g.sum();
    pairing_.row(i) = (cartan_ * g).transpose();
  }
  theta_ = npos_ - 1;  // unique root of maximal height

  coroots_.resize(roots_.size());
  for (int i = 0; i < static_cast<int>(roots_.size()); ++i) {
    const Eigen::VectorXi& g = roots_[static_cast<size_t>(i)];
    Rational dg = half_length(i);
    Eigen::VectorXi cv(n);
    for (int j = 0; j < n; ++j) {
      Rational c = Rational(g(j)) * d_[static_cast<size_t>(j)] / dg;
      if (!c.is_integer()) throw std::logic_error("non-integral coroot coordinate");
      cv(j) = static_cast<int>(c.to_long());
    }
    coroots_[static_cast<size_t>(i)] = cv;
  }

  if (num_roots() != expected_num_roots(t)) throw std::logic_error("root count mismatch");
  if (half_length(theta_) != Rational(1)) throw std::logic_error("highest root not long");
}

int RootSystem::index_of(const Eigen::VectorXi& coords) const {
  auto it = index_.find(std::vector<int>(coords.data(), coords.data() + rank()));
  return it == index_.end() ? -1 : it->second;
}

Rational RootSystem::form_simple(int i, int j) const {
  // (alpha_i, alpha_j) = d_i a(i, j).
  return d_[static_cast<size_t>(i)] * Rational(cartan_(i, j));
}

Rational RootSystem::form(const Eigen::VectorXi& x, const Eigen::VectorXi& y) const {
  Rational acc(0);
  for (int i = 0; i < rank(); ++i) {
    if (x(i) == 0) continue;
    for (int j = 0; j < rank(); ++j) {
      if (y(j) == 0) continue;
      acc += Rational(x(i)) * Rational(y(j)) * form_simple(i, j);
    }
  }
  return acc;
}

Rational RootSystem::coroot_form(int i, int j) const {
  // (alpha_i^vee, alpha_j^vee) = (alpha_i, alpha_j) / (d_i d_j).
  return form_simple(i, j) / (d_[static_cast<size_t>(i)] * d_[static_cast<size_t>(j)]);
}

Rational RootSystem::half_length(int i) const {
  const Eigen::VectorXi& g = roots_[static_cast<size_t>(i)];
  return form(g, g) / Rational(2);
}

RootSystem build_root_system(SimpleType t) { return RootSystem(t); }

int root_height(const RootSystem& rs, int root_idx) { return rs.height(root_idx); }

Rational form_value(const RootSystem& rs, const Eigen::VectorXi& x, const Eigen::VectorXi& y) {
  return rs.form(x, y);
}

int expected_num_roots(SimpleType t) {
  const int n = t.rank;
  switch (t.series) {
    case Series::A: return n * (n + 1);
    case Series::B:
    case Series::C: return 2 * n * n;
    case Series::D: return 2 * n * (n - 1);
    case Series::E: return n == 6 ? 72 : (n == 7 ? 126 : 240);
    case Series::F: return 48;
    case Series::G: return 12;
  }
  return 0;
}

int algebra_dim(SimpleType t) { return expected_num_roots(t) + t.rank; }

}  // namespace nilo
