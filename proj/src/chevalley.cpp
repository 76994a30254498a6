#include "nilo/chevalley.hpp"

#include <map>
#include <stdexcept>

namespace nilo {

namespace {

struct FoldSpec {
  SimpleType parent;
  std::vector<std::vector<int>> orbits;    // target node -> parent node orbit
  std::vector<int> sigma;                  // parent diagram automorphism
  std::vector<std::pair<int, int>> edges;  // sigma-invariant edge orientation
};

// The orientation must be sigma-invariant so that the sign cocycle, and with
// it the whole parent bracket, commutes with the diagram automorphism.
FoldSpec fold_spec(SimpleType t) {
  const int n = t.rank;
  FoldSpec f;
  switch (t.series) {
    case Series::C: {
      // From A_{2n-1} with the flip; edges point at the middle node n-1.
      f.parent = {Series::A, 2 * n - 1};
      f.sigma.resize(static_cast<size_t>(2 * n - 1));
      for (int i = 0; i < 2 * n - 1; ++i) f.sigma[static_cast<size_t>(i)] = 2 * n - 2 - i;
      for (int a = 0; a + 1 < n; ++a) f.orbits.push_back({a, 2 * n - 2 - a});
      f.orbits.push_back({n - 1});
      for (int i = 0; i + 1 < 2 * n - 1; ++i) {
        if (i < n - 1) f.edges.emplace_back(i, i + 1);
        else f.edges.emplace_back(i + 1, i);
      }
      break;
    }
    case Series::B: {
      // From D_{n+1} swapping the fork tips; tips point at the junction n-2.
      f.parent = {Series::D, n + 1};
      f.sigma.resize(static_cast<size_t>(n + 1));
      for (int i = 0; i <= n; ++i) f.sigma[static_cast<size_t>(i)] = i;
      std::swap(f.sigma[static_cast<size_t>(n - 1)], f.sigma[static_cast<size_t>(n)]);
      for (int a = 0; a + 1 < n; ++a) f.orbits.push_back({a});
      f.orbits.push_back({n - 1, n});
      for (int i = 0; i + 2 < n; ++i) f.edges.emplace_back(i, i + 1);
      f.edges.emplace_back(n - 1, n - 2);
      f.edges.emplace_back(n, n - 2);
      break;
    }
    case Series::F: {
      // From E6 with the flip; edges point at the branch node.
      f.parent = {Series::E, 6};
      f.sigma = {5, 1, 4, 3, 2, 0};
      f.orbits = {{1}, {3}, {2, 4}, {0, 5}};
      f.edges = {{0, 2}, {2, 3}, {5, 4}, {4, 3}, {1, 3}};
      break;
    }
    case Series::G: {
      // From D4 with triality; tips point at the center.
      f.parent = {Series::D, 4};
      f.sigma = {2, 1, 3, 0};
      f.orbits = {{0, 2, 3}, {1}};
      f.edges = {{0, 1}, {2, 1}, {3, 1}};
      break;
    }
    default:
      throw std::logic_error("fold_spec: simply-laced type");
  }
  return f;
}

std::vector<std::pair<int, int>> default_orientation(const Eigen::MatrixXi& cartan) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < cartan.rows(); ++i)
    for (int j = i + 1; j < cartan.cols(); ++j)
      if (cartan(i, j) != 0) edges.emplace_back(i, j);
  return edges;
}

}  // namespace

ChevalleyAlgebra::ChevalleyAlgebra(SimpleType t) : type_(t), rs_(t) {
  switch (t.series) {
    case Series::A:
    case Series::D:
    case Series::E:
      build_ade(default_orientation(rs_.cartan()));
      break;
    default:
      build_folded();
      break;
  }
}

ChevalleyAlgebra::ChevalleyAlgebra(SimpleType t, const std::vector<std::pair<int, int>>& edges)
    : type_(t), rs_(t) {
  build_ade(edges);
}

void ChevalleyAlgebra::build_ade(const std::vector<std::pair<int, int>>& edges) {
  const int n = rank();
  const int m = num_roots();

  // eps(i, j) = -1 exactly when E(i, j) = 1: on the diagonal and on oriented
  // edges. Then eps(gamma, delta) = (-1)^(gamma^T E delta) is bimultiplicative
  // with eps(g, g) = -1 and eps(g, d) eps(d, g) = (-1)^(g, d) on roots.
  Eigen::MatrixXi E = Eigen::MatrixXi::Identity(n, n);
  for (auto [i, j] : edges) {
    if (rs_.cartan()(i, j) != -1 || rs_.cartan()(j, i) != -1)
      throw std::logic_error("orientation edge is not a simple bond");
    E(i, j) = 1;
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if ((rs_.cartan()(i, j) != 0) != (E(i, j) + E(j, i) == 1))
        throw std::logic_error("orientation must cover each edge exactly once");

  auto eps = [&](const Eigen::VectorXi& g, const Eigen::VectorXi& d) {
    long acc = 0;
    for (int i = 0; i < n; ++i) {
      if (g(i) == 0) continue;
      for (int j = 0; j < n; ++j)
        if (E(i, j) != 0 && d(j) != 0) acc += static_cast<long>(g(i)) * d(j);
    }
    return (acc & 1) ? -1 : 1;
  };

  n_.setZero(m, m);
  sum_index_ = Eigen::MatrixXi::Constant(m, m, -1);
  for (int r = 0; r < m; ++r) {
    for (int s = 0; s < m; ++s) {
      Eigen::VectorXi sum = rs_.root(r) + rs_.root(s);
      if ((sum.array() == 0).all()) continue;
      int t = rs_.index_of(sum);
      if (t < 0) continue;
      sum_index_(r, s) = t;
      // Basis vectors carry a minus on negative roots so that
      // [e_gamma, e_{-gamma}] = gamma^vee with [x_gamma, x_{-gamma}] = -gamma^vee.
      int resign = (rs_.is_positive(r) ? 1 : -1) * (rs_.is_positive(s) ? 1 : -1) *
                   (rs_.is_positive(t) ? 1 : -1);
      n_(r, s) = resign * eps(rs_.root(r), rs_.root(s));
    }
  }
}

void ChevalleyAlgebra::build_folded() {
  FoldSpec f = fold_spec(type_);
  ChevalleyAlgebra par(f.parent, f.edges);
  const RootSystem& prs = par.roots();
  const int pn = prs.rank();
  const int pm = prs.num_roots();
  const int n = rank();
  const int m = num_roots();

  auto sigma_coords = [&](const Eigen::VectorXi& g) {
    Eigen::VectorXi out(pn);
    for (int i = 0; i < pn; ++i) out(f.sigma[static_cast<size_t>(i)]) = g(i);
    return out;
  };
  std::vector<int> sig(static_cast<size_t>(pm));
  for (int r = 0; r < pm; ++r) {
    sig[static_cast<size_t>(r)] = prs.index_of(sigma_coords(prs.root(r)));
    if (sig[static_cast<size_t>(r)] < 0)
      throw std::logic_error("fold: sigma does not permute the parent roots");
  }
  for (int r = 0; r < pm; ++r)
    for (int s = 0; s < pm; ++s)
      if (par.n_(sig[static_cast<size_t>(r)], sig[static_cast<size_t>(s)]) != par.n_(r, s))
        throw std::logic_error("fold: parent constants are not sigma-invariant");

  // Each parent root belongs to the target root given by its orbit sums.
  std::vector<std::vector<int>> cls(static_cast<size_t>(m));
  for (int d = 0; d < pm; ++d) {
    Eigen::VectorXi k(n);
    for (int a = 0; a < n; ++a) {
      int acc = 0;
      for (int j : f.orbits[static_cast<size_t>(a)]) acc += prs.root(d)(j);
      k(a) = acc;
    }
    int t = rs_.index_of(k);
    if (t < 0) throw std::logic_error("fold: parent root maps outside the target");
    cls[static_cast<size_t>(t)].push_back(d);
  }
  for (int t = 0; t < m; ++t) {
    bool lng = rs_.half_length(t) == Rational(1);
    if (cls[static_cast<size_t>(t)].empty() || lng != (cls[static_cast<size_t>(t)].size() == 1))
      throw std::logic_error("fold: class size does not match root length");
    for (int a = 0; a < n; ++a)
      for (int d : cls[static_cast<size_t>(t)]) {
        int acc = 0;
        for (int j : f.orbits[static_cast<size_t>(a)]) acc += prs.pairing(d, j);
        if (acc != rs_.pairing(t, a)) throw std::logic_error("fold: pairing mismatch");
      }
  }

  // Folded constants: bracket the class sums in the parent and require the
  // result to be a single multiple of the class sum of the root sum.
  n_.setZero(m, m);
  sum_index_ = Eigen::MatrixXi::Constant(m, m, -1);
  for (int r = 0; r < m; ++r) {
    for (int s = 0; s < m; ++s) {
      std::map<int, long> coeff;
      Eigen::VectorXi cart = Eigen::VectorXi::Zero(pn);
      for (int dd : cls[static_cast<size_t>(r)])
        for (int ee : cls[static_cast<size_t>(s)]) {
          if (ee == prs.negative_of(dd)) {
            cart += prs.coroot(dd);
          } else if (int nc = par.n_(dd, ee); nc != 0) {
            coeff[par.sum_index_(dd, ee)] += nc;
          }
        }
      std::erase_if(coeff, [](const auto& kv) { return kv.second == 0; });
      if (s == rs_.negative_of(r)) {
        if (!coeff.empty()) throw std::logic_error("fold: root part in a coroot bracket");
        for (int a = 0; a < n; ++a)
          for (int j : f.orbits[static_cast<size_t>(a)])
            if (cart(j) != rs_.coroot(r)(a)) throw std::logic_error("fold: coroot mismatch");
        continue;
      }
      if (!(cart.array() == 0).all()) throw std::logic_error("fold: unexpected cartan part");
      Eigen::VectorXi sum = rs_.root(r) + rs_.root(s);
      int t = rs_.index_of(sum);
      if (t < 0) {
        if (!coeff.empty()) throw std::logic_error("fold: bracket outside the algebra");
        continue;
      }
      if (coeff.size() != cls[static_cast<size_t>(t)].size())
        throw std::logic_error("fold: bracket misses part of a class");
      long val = coeff.begin()->second;
      if (val == 0) throw std::logic_error("fold: vanishing constant on a root sum");
      for (int z : cls[static_cast<size_t>(t)]) {
        auto it = coeff.find(z);
        if (it == coeff.end() || it->second != val)
          throw std::logic_error("fold: class coefficients differ");
      }
      sum_index_(r, s) = t;
      n_(r, s) = static_cast<int>(val);
    }
  }
}

VecQ ChevalleyAlgebra::root_vector(int r) const {
  VecQ v = zero_element();
  v(rank() + r) = Rational(1);
  return v;
}

VecQ ChevalleyAlgebra::cartan_element(const VecQ& coroot_coords) const {
  VecQ v = zero_element();
  v.head(rank()) = coroot_coords;
  return v;
}

VecQ ChevalleyAlgebra::cartan_element(const Eigen::VectorXi& coroot_coords) const {
  VecQ v = zero_element();
  for (int i = 0; i < rank(); ++i) v(i) = Rational(coroot_coords(i));
  return v;
}

VecQ ChevalleyAlgebra::bracket(const VecQ& x, const VecQ& y) const {
  const int n = rank();
  const int m = num_roots();
  VecQ out = zero_element();
  std::vector<int> xr, yr;
  for (int r = 0; r < m; ++r) {
    if (!x(n + r).is_zero()) xr.push_back(r);
    if (!y(n + r).is_zero()) yr.push_back(r);
  }
  bool xh = false, yh = false;
  for (int i = 0; i < n; ++i) {
    xh = xh || !x(i).is_zero();
    yh = yh || !y(i).is_zero();
  }
  if (xh)
    for (int s : yr) {
      Rational acc(0);
      for (int i = 0; i < n; ++i)
        if (!x(i).is_zero()) acc += x(i) * Rational(rs_.pairing(s, i));
      out(n + s) += acc * y(n + s);
    }
  if (yh)
    for (int r : xr) {
      Rational acc(0);
      for (int i = 0; i < n; ++i)
        if (!y(i).is_zero()) acc += y(i) * Rational(rs_.pairing(r, i));
      out(n + r) -= acc * x(n + r);
    }
  for (int r : xr)
    for (int s : yr) {
      Rational c = x(n + r) * y(n + s);
      if (s == rs_.negative_of(r)) {
        const Eigen::VectorXi& cr = rs_.coroot(r);
        for (int i = 0; i < n; ++i)
          if (cr(i) != 0) out(i) += c * Rational(cr(i));
      } else if (int nc = n_(r, s); nc != 0) {
        out(n + sum_index_(r, s)) += Rational(nc) * c;
      }
    }
  return out;
}

VecQ ChevalleyAlgebra::bracket_basis(const VecQ& x, int basis_idx) const {
  const int n = rank();
  const int m = num_roots();
  VecQ out = zero_element();
  if (basis_idx < n) {
    for (int r = 0; r < m; ++r)
      if (!x(n + r).is_zero()) out(n + r) -= x(n + r) * Rational(rs_.pairing(r, basis_idx));
    return out;
  }
  const int s = basis_idx - n;
  Rational acc(0);
  for (int i = 0; i < n; ++i)
    if (!x(i).is_zero()) acc += x(i) * Rational(rs_.pairing(s, i));
  out(n + s) += acc;
  for (int r = 0; r < m; ++r) {
    if (x(n + r).is_zero()) continue;
    if (s == rs_.negative_of(r)) {
      const Eigen::VectorXi& cr = rs_.coroot(r);
      for (int i = 0; i < n; ++i)
        if (cr(i) != 0) out(i) += x(n + r) * Rational(cr(i));
    } else if (int nc = n_(r, s); nc != 0) {
      out(n + sum_index_(r, s)) += Rational(nc) * x(n + r);
    }
  }
  return out;
}

MatQ ChevalleyAlgebra::ad_matrix(const VecQ& x) const {
  MatQ ad(dim(), dim());
  for (int k = 0; k < dim(); ++k) ad.col(k) = bracket_basis(x, k);
  return ad;
}

ChevalleyAlgebra build_chevalley(SimpleType t) { return ChevalleyAlgebra(t); }

}  // namespace nilo
