#include "nilo/catalog.hpp"

#include <initializer_list>
#include <stdexcept>

namespace nilo {

namespace {

/// vo_to_b[i] = Bourbaki node carrying VO node i (0-based).
std::vector<int> vo_to_b_permutation(const SimpleType& t) {
  if (!t.valid()) throw std::invalid_argument("numbering conversion: invalid type");
  const int n = t.rank;
  std::vector<int> p(static_cast<size_t>(n));
  switch (t.series) {
    case Series::A:
    case Series::B:
    case Series::C:
    case Series::D:
    case Series::G:
      for (int i = 0; i < n; ++i) p[static_cast<size_t>(i)] = i;
      break;
    case Series::F:
      for (int i = 0; i < n; ++i) p[static_cast<size_t>(i)] = n - 1 - i;
      break;
    case Series::E:
      // VO numbers the long chain 1..(n-1) starting from the end away from
      // the branch, and the branch node last; Bourbaki hangs node 2 off the
      // chain 1,3,4,...,n.
      if (n == 6) p = {0, 2, 3, 4, 5, 1};
      if (n == 7) p = {6, 5, 4, 3, 2, 0, 1};
      if (n == 8) p = {7, 6, 5, 4, 3, 2, 0, 1};
      break;
  }
  return p;
}

Eigen::VectorXi vec(std::initializer_list<int> v) {
  Eigen::VectorXi x(static_cast<int>(v.size()));
  int i = 0;
  for (int c : v) x(i++) = c;
  return x;
}

std::vector<ExceptionalPairRow> build_rows(const SimpleType& t) {
  if (t.series == Series::E && t.rank == 6)
    return {
        {"A1", "A2", vec({0, 0, 0, 0, 0, 2}), true, true},
        {"2A1", "2A2", vec({2, 0, 0, 0, 2, 0}), true, true},
        {"3A1", "D4(a1)", vec({0, 0, 2, 0, 0, 0}), true, true},
        {"A2+A1", "A4", vec({2, 0, 0, 0, 2, 2}), true, true},
        {"2A2+A1", "E6(a3)", vec({2, 0, 2, 0, 2, 0}), true, true},
        {"A4+A1", "E6(a1)", vec({2, 2, 0, 2, 2, 2}), false, false},
    };
  if (t.series == Series::E && t.rank == 7)
    return {
        {"A1", "A2", vec({0, 0, 0, 0, 0, 2, 0}), true, true},
        {"2A1", "2A2", vec({0, 2, 0, 0, 0, 0, 0}), true, true},
        {"(3A1)'", "D4(a1)", vec({0, 0, 0, 0, 2, 0, 0}), true, true},
        {"A2+A1", "A4", vec({0, 2, 0, 0, 0, 2, 0}), true, true},
        {"A2+2A1", "A4+A2", vec({0, 0, 0, 2, 0, 0, 0}), true, true},
        {"2A2+A1", "E6(a3)", vec({0, 2, 0, 0, 2, 0, 0}), true, true},
        {"A3+A2", "A6", vec({0, 2, 0, 2, 0, 0, 0}), false, false},
        {"A4+A1", "E6(a1)", vec({0, 2, 0, 2, 0, 2, 0}), true, true},
    };
  if (t.series == Series::E && t.rank == 8)
    return {
        {"A1", "A2", vec({2, 0, 0, 0, 0, 0, 0, 0}), true, true},
        {"2A1", "2A2", vec({0, 0, 0, 0, 0, 0, 2, 0}), true, true},
        {"3A1", "D4(a1)", vec({0, 2, 0, 0, 0, 0, 0, 0}), true, true},
        {"4A1", "D4(a1)+A2", vec({0, 0, 0, 0, 0, 0, 0, 2}), true, true},
        {"A2+A1", "A4", vec({2, 0, 0, 0, 0, 0, 2, 0}), true, true},
        {"A2+2A1", "A4+A2", vec({0, 0, 2, 0, 0, 0, 0, 0}), true, true},
        {"2A2+A1", "E6(a3)", vec({0, 2, 0, 0, 0, 0, 2, 0}), true, true},
        {"2A2+2A1", "E8(a7)", vec({0, 0, 0, 2, 0, 0, 0, 0}), true, true},
        {"A3+A2", "A6", vec({0, 0, 2, 0, 0, 0, 2, 0}), false, false},
        {"A4+A1", "E6(a1)", vec({2, 0, 2, 0, 0, 0, 2, 0}), true, true},
        {"A4+2A1", "E8(b6)", vec({2, 0, 0, 0, 2, 0, 0, 0}), true, false},
        {"A4+A3", "E8(a6)", vec({0, 2, 0, 0, 2, 0, 0, 0}), true, false},
        {"D7(a2)", "E8(a4)", vec({2, 0, 2, 0, 2, 0, 2, 0}), false, false},
    };
  if (t.series == Series::F)
    return {
        {"A1", "A2", vec({0, 0, 0, 2}), true, true},
        {"Ã1", "Ã2", vec({2, 0, 0, 0}), true, true},
        {"A1+Ã1", "F4(a3)", vec({0, 0, 2, 0}), true, true},
        {"A1+Ã2", "F4(a2)", vec({2, 0, 2, 0}), false, false},
    };
  if (t.series == Series::G)
    return {
        {"A1", "G2(a1)", vec({0, 2}), true, true},
    };
  throw std::invalid_argument("exceptional_pair_catalog: no reference rows for " + t.to_string());
}

}  // namespace

Eigen::VectorXi marks_vo_to_bourbaki(const SimpleType& t, const Eigen::VectorXi& vo_marks) {
  if (vo_marks.size() != t.rank)
    throw std::invalid_argument("numbering conversion: rank mismatch");
  const std::vector<int> p = vo_to_b_permutation(t);
  Eigen::VectorXi b(t.rank);
  for (int i = 0; i < t.rank; ++i) b(p[static_cast<size_t>(i)]) = vo_marks(i);
  return b;
}

Eigen::VectorXi marks_bourbaki_to_vo(const SimpleType& t, const Eigen::VectorXi& b_marks) {
  if (b_marks.size() != t.rank)
    throw std::invalid_argument("numbering conversion: rank mismatch");
  const std::vector<int> p = vo_to_b_permutation(t);
  Eigen::VectorXi vo(t.rank);
  for (int i = 0; i < t.rank; ++i) vo(i) = b_marks(p[static_cast<size_t>(i)]);
  return vo;
}

const std::vector<ExceptionalPairRow>& exceptional_pair_catalog(const SimpleType& t) {
  if (t.series == Series::E && t.rank == 6) {
    static const std::vector<ExceptionalPairRow> rows = build_rows(t);
    return rows;
  }
  if (t.series == Series::E && t.rank == 7) {
    static const std::vector<ExceptionalPairRow> rows = build_rows(t);
    return rows;
  }
  if (t.series == Series::E && t.rank == 8) {
    static const std::vector<ExceptionalPairRow> rows = build_rows(t);
    return rows;
  }
  if (t.series == Series::F) {
    static const std::vector<ExceptionalPairRow> rows = build_rows(t);
    return rows;
  }
  if (t.series == Series::G) {
    static const std::vector<ExceptionalPairRow> rows = build_rows(t);
    return rows;
  }
  throw std::invalid_argument("exceptional_pair_catalog: no reference rows for " + t.to_string());
}

}  // namespace nilo
