// Independent reference computations for the tests: dense complex 3x3
// matrices, exhaustive group closure and conjugation, Gaussian elimination,
// and direct lattice scans. Nothing here reuses the library's algorithms.
#ifndef MCKAY_TESTS_ORACLE_HPP_
#define MCKAY_TESTS_ORACLE_HPP_

#include <array>
#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <set>
#include <vector>

#include "mckay/group.hpp"

namespace oracle {

using cd = std::complex<double>;
using Mat = std::array<std::array<cd, 3>, 3>;

inline cd root_of_unity(const mckay::Rat& q) {
  double t = 2.0 * std::numbers::pi * static_cast<double>(q.num()) / static_cast<double>(q.den());
  return {std::cos(t), std::sin(t)};
}

inline Mat matrix(const mckay::MonomialElement& e) {
  Mat m{};
  for (int i = 0; i < 3; ++i)
    m[i][e.perm(i)] = root_of_unity(e.phases[i]);
  return m;
}

inline Mat mul(const Mat& a, const Mat& b) {
  Mat c{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        c[i][j] += a[i][k] * b[k][j];
  return c;
}

inline Mat identity() {
  Mat m{};
  for (int i = 0; i < 3; ++i)
    m[i][i] = 1.0;
  return m;
}

inline cd det(const Mat& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

inline bool close(const Mat& a, const Mat& b) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (std::abs(a[i][j] - b[i][j]) > 1e-7)
        return false;
  return true;
}

// Rounded key so nearly equal matrices collide.
inline std::array<long long, 18> key(const Mat& m) {
  std::array<long long, 18> k{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      k[6 * i + 2 * j] = std::llround(m[i][j].real() * 1e6);
      k[6 * i + 2 * j + 1] = std::llround(m[i][j].imag() * 1e6);
    }
  return k;
}

struct Group {
  std::vector<Mat> elems;
  std::map<std::array<long long, 18>, std::size_t> index;

  std::size_t find(const Mat& m) const { return index.at(key(m)); }
};

inline Group closure(const std::vector<mckay::MonomialElement>& gens) {
  std::vector<Mat> gm;
  for (const auto& g : gens)
    gm.push_back(matrix(g));
  Group g;
  g.elems.push_back(identity());
  g.index.emplace(key(identity()), 0);
  for (std::size_t h = 0; h < g.elems.size(); ++h)
    for (const auto& s : gm) {
      Mat y = mul(g.elems[h], s);
      if (g.index.emplace(key(y), g.elems.size()).second)
        g.elems.push_back(y);
    }
  return g;
}

inline std::size_t inverse_of(const Group& g, std::size_t i) {
  for (std::size_t j = 0; j < g.elems.size(); ++j)
    if (close(mul(g.elems[i], g.elems[j]), identity()))
      return j;
  return g.elems.size();
}

inline std::size_t class_count(const Group& g) {
  const std::size_t n = g.elems.size();
  std::vector<std::size_t> inv(n);
  for (std::size_t i = 0; i < n; ++i)
    inv[i] = inverse_of(g, i);
  std::vector<char> seen(n, 0);
  std::size_t classes = 0;
  for (std::size_t x = 0; x < n; ++x) {
    if (seen[x])
      continue;
    ++classes;
    for (std::size_t h = 0; h < n; ++h)
      seen[g.find(mul(mul(g.elems[h], g.elems[x]), g.elems[inv[h]]))] = 1;
  }
  return classes;
}

inline std::size_t commuting_pairs(const Group& g) {
  std::size_t count = 0;
  for (const auto& a : g.elems)
    for (const auto& b : g.elems)
      count += close(mul(a, b), mul(b, a));
  return count;
}

// dim of the common kernel of (A - I), by row reduction of the stacked matrix
inline int fixed_dim(const std::vector<Mat>& ms) {
  std::vector<std::array<cd, 3>> rows;
  for (const auto& m : ms)
    for (int i = 0; i < 3; ++i) {
      std::array<cd, 3> r = m[i];
      r[i] -= 1.0;
      rows.push_back(r);
    }
  int rank = 0;
  for (int col = 0; col < 3 && rank < static_cast<int>(rows.size()); ++col) {
    std::size_t piv = rows.size();
    double best = 1e-9;
    for (std::size_t r = rank; r < rows.size(); ++r)
      if (std::abs(rows[r][col]) > best) {
        best = std::abs(rows[r][col]);
        piv = r;
      }
    if (piv == rows.size())
      continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == static_cast<std::size_t>(rank))
        continue;
      cd f = rows[r][col] / rows[rank][col];
      for (int c = 0; c < 3; ++c)
        rows[r][c] -= f * rows[rank][c];
    }
    ++rank;
  }
  return 3 - rank;
}

// Diagonal phase vectors of a closed group, as exact rationals.
inline std::vector<std::array<mckay::Rat, 3>> diagonal_phases(
    const std::vector<mckay::MonomialElement>& elems) {
  std::vector<std::array<mckay::Rat, 3>> out;
  for (const auto& e : elems)
    if (e.perm.is_identity())
      out.push_back(e.phases);
  return out;
}

// Points (a,b,c)/d of the junior simplex lying in Z^3 + span of the phases,
// found by scanning every numerator triple against every phase vector.
inline std::set<std::array<long long, 3>> simplex_scan(
    const std::vector<std::array<mckay::Rat, 3>>& phases, long long d) {
  std::set<std::array<long long, 3>> out;
  for (long long a = 0; a <= d; ++a)
    for (long long b = 0; a + b <= d; ++b) {
      long long c = d - a - b;
      std::array<mckay::Rat, 3> p{mckay::Rat(a, d), mckay::Rat(b, d), mckay::Rat(c, d)};
      for (const auto& ph : phases) {
        bool match = true;
        for (int i = 0; i < 3; ++i)
          match = match && (p[i] - ph[i]).is_integer();
        if (match) {
          out.insert({a, b, c});
          break;
        }
      }
    }
  return out;
}

} // namespace oracle

#endif
