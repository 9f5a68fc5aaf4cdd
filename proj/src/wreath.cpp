#include "dilute/wreath.hpp"

#include <map>
#include <stdexcept>

namespace dilute {

namespace {

RationalScalar xv(int k = 1) { return RationalScalar::variable(Var::x, k); }

ScalarMatrix diag2(const RationalScalar& a, const RationalScalar& b) {
  ScalarMatrix m(2, 2);
  m.at(0, 0) = a;
  m.at(1, 1) = b;
  return m;
}

ScalarMatrix scalar1(const RationalScalar& a) {
  ScalarMatrix m(1, 1);
  m.at(0, 0) = a;
  return m;
}

const ScalarMatrix& generator_image(const WreathRep& r, int letter) {
  switch (letter) {
    case 0: return r.sigma;
    case 1: return r.q1;
    case 2: return r.q2;
    default: throw std::invalid_argument("letters are 0 (sigma), 1 (q1), 2 (q2)");
  }
}

}  // namespace

WreathRep rep_dim2(int n) {
  WreathRep r;
  r.q1 = diag2(xv(n), RationalScalar(1));
  r.q2 = diag2(RationalScalar(1), xv(n));
  r.sigma = ScalarMatrix(2, 2);
  r.sigma.at(0, 1) = RationalScalar(1);
  r.sigma.at(1, 0) = RationalScalar(1);
  return r;
}

WreathRep rep_sign(int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +-1");
  WreathRep r;
  r.q1 = scalar1(RationalScalar(1));
  r.q2 = scalar1(RationalScalar(1));
  r.sigma = scalar1(RationalScalar(sign));
  return r;
}

WreathRep rep_twist(int k) {
  WreathRep r;
  r.q1 = scalar1(xv(k));
  r.q2 = scalar1(xv(k));
  r.sigma = scalar1(RationalScalar(1));
  return r;
}

bool relations_hold(const WreathRep& r) {
  const int d = r.dim();
  ScalarMatrix id = ScalarMatrix::identity(d);
  if (!(r.sigma * r.sigma == id)) return false;
  if (!(r.sigma * r.q1 == r.q2 * r.sigma)) return false;
  if (!(r.sigma * r.q2 == r.q1 * r.sigma)) return false;
  if (!(r.q1 * r.q2 == r.q2 * r.q1)) return false;
  // antipode: group-likes invert, so the q_i must have full rank
  if (rank(r.q1) != d || rank(r.q2) != d) return false;
  if (d <= 2) {
    if (!(r.q1 * inverse2x2(r.q1) == id)) return false;
    if (!(r.q2 * inverse2x2(r.q2) == id)) return false;
  }
  return true;
}

WreathRep tensor(const WreathRep& a, const WreathRep& b) {
  WreathRep r;
  r.q1 = kronecker(a.q1, b.q1);
  r.q2 = kronecker(a.q2, b.q2);
  r.sigma = kronecker(a.sigma, b.sigma);
  return r;
}

RationalScalar character(const WreathRep& r, const std::vector<int>& word) {
  ScalarMatrix m = ScalarMatrix::identity(r.dim());
  for (int letter : word) m = m * generator_image(r, letter);
  RationalScalar tr;
  for (int i = 0; i < r.dim(); ++i) tr += m.at(i, i);
  return tr;
}

bool is_irreducible(const WreathRep& r) {
  const int d = r.dim();
  // commutant: solve M g = g M for g in {sigma, q1, q2}
  ScalarMatrix system(3 * d * d, d * d);
  int row = 0;
  for (int letter : {0, 1, 2}) {
    const ScalarMatrix& g = generator_image(r, letter);
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        // sum_k M_ik g_kj - g_ik M_kj = 0; coefficient of M_ab
        for (int a = 0; a < d; ++a)
          for (int b = 0; b < d; ++b) {
            RationalScalar coeff;
            if (a == i) coeff += g.at(b, j);
            if (b == j) coeff -= g.at(i, a);
            system.at(row, a * d + b) = coeff;
          }
        ++row;
      }
    }
  }
  return rank(std::move(system)) == d * d - 1;
}

namespace {

std::vector<std::vector<int>> words_up_to_length(int max_len) {
  std::vector<std::vector<int>> out = {{}};
  std::vector<std::vector<int>> frontier = {{}};
  for (int l = 0; l < max_len; ++l) {
    std::vector<std::vector<int>> next;
    for (const auto& w : frontier) {
      for (int letter : {0, 1, 2}) {
        auto w2 = w;
        w2.push_back(letter);
        next.push_back(w2);
        out.push_back(std::move(w2));
      }
    }
    frontier = std::move(next);
  }
  return out;
}

// columns of `cols` as a d x k matrix
ScalarMatrix columns(int dim, const std::vector<std::vector<RationalScalar>>& cols) {
  ScalarMatrix m(dim, static_cast<int>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (int i = 0; i < dim; ++i) m.at(i, static_cast<int>(j)) = cols[j][i];
  return m;
}

}  // namespace

bool tensor_decomposition_holds(int n) {
  if (n < 1) throw std::invalid_argument("decomposition needs n >= 1");
  WreathRep big = tensor(rep_dim2(1), rep_dim2(n));
  WreathRep up = rep_dim2(n + 1);
  WreathRep down = tensor(rep_twist(1), rep_dim2(n - 1));

  RationalScalar zero, one(1), xinv = xv(-1);
  // Kronecker basis order: e1e1, e1e2, e2e1, e2e2
  ScalarMatrix s_up = columns(4, {{one, zero, zero, zero}, {zero, zero, zero, one}});
  ScalarMatrix s_down = columns(4, {{zero, zero, xinv, zero}, {zero, xinv, zero, zero}});

  for (int letter : {0, 1, 2}) {
    const ScalarMatrix& g = generator_image(big, letter);
    if (!(g * s_up == s_up * generator_image(up, letter))) return false;
    if (!(g * s_down == s_down * generator_image(down, letter))) return false;
  }
  // the two subspaces together span
  ScalarMatrix both(4, 4);
  for (int i = 0; i < 4; ++i) {
    both.at(i, 0) = s_up.at(i, 0);
    both.at(i, 1) = s_up.at(i, 1);
    both.at(i, 2) = s_down.at(i, 0);
    both.at(i, 3) = s_down.at(i, 1);
  }
  if (rank(both) != 4) return false;

  // character comparison, independent of the chosen bases
  for (const auto& w : words_up_to_length(3)) {
    if (character(big, w) != character(up, w) + character(down, w)) return false;
  }
  return true;
}

bool sign_tensor_lemma_holds() {
  WreathRep base = rep_dim2(1);
  WreathRep plus = tensor(base, rep_sign(+1));
  if (!(plus == base)) return false;

  WreathRep minus = tensor(base, rep_sign(-1));
  // change of basis (f1, -f2)
  ScalarMatrix c = diag2(RationalScalar(1), RationalScalar(-1));
  for (int letter : {0, 1, 2}) {
    ScalarMatrix conj = c * generator_image(minus, letter) * c;  // c is its own inverse
    if (!(conj == generator_image(base, letter))) return false;
  }
  for (const auto& w : words_up_to_length(3)) {
    if (character(minus, w) != character(base, w)) return false;
    if (character(plus, w) != character(base, w)) return false;
  }
  return true;
}

std::vector<std::vector<long>> iterated_multiplicity_rows(int n_max) {
  // labels: m >= 1 for the two-dimensional types, kPlus / kMinus for the two
  // one-dimensional summands; the twist character is determined by the level
  // and m, so multiplicity is keyed by the type alone.
  constexpr int kPlus = 0, kMinus = -1;
  std::map<int, long> mult = {{kPlus, 1}};  // the empty tensor power is trivial
  std::vector<std::vector<long>> rows;
  auto at = [](const std::map<int, long>& m, int k) {
    auto it = m.find(k);
    return it == m.end() ? 0L : it->second;
  };
  rows.push_back({1});  // level 0: the single trivial module, not a split pair
  for (int level = 1; level <= n_max; ++level) {
    std::map<int, long> next;
    for (const auto& [m, count] : mult) {
      if (m == kPlus || m == kMinus) {
        next[1] += count;
      } else if (m == 1) {
        next[2] += count;
        next[kPlus] += count;
        next[kMinus] += count;
      } else {
        next[m + 1] += count;
        next[m - 1] += count;
      }
    }
    mult = std::move(next);
    std::vector<long> row;
    if (level % 2 == 0) {
      row.push_back(at(mult, kPlus));
      row.push_back(at(mult, kMinus));
      for (int k = 2; k <= level; k += 2) row.push_back(at(mult, k));
    } else {
      for (int k = 1; k <= level; k += 2) row.push_back(at(mult, k));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace dilute
