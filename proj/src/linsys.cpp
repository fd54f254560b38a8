#include "mzv/linsys.hpp"

#include <stdexcept>

namespace mzv {

void normalize_content(std::vector<Integer>& v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g == 0) return;
  for (const auto& x : v)
    if (x != 0) {
      if (x < 0) g = -g;
      break;
    }
  for (auto& x : v) x /= g;
}

void LinSystem::add_row(const std::vector<Rational>& row) {
  if (row.size() != ncols_) throw std::invalid_argument("row length");
  Integer den = 1;
  for (const auto& q : row) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  std::vector<Integer> r(ncols_);
  bool nz = false;
  for (size_t j = 0; j < ncols_; ++j) {
    Rational t = row[j] * Rational(den);
    r[j] = t.get_num();
    nz = nz || r[j] != 0;
  }
  if (!nz) return;
  normalize_content(r);
  rows_.push_back(std::move(r));
}

void LinSystem::eliminate(std::vector<std::vector<Integer>>& rows, std::vector<size_t>& pivots) const {
  size_t top = 0;
  for (size_t c = 0; c < ncols_ && top < rows.size(); ++c) {
    size_t p = top;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[top], rows[p]);
    const auto& piv = rows[top];
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == top || rows[i][c] == 0) continue;
      Integer a = piv[c], b = rows[i][c];
      for (size_t j = 0; j < ncols_; ++j) rows[i][j] = a * rows[i][j] - b * piv[j];
      normalize_content(rows[i]);
    }
    pivots.push_back(c);
    ++top;
  }
  rows.resize(top);
}

size_t LinSystem::rank() const {
  auto rows = rows_;
  std::vector<size_t> piv;
  eliminate(rows, piv);
  return piv.size();
}

std::vector<std::vector<Integer>> LinSystem::kernel() const {
  auto rows = rows_;
  std::vector<size_t> piv;
  eliminate(rows, piv);
  std::vector<bool> is_piv(ncols_, false);
  for (auto c : piv) is_piv[c] = true;
  std::vector<std::vector<Integer>> out;
  for (size_t f = 0; f < ncols_; ++f) {
    if (is_piv[f]) continue;
    // x_f = 1, pivots solved from the reduced rows
    std::vector<Rational> v(ncols_);
    v[f] = 1;
    for (size_t i = 0; i < rows.size(); ++i) v[piv[i]] = -Rational(rows[i][f]) / Rational(rows[i][piv[i]]);
    Integer den = 1;
    for (const auto& q : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    std::vector<Integer> iv(ncols_);
    for (size_t j = 0; j < ncols_; ++j) iv[j] = Rational(v[j] * Rational(den)).get_num();
    normalize_content(iv);
    out.push_back(std::move(iv));
  }
  return out;
}

}  // namespace mzv
