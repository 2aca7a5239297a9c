#include "qgr/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace qgr {

std::vector<Int> parse_int_csv(const std::string& csv) {
  std::vector<Int> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    auto b = tok.find_first_not_of(" \t");
    auto e = tok.find_last_not_of(" \t");
    if (b == std::string::npos) throw std::invalid_argument("empty entry in integer list");
    out.emplace_back(tok.substr(b, e - b + 1));
  }
  return out;
}

std::vector<Rat> parse_rat_csv(const std::string& csv) {
  std::vector<Rat> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    auto b = tok.find_first_not_of(" \t");
    auto e = tok.find_last_not_of(" \t");
    if (b == std::string::npos) throw std::invalid_argument("empty entry in rational list");
    out.push_back(parse_rational(tok.substr(b, e - b + 1)));
  }
  return out;
}

std::vector<std::size_t> rref(RatMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Rat inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rat f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(const RatMatrix& m) {
  RatMatrix w = m;
  return rref(w).size();
}

std::size_t rank(const IntMatrix& m) { return rank(to_rational(m)); }

RatMatrix right_kernel(const RatMatrix& m) {
  RatMatrix w = m;
  auto pivots = rref(w);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::size_t free_count = m.cols() - pivots.size();
  RatMatrix k(m.cols(), free_count);
  std::size_t fi = 0;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    k(c, fi) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) k(pivots[r], fi) = -w(r, c);
    ++fi;
  }
  return k;
}

RatMatrix left_kernel(const RatMatrix& m) {
  return right_kernel(m.transpose()).transpose();
}

std::optional<std::vector<Rat>> solve(const RatMatrix& m, const std::vector<Rat>& b) {
  assert(b.size() == m.rows());
  RatMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  std::vector<Rat> x(m.cols(), 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, m.cols());
  return x;
}

IntMatrix unipotent_inverse(const IntMatrix& n) {
  const std::size_t p = n.rows();
  IntMatrix u = n - IntMatrix::identity(p);
  IntMatrix acc = IntMatrix::identity(p);
  IntMatrix term = IntMatrix::identity(p);
  for (std::size_t l = 1; l <= p; ++l) {
    term = term * u;
    if (term.is_zero()) break;
    if (l % 2 == 1)
      acc = acc - term;
    else
      acc = acc + term;
  }
  return acc;
}

IntMatrix unipotent_power(const IntMatrix& n, const Int& z) {
  if (z >= 0) return n.pow(z.get_ui());
  Int a = -z;
  return unipotent_inverse(n).pow(a.get_ui());
}

std::vector<Rat> BinomialPolynomial::monomial_coeffs() const {
  // C(z, l) expanded by repeated multiplication of (z - t)/(t + 1).
  std::vector<Rat> acc;
  if (coeffs_.empty()) return acc;
  acc.assign(coeffs_.size(), Rat(0));
  std::vector<Rat> basis{Rat(1)};  // C(z, 0)
  for (std::size_t l = 0; l < coeffs_.size(); ++l) {
    for (std::size_t j = 0; j < basis.size(); ++j) acc[j] += coeffs_[l] * basis[j];
    // basis *= (z - l) / (l + 1)
    std::vector<Rat> next(basis.size() + 1, Rat(0));
    Rat d = Rat(1) / Rat(static_cast<long>(l) + 1);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      next[j + 1] += basis[j] * d;
      next[j] -= basis[j] * Rat(static_cast<long>(l)) * d;
    }
    basis = std::move(next);
  }
  while (!acc.empty() && acc.back() == 0) acc.pop_back();
  return acc;
}

Rat BinomialPolynomial::leading_monomial_coeff() const {
  auto mono = monomial_coeffs();
  if (mono.empty()) return Rat(0);
  return mono.back();
}

Int BinomialPolynomial::real_root_bound() const {
  auto mono = monomial_coeffs();
  if (mono.size() <= 1) return Int(0);
  Rat lead = mono.back();
  Rat mx = 0;
  for (std::size_t i = 0; i + 1 < mono.size(); ++i) {
    Rat a = abs(mono[i] / lead);
    if (a > mx) mx = a;
  }
  Rat bound = mx + 1;
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), bound.get_num_mpz_t(), bound.get_den_mpz_t());
  return r;
}

}  // namespace qgr
