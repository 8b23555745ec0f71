#include "rbchar/hermite.hpp"

#include <stdexcept>

namespace rbchar {

std::optional<std::size_t> leading_index(const IntVector& v) {
  for (std::size_t i = v.size(); i-- > 0;)
    if (sgn(v[i]) != 0) return i;
  return std::nullopt;
}

std::optional<std::size_t> leading_index(const std::vector<mpq_class>& v) {
  for (std::size_t i = v.size(); i-- > 0;)
    if (sgn(v[i]) != 0) return i;
  return std::nullopt;
}

HermiteBasis::HermiteBasis(std::size_t dim, mpz_class modulus)
    : modulus_(std::move(modulus)), rows_(dim) {
  if (modulus_ < 0) throw std::invalid_argument("negative modulus");
  if (modulus_ != 0) {
    for (std::size_t j = 0; j < dim; ++j) {
      IntVector e(dim);
      e[j] = modulus_;
      rows_[j] = std::move(e);
    }
  }
}

void HermiteBasis::normalize(IntVector& v, std::optional<std::size_t> keep) const {
  if (modulus_ == 0) return;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (keep && *keep == i) continue;
    mpz_fdiv_r(v[i].get_mpz_t(), v[i].get_mpz_t(), modulus_.get_mpz_t());
  }
}

bool HermiteBasis::insert(IntVector v) {
  if (v.size() != dim()) throw std::invalid_argument("vector has wrong dimension");
  bool grew = false;
  normalize(v, std::nullopt);
  for (;;) {
    auto lead = leading_index(v);
    if (!lead) return grew;
    std::size_t j = *lead;
    if (!rows_[j]) {
      if (sgn(v[j]) < 0)
        for (auto& x : v) x = -x;
      normalize(v, j);
      rows_[j] = std::move(v);
      return true;
    }
    IntVector& r = *rows_[j];
    const mpz_class p = r[j];
    const mpz_class a = v[j];
    if (mpz_divisible_p(a.get_mpz_t(), p.get_mpz_t())) {
      mpz_class q = a / p;
      for (std::size_t i = 0; i <= j; ++i) v[i] -= q * r[i];
      normalize(v, std::nullopt);
      continue;
    }
    // g = s·p + t·a; the new pivot row is s·r + t·v and (a/g)·r - (p/g)·v
    // has a zero at j.
    mpz_class g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), p.get_mpz_t(), a.get_mpz_t());
    mpz_class ag = a / g, pg = p / g;
    IntVector new_row(dim()), rest(dim());
    for (std::size_t i = 0; i <= j; ++i) {
      new_row[i] = s * r[i] + t * v[i];
      rest[i] = ag * r[i] - pg * v[i];
    }
    normalize(new_row, j);
    r = std::move(new_row);
    v = std::move(rest);
    normalize(v, std::nullopt);
    grew = true;
  }
}

void HermiteBasis::reduce() {
  for (std::size_t i = 0; i < dim(); ++i) {
    if (!rows_[i]) continue;
    IntVector& r = *rows_[i];
    for (std::size_t k = i; k-- > 0;) {
      if (!rows_[k]) continue;
      const IntVector& low = *rows_[k];
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), r[k].get_mpz_t(), low[k].get_mpz_t());
      if (q == 0) continue;
      for (std::size_t c = 0; c <= k; ++c) r[c] -= q * low[c];
    }
    normalize(r, i);
  }
}

std::vector<std::size_t> HermiteBasis::pivots() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < dim(); ++i)
    if (rows_[i]) out.push_back(i);
  return out;
}

std::size_t HermiteBasis::rank() const { return pivots().size(); }

IntVector HermiteBasis::remainder(IntVector v) const {
  if (v.size() != dim()) throw std::invalid_argument("vector has wrong dimension");
  normalize(v, std::nullopt);
  for (;;) {
    auto lead = leading_index(v);
    if (!lead || !rows_[*lead]) return v;
    const IntVector& r = *rows_[*lead];
    const mpz_class& p = r[*lead];
    if (!mpz_divisible_p(v[*lead].get_mpz_t(), p.get_mpz_t())) return v;
    mpz_class q = v[*lead] / p;
    for (std::size_t i = 0; i <= *lead; ++i) v[i] -= q * r[i];
    normalize(v, std::nullopt);
  }
}

std::vector<mpq_class> HermiteBasis::remainder(std::vector<mpq_class> v) const {
  if (v.size() != dim()) throw std::invalid_argument("vector has wrong dimension");
  for (;;) {
    auto lead = leading_index(v);
    if (!lead || !rows_[*lead]) return v;
    const IntVector& r = *rows_[*lead];
    mpq_class q = v[*lead] / mpq_class(r[*lead]);
    for (std::size_t i = 0; i <= *lead; ++i) v[i] -= q * mpq_class(r[i]);
  }
}

bool HermiteBasis::contains(const IntVector& v) const { return !leading_index(remainder(v)); }

}  // namespace rbchar
