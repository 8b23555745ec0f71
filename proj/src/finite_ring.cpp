#include "rbchar/finite_ring.hpp"

#include <map>
#include <string>

namespace rbchar {

namespace {

constexpr std::int64_t kMaxOrder = 1'000'000;
constexpr std::size_t kMaxElements = 1'000'000;

std::int64_t mod(__int128 v, std::int64_t n) {
  __int128 r = v % n;
  if (r < 0) r += n;
  return static_cast<std::int64_t>(r);
}

}  // namespace

FiniteRing::FiniteRing(std::vector<std::int64_t> orders, RingElem unit,
                       std::vector<std::vector<RingElem>> mult)
    : orders_(std::move(orders)), unit_(std::move(unit)), mult_(std::move(mult)) {
  const std::size_t k = orders_.size();
  if (k == 0) throw std::invalid_argument("a ring needs at least one component");
  for (auto n : orders_)
    if (n < 1 || n > kMaxOrder) throw std::invalid_argument("component order out of range");
  if (size() > kMaxElements) throw std::invalid_argument("ring too large for exhaustive checks");
  if (unit_.size() != k) throw std::invalid_argument("unit has the wrong number of components");
  unit_ = normalize(unit_);
  if (mult_.size() != k) throw std::invalid_argument("multiplication table has the wrong size");
  for (auto& row : mult_) {
    if (row.size() != k) throw std::invalid_argument("multiplication table has the wrong size");
    for (auto& e : row) {
      if (e.size() != k) throw std::invalid_argument("table entry has the wrong number of components");
      e = normalize(e);
    }
  }
  auto basis = [&](std::size_t i) {
    RingElem e(k, 0);
    e[i] = 1 % orders_[i];
    return e;
  };
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t l = 0; l < k; ++l) {
        if (mod(static_cast<__int128>(orders_[i]) * mult_[i][j][l], orders_[l]) != 0 ||
            mod(static_cast<__int128>(orders_[j]) * mult_[i][j][l], orders_[l]) != 0)
          throw std::invalid_argument("multiplication table does not respect component orders");
      }
      if (mult_[i][j] != mult_[j][i]) throw std::invalid_argument("multiplication is not commutative");
      for (std::size_t l = 0; l < k; ++l) {
        if (mul(mult_[i][j], basis(l)) != mul(basis(i), mult_[j][l]))
          throw std::invalid_argument("multiplication is not associative");
      }
    }
    if (mul(unit_, basis(i)) != basis(i)) throw std::invalid_argument("unit law fails");
  }
}

FiniteRing FiniteRing::zmod(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("Z/n needs n >= 1");
  return FiniteRing({n}, {1}, {{{1}}});
}

std::size_t FiniteRing::size() const {
  std::size_t s = 1;
  for (auto n : orders_) {
    s *= static_cast<std::size_t>(n);
    if (s > kMaxElements) return s;
  }
  return s;
}

std::vector<RingElem> FiniteRing::elements() const {
  std::vector<RingElem> out;
  out.reserve(size());
  RingElem cur = zero();
  for (;;) {
    out.push_back(cur);
    std::size_t i = cur.size();
    while (i-- > 0) {
      if (++cur[i] < orders_[i]) break;
      cur[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) return out;
  }
}

RingElem FiniteRing::normalize(RingElem x) const {
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = mod(x[i], orders_[i]);
  return x;
}

RingElem FiniteRing::add(const RingElem& x, const RingElem& y) const {
  RingElem out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = mod(static_cast<__int128>(x[i]) + y[i], orders_[i]);
  return out;
}

RingElem FiniteRing::mul(const RingElem& x, const RingElem& y) const {
  const std::size_t k = orders_.size();
  std::vector<__int128> acc(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < k; ++j) {
      if (y[j] == 0) continue;
      __int128 xy = static_cast<__int128>(x[i]) * y[j];
      for (std::size_t l = 0; l < k; ++l) acc[l] = mod(acc[l] + mod(xy, orders_[l]) * mult_[i][j][l], orders_[l]);
    }
  }
  RingElem out(k);
  for (std::size_t l = 0; l < k; ++l) out[l] = static_cast<std::int64_t>(acc[l]);
  return out;
}

RingElem FiniteRing::scale(const mpz_class& c, const RingElem& x) const {
  RingElem out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    mpz_class r = c * x[i];
    mpz_class n = static_cast<long>(orders_[i]);
    mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
    out[i] = r.get_si();
  }
  return out;
}

RingElem FiniteRing::scale(std::int64_t c, const RingElem& x) const {
  RingElem out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = mod(static_cast<__int128>(c) * x[i], orders_[i]);
  return out;
}

// ---------------------------------------------------------------------------

RBOperatorTable RBOperatorTable::zero(std::size_t k) {
  return RBOperatorTable(std::vector<std::vector<std::int64_t>>(k, std::vector<std::int64_t>(k, 0)));
}

RBOperatorTable RBOperatorTable::identity(std::size_t k) {
  auto rows = std::vector<std::vector<std::int64_t>>(k, std::vector<std::int64_t>(k, 0));
  for (std::size_t i = 0; i < k; ++i) rows[i][i] = 1;
  return RBOperatorTable(std::move(rows));
}

void RBOperatorTable::check_well_defined(const FiniteRing& ring) const {
  const auto& orders = ring.orders();
  const std::size_t k = orders.size();
  if (rows_.size() != k) throw IllDefinedOperator("operator table has the wrong size");
  for (std::size_t i = 0; i < k; ++i) {
    if (rows_[i].size() != k) throw IllDefinedOperator("operator table has the wrong size");
    for (std::size_t j = 0; j < k; ++j) {
      if (mod(static_cast<__int128>(orders[i]) * rows_[i][j], orders[j]) != 0)
        throw IllDefinedOperator("operator does not respect component orders at (" + std::to_string(i) +
                                 ", " + std::to_string(j) + ")");
    }
  }
}

RingElem RBOperatorTable::apply(const FiniteRing& ring, const RingElem& x) const {
  RingElem out = ring.zero();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    RingElem image(rows_[i].begin(), rows_[i].end());
    out = ring.add(out, ring.scale(x[i], ring.normalize(image)));
  }
  return out;
}

bool verify_rb_operator(const FiniteRing& ring, const RBOperatorTable& op, std::int64_t weight) {
  op.check_well_defined(ring);
  const auto elems = ring.elements();
  std::vector<RingElem> images;
  images.reserve(elems.size());
  for (const auto& x : elems) images.push_back(op.apply(ring, x));
  for (std::size_t a = 0; a < elems.size(); ++a) {
    for (std::size_t b = 0; b < elems.size(); ++b) {
      const RingElem& x = elems[a];
      const RingElem& y = elems[b];
      RingElem lhs = ring.mul(images[a], images[b]);
      RingElem rhs = op.apply(ring, ring.mul(x, images[b]));
      rhs = ring.add(rhs, op.apply(ring, ring.mul(images[a], y)));
      rhs = ring.add(rhs, ring.scale(weight, op.apply(ring, ring.mul(x, y))));
      if (lhs != rhs) return false;
    }
  }
  return true;
}

std::vector<std::int64_t> enumerate_rb_operators(std::int64_t n, std::int64_t weight) {
  if (n < 2) throw std::invalid_argument("enumeration needs n >= 2");
  const FiniteRing ring = FiniteRing::zmod(n);
  std::vector<std::int64_t> out;
  for (std::int64_t c = 0; c < n; ++c)
    if (verify_rb_operator(ring, RBOperatorTable::multiplication_by(c), weight)) out.push_back(c);
  return out;
}

std::vector<RingElem> structure_map_images(const FiniteRing& ring, const RBOperatorTable& op,
                                           std::int64_t weight, std::size_t upto) {
  if (!verify_rb_operator(ring, op, weight))
    throw UnverifiedOperator("operator is not Rota-Baxter of weight " + std::to_string(weight));
  std::vector<RingElem> images{ring.unit()};
  while (images.size() <= upto) images.push_back(op.apply(ring, images.back()));
  return images;
}

RingElem apply_structure_map(const FiniteRing& ring, const std::vector<RingElem>& images,
                             const RBElement& f) {
  if (f.ring().kind() != CoeffRing::Kind::Integers)
    throw RingMismatch("structure map is defined on the algebra over Z");
  RingElem out = ring.zero();
  for (const auto& [d, c] : f.terms()) {
    if (d >= images.size()) throw std::out_of_range("not enough structure-map images");
    out = ring.add(out, ring.scale(c.integer(), images[d]));
  }
  return out;
}

CharacteristicReport characteristic(const FiniteRing& ring, const RBOperatorTable& op,
                                    std::int64_t weight, std::size_t bound) {
  std::vector<RingElem> images = structure_map_images(ring, op, weight, bound);
  const CoeffRing z = CoeffRing::integers();
  const AlgebraCtx ctx(z, z.make(weight));

  std::size_t orbit_start = 0, orbit_period = 0;
  {
    std::map<RingElem, std::size_t> seen;
    RingElem cur = ring.unit();
    for (std::size_t m = 0;; ++m) {
      auto [it, inserted] = seen.emplace(cur, m);
      if (!inserted) {
        orbit_start = it->second;
        orbit_period = m - it->second;
        break;
      }
      cur = op.apply(ring, cur);
    }
  }

  // Coordinates 0..bound carry the coefficients b_i of Σ b_i a_i; the next k
  // carry the image in the additive group. Lattice vectors with a zero image
  // part are exactly the kernel elements, and their pivot is the degree.
  const std::size_t k = ring.components();
  const std::size_t dim = bound + 1 + k;
  HermiteBasis basis(dim);
  for (std::size_t l = 0; l < k; ++l) {
    IntVector v(dim);
    v[bound + 1 + l] = static_cast<long>(ring.orders()[l]);
    basis.insert(std::move(v));
  }
  for (std::size_t i = 0; i <= bound; ++i) {
    IntVector v(dim);
    v[i] = 1;
    for (std::size_t l = 0; l < k; ++l) v[bound + 1 + l] = static_cast<long>(images[i][l]);
    basis.insert(std::move(v));
  }
  basis.reduce();

  std::vector<KIdeal> omegas;
  std::vector<std::optional<RBElement>> witnesses;
  for (std::size_t j = 0; j <= bound; ++j) {
    if (!basis.has_pivot(j)) {
      omegas.push_back(KIdeal::zero(z));
      witnesses.emplace_back();
      continue;
    }
    const IntVector& row = basis.row(j);
    omegas.emplace_back(z, row[j]);
    RBElement f(ctx);
    for (std::size_t i = 0; i <= j; ++i) f.add_term(i, z.make(row[i]));
    witnesses.emplace_back(std::move(f));
  }

  std::vector<AscentPair> pairs;
  KIdeal prev = KIdeal::zero(z);
  for (std::size_t j = 0; j <= bound; ++j) {
    if (!(omegas[j] == prev)) {
      pairs.push_back({j, omegas[j]});
      prev = omegas[j];
    }
  }

  bool stable = bound >= orbit_start + orbit_period || omegas.back().is_unit();
  return CharacteristicReport{AscentSet(z, std::move(pairs)), std::move(omegas), std::move(witnesses),
                              std::move(images), orbit_start, orbit_period, stable};
}

}  // namespace rbchar
