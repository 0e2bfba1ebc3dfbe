#include "jacobian.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <set>

#include <json.hpp>

#include "error.hpp"

namespace qe {

namespace {

using SparseRow = std::vector<std::pair<int, Scalar>>;  // ascending column

// dst -= f * src
void sub_scaled(SparseRow& dst, const Scalar& f, const SparseRow& src) {
  SparseRow out;
  out.reserve(dst.size() + src.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < dst.size() || j < src.size()) {
    if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
      out.push_back(std::move(dst[i++]));
    } else if (i == dst.size() || src[j].first < dst[i].first) {
      out.emplace_back(src[j].first, -(f * src[j].second));
      ++j;
    } else {
      Scalar v = dst[i].second - f * src[j].second;
      if (!v.is_zero()) out.emplace_back(dst[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  dst = std::move(out);
}

void add_scaled(Row& dst, const Scalar& f, const Row& src) {
  for (std::size_t k = 0; k < dst.size(); ++k) {
    if (!src[k].is_zero()) dst[k] += f * src[k];
  }
}

bool all_zero(const Row& r) {
  return std::all_of(r.begin(), r.end(), [](const Scalar& s) { return s.is_zero(); });
}

}  // namespace

Row GradedPiece::reduce(const Poly& p) const {
  const FieldId field = p.field();
  Row out(dim(), Scalar::zero(field));
  for (const auto& [m, c] : p.terms()) {
    const auto it = normal_form.find(m);
    if (it == normal_form.end()) fail(ErrorKind::Internal, "monomial outside graded piece " + std::to_string(degree));
    add_scaled(out, c, it->second);
  }
  return out;
}

JacobianRing::JacobianRing(Poly f) : f_(std::move(f)), e_(weighted_degree(f_)) {
  const auto& ring = f_.ring();
  const std::uint32_t p = ring.field().characteristic();
  if (p != 0) {
    if (e_ % static_cast<int>(p) == 0) fail(ErrorKind::BadCharacteristic, "characteristic divides the degree");
    for (int w : ring.weights()) {
      if (w % static_cast<int>(p) == 0) fail(ErrorKind::BadCharacteristic, "characteristic divides a weight");
    }
  }
  for (int i = 0; i < ring.num_vars(); ++i) partials_.push_back(partial_derivative(f_, i));
  socle_ = ring.num_vars() * e_ - 2 * ring.weight_sum();
  if (!euler_defect(f_).is_zero()) fail(ErrorKind::Internal, "Euler relation fails for a homogeneous input");
}

const GradedPiece& JacobianRing::piece(int m) const {
  {
    std::lock_guard lock(mu_);
    const auto it = cache_.find(m);
    if (it != cache_.end()) return *it->second;
  }
  auto computed = compute_piece(m);
  std::lock_guard lock(mu_);
  const auto [it, inserted] = cache_.emplace(m, std::move(computed));
  (void)inserted;
  return *it->second;
}

std::shared_ptr<const GradedPiece> JacobianRing::compute_piece(int m) const {
  auto piece = std::make_shared<GradedPiece>();
  piece->degree = m;
  if (m < 0) return piece;
  const auto& ring = f_.ring();
  const FieldId field = ring.field();
  piece->monomials = monomials_of_degree(ring, m);
  const auto& mons = piece->monomials;
  const int cols = static_cast<int>(mons.size());
  std::unordered_map<Monomial, int, MonomialHash> index;
  index.reserve(mons.size());
  for (int c = 0; c < cols; ++c) index.emplace(mons[static_cast<std::size_t>(c)], c);

  std::vector<std::optional<SparseRow>> pivots(static_cast<std::size_t>(cols));
  int npivots = 0;
  for (int i = 0; i < ring.num_vars() && npivots < cols; ++i) {
    const Poly& fi = partials_[static_cast<std::size_t>(i)];
    if (fi.is_zero()) continue;
    const int d = e_ - ring.weight(i);
    for (const auto& mu : monomials_of_degree(ring, m - d)) {
      SparseRow row;
      row.reserve(fi.size());
      for (const auto& [nu, c] : fi.terms()) row.emplace_back(index.at(nu * mu), c);
      std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      while (!row.empty()) {
        const auto& piv = pivots[static_cast<std::size_t>(row.front().first)];
        if (!piv) break;
        const Scalar f = row.front().second;
        sub_scaled(row, f, *piv);
      }
      if (row.empty()) continue;
      const Scalar inv = row.front().second.inv();
      for (auto& [c, v] : row) v *= inv;
      pivots[static_cast<std::size_t>(row.front().first)] = std::move(row);
      if (++npivots == cols) break;
    }
  }

  std::vector<int> basis_index(static_cast<std::size_t>(cols), -1);
  for (int c = 0; c < cols; ++c) {
    if (!pivots[static_cast<std::size_t>(c)]) {
      basis_index[static_cast<std::size_t>(c)] = static_cast<int>(piece->basis.size());
      piece->basis.push_back(mons[static_cast<std::size_t>(c)]);
    }
  }
  const std::size_t dim = piece->basis.size();
  std::vector<Row> nf(static_cast<std::size_t>(cols));
  for (int c = cols; c-- > 0;) {
    Row r(dim, Scalar::zero(field));
    const auto& piv = pivots[static_cast<std::size_t>(c)];
    if (!piv) {
      r[static_cast<std::size_t>(basis_index[static_cast<std::size_t>(c)])] = Scalar::one(field);
    } else {
      // lead + sum v_c' [c'] = 0 in the quotient.
      for (std::size_t k = 1; k < piv->size(); ++k) {
        const auto& [cc, v] = (*piv)[k];
        add_scaled(r, -v, nf[static_cast<std::size_t>(cc)]);
      }
    }
    nf[static_cast<std::size_t>(c)] = std::move(r);
  }
  piece->normal_form.reserve(mons.size());
  for (int c = 0; c < cols; ++c) piece->normal_form.emplace(mons[static_cast<std::size_t>(c)], std::move(nf[static_cast<std::size_t>(c)]));
  return piece;
}

std::vector<std::size_t> JacobianRing::hilbert_function(int up_to) const {
  std::vector<std::size_t> out;
  for (int m = 0; m <= up_to; ++m) out.push_back(piece(m).dim());
  return out;
}

bool JacobianRing::is_finite_dimensional() const {
  if (socle_ < 0) return false;
  if (piece(socle_).dim() != 1) return false;
  const auto& w = ring().weights();
  const int maxw = *std::max_element(w.begin(), w.end());
  for (int m = socle_ + 1; m <= socle_ + maxw; ++m) {
    if (piece(m).dim() != 0) return false;
  }
  return true;
}

std::size_t JacobianRing::total_dimension() const {
  std::size_t total = 0;
  for (auto d : hilbert_function(socle_)) total += d;
  return total;
}

Row JacobianRing::reduce(const Poly& p) const {
  if (p.is_zero()) fail(ErrorKind::InvalidArgument, "reduce needs a nonzero homogeneous element");
  return piece(weighted_degree(p)).reduce(p);
}

Row JacobianRing::multiply(const Poly& p, const Row& x, int m) const {
  const GradedPiece& src = piece(m);
  if (p.is_zero()) return {};
  const GradedPiece& dst = piece(m + weighted_degree(p));
  Row out(dst.dim(), Scalar::zero(field()));
  if (dst.dim() == 0) return out;
  for (std::size_t b = 0; b < src.dim(); ++b) {
    if (x[b].is_zero()) continue;
    for (const auto& [mu, c] : p.terms()) {
      add_scaled(out, c * x[b], dst.normal_form.at(mu * src.basis[b]));
    }
  }
  return out;
}

Poly JacobianRing::lift(const Row& x, int m) const {
  const GradedPiece& pc = piece(m);
  Poly out(ring_ptr());
  for (std::size_t b = 0; b < pc.dim(); ++b) out.add_term(pc.basis[b], x[b]);
  return out;
}

const Row& JacobianRing::socle_generator() const {
  std::call_once(ef_once_, [this] { ef_ = scheja_storch(*this, SplitStrategy::LowestVar); });
  return ef_;
}

std::vector<std::vector<Poly>> splitting_matrix(const JacobianRing& j, SplitStrategy strategy) {
  const auto& ring = j.ring();
  const int n = ring.num_vars();
  const FieldId field = j.field();
  std::vector<std::vector<Poly>> a(static_cast<std::size_t>(n), std::vector<Poly>(static_cast<std::size_t>(n), Poly(j.ring_ptr())));
  if (strategy == SplitStrategy::Hessian) {
    if (!ring.unweighted()) fail(ErrorKind::InvalidArgument, "the Hessian splitting needs all weights equal to 1");
    const Scalar em1 = Scalar::from_int(field, j.degree() - 1);
    if (em1.is_zero()) fail(ErrorKind::BadCharacteristic, "e - 1 is not invertible");
    const Scalar inv = em1.inv();
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < n; ++k) {
        a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
            partial_derivative(j.partials()[static_cast<std::size_t>(i)], k).scaled(inv);
      }
    }
    return a;
  }
  for (int i = 0; i < n; ++i) {
    for (const auto& [mu, c] : j.partials()[static_cast<std::size_t>(i)].terms()) {
      int pick = -1;
      for (int k = 0; k < n; ++k) {
        if (mu[k] == 0) continue;
        if (pick < 0 || strategy == SplitStrategy::HighestVar) pick = k;
        if (strategy == SplitStrategy::LowestVar) break;
      }
      if (pick < 0) fail(ErrorKind::NotFiniteDimensional, "a partial derivative has a constant term");
      Monomial q = mu;
      q[pick] = static_cast<std::uint16_t>(q[pick] - 1);
      a[static_cast<std::size_t>(i)][static_cast<std::size_t>(pick)].add_term(q, c);
    }
  }
  return a;
}

Row scheja_storch(const JacobianRing& j, SplitStrategy strategy) {
  if (!j.is_finite_dimensional()) fail(ErrorKind::NotFiniteDimensional, "J(F) is not finite-dimensional (F is singular)");
  const auto a = splitting_matrix(j, strategy);
  const auto& ring = j.ring();
  const int n = ring.num_vars();
  const FieldId field = j.field();
  const int e = j.degree();

  // minors[mask]: det of rows 0..k-1 and the columns in mask, reduced in J.
  std::vector<Row> minors(std::size_t{1} << n);
  std::vector<int> deg(std::size_t{1} << n, 0);
  minors[0] = Row{Scalar::one(field)};
  std::vector<int> row_prefix(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 0; i < n; ++i) row_prefix[static_cast<std::size_t>(i) + 1] = row_prefix[static_cast<std::size_t>(i)] + e - ring.weight(i);
  for (unsigned mask = 1; mask < (1U << n); ++mask) {
    const int k = std::popcount(mask);
    const int row = k - 1;
    int d = row_prefix[static_cast<std::size_t>(k)];
    for (int c = 0; c < n; ++c) {
      if (mask & (1U << c)) d -= ring.weight(c);
    }
    deg[mask] = d;
    Row acc(j.piece(d).dim(), Scalar::zero(field));
    int pos = 0;
    for (int c = 0; c < n; ++c) {
      if (!(mask & (1U << c))) continue;
      const Poly& entry = a[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)];
      const unsigned sub = mask & ~(1U << c);
      if (!entry.is_zero() && !minors[sub].empty() && !all_zero(minors[sub])) {
        const Row prod = j.multiply(entry, minors[sub], deg[sub]);
        add_scaled(acc, Scalar::from_int(field, (row + pos) % 2 == 0 ? 1 : -1), prod);
      }
      ++pos;
    }
    minors[mask] = std::move(acc);
  }
  return minors[(1U << n) - 1];
}

Matrix pairing_block(const JacobianRing& j, int m) {
  const int socle = j.socle_degree();
  const GradedPiece& left = j.piece(m);
  const GradedPiece& right = j.piece(socle - m);
  const FieldId field = j.field();
  Matrix out = zero_matrix(field, left.dim(), right.dim());
  if (left.dim() == 0 || right.dim() == 0) return out;
  const Row& ef = j.socle_generator();
  if (ef.size() != 1 || ef[0].is_zero()) fail(ErrorKind::ZeroSocleGenerator, "the Scheja-Storch element vanishes");
  const Scalar inv = ef[0].inv();
  const GradedPiece& top = j.piece(socle);
  for (std::size_t r = 0; r < left.dim(); ++r) {
    for (std::size_t c = 0; c < right.dim(); ++c) {
      const Scalar& v = top.normal_form.at(left.basis[r] * right.basis[c])[0];
      if (!v.is_zero()) out[r][c] = v * inv;
    }
  }
  return out;
}

Matrix gram_matrix(const JacobianRing& j, const std::vector<int>& degrees) {
  if (!j.is_finite_dimensional()) fail(ErrorKind::NotFiniteDimensional, "J(F) is not finite-dimensional (F is singular)");
  std::vector<std::size_t> offset;
  std::size_t total = 0;
  for (int m : degrees) {
    offset.push_back(total);
    total += j.piece(m).dim();
  }
  Matrix g = zero_matrix(j.field(), total, total);
  for (std::size_t a = 0; a < degrees.size(); ++a) {
    for (std::size_t b = 0; b < degrees.size(); ++b) {
      if (degrees[a] + degrees[b] != j.socle_degree()) continue;
      const Matrix blk = pairing_block(j, degrees[a]);
      for (std::size_t r = 0; r < blk.size(); ++r) {
        for (std::size_t c = 0; c < blk[r].size(); ++c) g[offset[a] + r][offset[b] + c] = blk[r][c];
      }
    }
  }
  return g;
}

std::vector<int> primitive_degrees(const JacobianRing& j, int n) {
  std::vector<int> out;
  const int wsum = j.ring().weight_sum();
  for (int q = 0; q <= n; ++q) {
    const int m = (q + 1) * j.degree() - wsum;
    if (m >= 0) out.push_back(m);
  }
  return out;
}

GWClass jacobian_form(const JacobianRing& j, const std::vector<int>& degrees) {
  if (!j.is_finite_dimensional()) fail(ErrorKind::NotFiniteDimensional, "J(F) is not finite-dimensional (F is singular)");
  const int socle = j.socle_degree();
  std::set<int> present;
  for (int m : degrees) {
    if (m >= 0 && m <= socle && j.piece(m).dim() > 0) present.insert(m);
  }
  GWClass q(j.field());
  for (int m : present) {
    const int partner = socle - m;
    if (!present.count(partner)) {
      fail(ErrorKind::DegenerateForm, "degree " + std::to_string(m) + " pairs with degree " + std::to_string(partner) + ", which is not included");
    }
    if (m > partner) continue;
    const Matrix blk = pairing_block(j, m);
    if (m == partner) {
      q += diagonalize(blk).form;
      continue;
    }
    if (blk.size() != blk[0].size() || !is_nonsingular(blk)) {
      fail(ErrorKind::DegenerateForm, "the pairing between degrees " + std::to_string(m) + " and " + std::to_string(partner) + " is degenerate");
    }
    q.add_hyperbolic(static_cast<long>(blk.size()));
  }
  return q;
}

GWClass jacobian_form_full(const JacobianRing& j) {
  std::vector<int> all;
  for (int m = 0; m <= j.socle_degree(); ++m) all.push_back(m);
  return jacobian_form(j, all);
}

GWClass jacobian_form_primitive(const JacobianRing& j, int n) { return jacobian_form(j, primitive_degrees(j, n)); }

bool CoverCheck::holds() const {
  if (e_g.size() != predicted.size()) return false;
  for (std::size_t i = 0; i < e_g.size(); ++i) {
    if (!(e_g[i] == predicted[i])) return false;
  }
  return true;
}

CoverCheck weighted_cover_check(const JacobianRing& j_f) {
  const auto& ring = j_f.ring();
  const JacobianRing j_g(substitute_powers(j_f.polynomial()));
  CoverCheck out;
  out.e_g = scheja_storch(j_g, SplitStrategy::LowestVar);
  const Poly ef = j_f.lift(j_f.socle_generator(), j_f.socle_degree());
  const FieldId field = j_f.field();
  long long prod_a = 1;
  Monomial corr;
  for (int i = 0; i < ring.num_vars(); ++i) {
    prod_a *= ring.weight(i);
    corr[i] = static_cast<std::uint16_t>(2 * (ring.weight(i) - 1));
  }
  Poly factor = Poly::monomial(j_g.ring_ptr(), corr, Scalar::from_int(field, prod_a));
  Poly pulled(j_g.ring_ptr(), substitute_powers(ef).terms());
  out.predicted = j_g.reduce(factor * pulled);
  return out;
}

std::string jacobian_json(const JacobianRing& j) {
  nlohmann::ordered_json out;
  out["field"] = j.field().name();
  out["vars"] = j.ring().names();
  out["weights"] = j.ring().weights();
  out["poly"] = j.polynomial().to_string();
  out["degree"] = j.degree();
  out["socle_degree"] = j.socle_degree();
  const bool finite = j.is_finite_dimensional();
  out["finite_dimensional"] = finite;
  const int top = std::max(j.socle_degree(), 0);
  out["hilbert_function"] = j.hilbert_function(top);
  if (finite) {
    out["dimension"] = j.total_dimension();
    const auto& top_piece = j.piece(j.socle_degree());
    out["socle_monomial"] = monomial_to_string(j.ring(), top_piece.basis[0]);
    nlohmann::ordered_json vec = nlohmann::ordered_json::array();
    for (const auto& s : j.socle_generator()) vec.push_back(s.to_string());
    out["socle_generator"] = vec;
  }
  return out.dump();
}

}  // namespace qe
