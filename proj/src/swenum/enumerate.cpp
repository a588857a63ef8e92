#include "flab/swenum/enumerate.hpp"

#include <algorithm>
#include <cstdint>
#include <thread>

#include "flab/checked.hpp"
#include "flab/error.hpp"
#include "flab/fourfold/rational_lattice.hpp"
#include "flab/fpgroup/smith.hpp"

namespace flab::swenum {

namespace {

using fourfold::RationalMatrix;
using fourfold::RationalVector;

IntVector pairing_row(const IntegerMatrix& q, const IntVector& h) { return q * h; }

bool passes(const IntegerMatrix& q, const ConstraintSet& c, const IntVector& v) {
  for (const auto& z : c.zero_pairing)
    for (const auto& cls : z.classes)
      if (fpgroup::bilinear(q, v, cls) != 0) return false;
  for (const auto& s : c.surfaces) {
    auto p = fpgroup::bilinear(q, v, s.homology);
    if (checked::abs(p) > s.bound()) return false;
  }
  return is_characteristic(v, q) && fpgroup::bilinear(q, v, v) == c.square;
}

void check_dimensions(const IntegerMatrix& q, const ConstraintSet& c) {
  if (q.rows() != q.cols()) throw Error(ErrorCode::DimensionMismatch, "form must be square");
  const std::size_t n = q.rows();
  for (const auto& s : c.surfaces)
    if (s.homology.size() != n) throw Error(ErrorCode::DimensionMismatch, "surface " + s.label + " has wrong length");
  for (const auto& z : c.zero_pairing)
    for (const auto& cls : z.classes)
      if (cls.size() != n) throw Error(ErrorCode::DimensionMismatch, "class in " + z.name + " has wrong length");
}

// Integer kernel of rows (m x k) as a k x k' matrix of basis columns.
IntegerMatrix integer_kernel(const IntegerMatrix& a) {
  const auto snf = fpgroup::smith_normal_form(a);
  const std::size_t r = snf.rank(), k = a.cols();
  std::vector<std::size_t> rows(k), cols;
  for (std::size_t i = 0; i < k; ++i) rows[i] = i;
  for (std::size_t j = r; j < k; ++j) cols.push_back(j);
  return snf.v.select(rows, cols);
}

// Solvability of (Q K) u = diag(Q) over GF(2).
bool characteristic_solvable(const IntegerMatrix& q, const IntegerMatrix& k) {
  const IntegerMatrix qk = q * k;
  const std::size_t n = qk.rows(), m = qk.cols();
  std::vector<std::vector<std::uint8_t>> a(n, std::vector<std::uint8_t>(m + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) a[i][j] = static_cast<std::uint8_t>(qk(i, j) & 1);
    a[i][m] = static_cast<std::uint8_t>(q(i, i) & 1);
  }
  std::size_t row = 0;
  for (std::size_t col = 0; col < m && row < n; ++col) {
    std::size_t p = row;
    while (p < n && !a[p][col]) ++p;
    if (p == n) continue;
    std::swap(a[p], a[row]);
    for (std::size_t i = 0; i < n; ++i)
      if (i != row && a[i][col])
        for (std::size_t j = col; j <= m; ++j) a[i][j] ^= a[row][j];
    ++row;
  }
  for (std::size_t i = row; i < n; ++i)
    if (a[i][m]) return false;
  return true;
}

// Odometer over the box [lo_0, hi_0] x [-B_j, B_j] for j >= 1.
std::vector<IntVector> scan(const IntegerMatrix& q, const ConstraintSet& c, const IntegerMatrix& k,
                            const std::vector<std::int64_t>& box, std::int64_t lo0, std::int64_t hi0,
                            std::size_t& scanned) {
  std::vector<IntVector> out;
  const std::size_t dim = box.size(), n = k.rows();
  IntVector u(dim);
  if (dim > 0) {
    if (lo0 > hi0) return out;
    u[0] = lo0;
    for (std::size_t j = 1; j < dim; ++j) u[j] = -box[j];
  }
  IntVector v(n);
  for (;;) {
    for (std::size_t i = 0; i < n; ++i) {
      std::int64_t acc = 0;
      for (std::size_t j = 0; j < dim; ++j) acc = checked::fma(acc, k(i, j), u[j]);
      v[i] = acc;
    }
    ++scanned;
    if (passes(q, c, v)) out.push_back(v);
    std::size_t j = dim;
    while (j > 0) {
      --j;
      const std::int64_t hi = j == 0 ? hi0 : box[j];
      if (u[j] < hi) {
        ++u[j];
        break;
      }
      u[j] = j == 0 ? lo0 : -box[j];
      if (j == 0) return out;
    }
    if (dim == 0) return out;
  }
}

std::int64_t floor_of(const mpq_class& x) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  if (!f.fits_slong_p()) throw Error(ErrorCode::ArithmeticOverflow, "search bound does not fit in 64 bits");
  return f.get_si();
}

}  // namespace

bool is_simple_type(const fourfold::FourManifoldModel& m) {
  return m.symplectic && fourfold::inertia(m.form).positive > 1;
}

ConstraintSet constraints_from_model(const fourfold::FourManifoldModel& m, bool simple_type) {
  ConstraintSet c;
  c.square = checked::add(checked::mul(2, m.euler), checked::mul(3, m.signature));
  for (const auto& s : m.surfaces) {
    if (!s.homology || s.genus < 1) continue;
    if (s.self_intersection < 0 && !simple_type) continue;
    c.surfaces.push_back({s.label, *s.homology, s.genus, s.self_intersection});
  }
  for (const auto& g : m.zero_pairing) {
    ZeroPairingConstraint z{g.name, g.labels, {}};
    for (const auto& l : g.labels) z.classes.push_back(m.basis_vector(l));
    c.zero_pairing.push_back(std::move(z));
  }
  return c;
}

EnumerationResult enumerate_basic_candidates(const IntegerMatrix& q, const ConstraintSet& c,
                                             const EnumerationOptions& opt) {
  check_dimensions(q, c);
  const std::size_t n = q.rows();
  auto label = [&](std::size_t i) {
    return i < opt.basis_labels.size() ? opt.basis_labels[i] : "e" + std::to_string(i + 1);
  };

  EnumerationResult res;
  IntegerMatrix k = IntegerMatrix::identity(n);
  for (const auto& z : c.zero_pairing) {
    std::vector<IntVector> rows;
    for (const auto& cls : z.classes) {
      const IntVector r = pairing_row(q, cls);
      IntVector rk(k.cols(), 0);
      for (std::size_t j = 0; j < k.cols(); ++j)
        for (std::size_t i = 0; i < n; ++i) rk[j] = checked::fma(rk[j], r[i], k(i, j));
      rows.push_back(std::move(rk));
    }
    auto zero_row = [&](std::size_t i) {
      for (std::size_t j = 0; j < k.cols(); ++j)
        if (k(i, j) != 0) return false;
      return true;
    };
    std::vector<bool> was_zero(n);
    for (std::size_t i = 0; i < n; ++i) was_zero[i] = zero_row(i);
    if (!rows.empty() && k.cols() > 0) k = k * integer_kernel(IntegerMatrix::from_rows(rows, k.cols()));
    EliminationStep step{z.name, z.classes.size(), k.cols(), {}};
    for (std::size_t i = 0; i < n; ++i)
      if (zero_row(i) && !was_zero[i]) step.forced_zero.push_back(label(i));
    res.trace.push_back(std::move(step));
  }
  const std::size_t dim = k.cols();

  if (!characteristic_solvable(q, k)) {
    if (opt.require_characteristic)
      throw Error(ErrorCode::NoCharacteristicVector, "no characteristic vector pairs to zero with the given classes");
    res.characteristic_exists = false;
    return res;
  }
  for (const auto& s : c.surfaces)
    if (s.bound() < 0) return res;  // nothing can satisfy |v.S| <= negative

  // Adjunction functionals in kernel coordinates.
  RationalMatrix f;
  std::vector<std::int64_t> bounds;
  for (const auto& s : c.surfaces) {
    const IntVector r = pairing_row(q, s.homology);
    RationalVector row(dim);
    for (std::size_t j = 0; j < dim; ++j) {
      std::int64_t acc = 0;
      for (std::size_t i = 0; i < n; ++i) acc = checked::fma(acc, r[i], k(i, j));
      row[j] = mpq_class(mpz_class(static_cast<long>(acc)));
    }
    f.push_back(std::move(row));
    bounds.push_back(s.bound());
  }
  std::vector<std::size_t> pick = dim == 0 ? std::vector<std::size_t>{} : fourfold::independent_rows(f);
  if (pick.size() < dim)
    throw Error(ErrorCode::UnboundedRegion, "adjunction surfaces span " + std::to_string(pick.size()) + " of " +
                                                std::to_string(dim) + " remaining directions");
  RationalMatrix m;
  for (auto i : pick) m.push_back(f[i]);
  res.box.assign(dim, 0);
  std::vector<mpq_class> widths(dim, 0);
  for (std::size_t s = 0; s < dim; ++s) {
    RationalVector e(dim, 0);
    e[s] = 1;
    auto col = fourfold::solve(m, e);  // column s of M^-1
    if (!col) throw Error(ErrorCode::UnboundedRegion, "adjunction system is singular");
    for (std::size_t j = 0; j < dim; ++j) widths[j] += abs((*col)[j]) * bounds[pick[s]];
  }
  std::size_t points = 1;
  for (std::size_t j = 0; j < dim; ++j) {
    res.box[j] = floor_of(widths[j]);
    const auto side = static_cast<std::size_t>(2 * res.box[j] + 1);
    if (points > opt.max_points / side)
      throw Error(ErrorCode::SearchTooLarge, "search box exceeds " + std::to_string(opt.max_points) + " points");
    points *= side;
  }

  const unsigned workers = dim == 0 ? 1 : std::max(1u, std::min<unsigned>(opt.workers, 2 * res.box[0] + 1));
  std::vector<std::vector<IntVector>> parts(workers);
  std::vector<std::size_t> counts(workers, 0);
  const std::int64_t lo = dim == 0 ? 0 : -res.box[0], total = dim == 0 ? 1 : 2 * res.box[0] + 1;
  auto run = [&](unsigned w) {
    const std::int64_t a = lo + total * w / workers, b = lo + total * (w + 1) / workers - 1;
    parts[w] = scan(q, c, k, res.box, a, b, counts[w]);
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(run, w);
    for (auto& t : threads) t.join();
  }
  for (unsigned w = 0; w < workers; ++w) {
    res.points_scanned += counts[w];
    for (auto& v : parts[w]) res.candidates.push_back(std::move(v));
  }
  std::sort(res.candidates.begin(), res.candidates.end());
  res.candidates.erase(std::unique(res.candidates.begin(), res.candidates.end()), res.candidates.end());
  for (const auto& v : res.candidates) {
    IntVector neg(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) neg[i] = checked::neg(v[i]);
    if (!std::binary_search(res.candidates.begin(), res.candidates.end(), neg))
      throw Error(ErrorCode::InconsistentModel, "candidate set is not closed under negation");
  }
  return res;
}

std::vector<IntVector> brute_force_candidates(const IntegerMatrix& q, const ConstraintSet& c, std::int64_t bound) {
  check_dimensions(q, c);
  const std::size_t n = q.rows();
  std::vector<IntVector> out;
  IntVector v(n, -bound);
  for (;;) {
    if (passes(q, c, v)) out.push_back(v);
    std::size_t j = n;
    for (;;) {
      if (j == 0) return out;
      --j;
      if (v[j] < bound) {
        ++v[j];
        break;
      }
      v[j] = -bound;
    }
  }
}

std::optional<IntVector> canonical_from_candidates(const IntegerMatrix& q, const std::vector<AdjunctionSurface>& symplectic,
                                                   const std::vector<IntVector>& candidates) {
  std::optional<IntVector> found;
  for (const auto& v : candidates) {
    bool ok = true;
    for (const auto& s : symplectic) ok = ok && fpgroup::bilinear(q, v, s.homology) == s.bound();
    if (!ok) continue;
    if (found) return std::nullopt;
    found = v;
  }
  return found;
}

std::string format_class(const IntVector& v, const std::vector<std::string>& labels) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    const std::string name = i < labels.size() ? labels[i] : "e" + std::to_string(i + 1);
    if (v[i] < 0)
      s += "-";
    else if (!s.empty())
      s += "+";
    const auto a = v[i] < 0 ? -v[i] : v[i];
    if (a != 1) s += std::to_string(a);
    s += name;
  }
  return s.empty() ? "0" : s;
}

}  // namespace flab::swenum
